#include <atoric/labels.hpp>

int main() {
  atoric::Jet2 g = atoric::Jet2::y(3) * atoric::Coeff(2);
  return atoric::compose_y(g, atoric::invert_y(g)) == atoric::Jet2::y(3) ? 0 : 1;
}
