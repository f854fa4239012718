#include "atoric/ingredients.hpp"

#include <stdexcept>
#include <string>

namespace atoric {

SignVector SignVector::with_zero_deltas(std::vector<int> sigma) {
  SignVector sv;
  sv.delta_k.assign(sigma.size(), 0);
  sv.sigma = std::move(sigma);
  return sv;
}

ValidationReport validate_ingredient(const CompleteIngredient& ingredient) {
  ValidationReport report = validate_diagram(ingredient.base);
  const std::size_t f = ingredient.node_count();
  if (ingredient.labels.size() != f) {
    report.add("ingredient", "compatibility",
               std::to_string(ingredient.labels.size()) + " labels for " + std::to_string(f) + " nodes");
  }
  if (ingredient.k.size() != f) {
    report.add("ingredient", "compatibility",
               std::to_string(ingredient.k.size()) + " twisting indices for " + std::to_string(f) + " nodes");
  }
  for (std::size_t i = 0; i < ingredient.labels.size(); ++i) {
    const FocusLabel& label = ingredient.labels[i];
    const std::string src = "label " + std::to_string(i + 1);
    auto s = label.s_reps();
    LabelReport lr = verify_label(label.multiplicity(), s, label.g_all());
    for (const auto& v : lr.violations) report.add(src, to_string(v.condition), v.detail);
    if (i < f && label.multiplicity() != ingredient.base.nodes[i].mult) {
      report.add(src, "compatibility",
                 "multiplicity " + std::to_string(label.multiplicity()) + " but node " + std::to_string(i + 1) +
                     " has multiplicity " + std::to_string(ingredient.base.nodes[i].mult));
    }
  }
  return report;
}

std::optional<AffineIso> ingredients_equivalent(const CompleteIngredient& a, const CompleteIngredient& b, int bound) {
  if (a.node_count() != b.node_count() || a.k != b.k || a.labels.size() != b.labels.size()) return std::nullopt;
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    if (!labels_equal(a.labels[i], b.labels[i])) return std::nullopt;
  }
  return find_iso(a.base, b.base, bound);
}

CompleteIngredient apply_iso(const AffineIso& g, const CompleteIngredient& ingredient) {
  return {apply_iso(g, ingredient.base), ingredient.labels, ingredient.k};
}

void require_permutation(const Permutation& rho, std::size_t f) {
  if (rho.size() != f) {
    throw std::invalid_argument("permutation of length " + std::to_string(rho.size()) + " for " +
                                std::to_string(f) + " nodes");
  }
  std::vector<bool> seen(f, false);
  for (std::size_t r : rho) {
    if (r >= f || seen[r]) throw std::invalid_argument("not a permutation");
    seen[r] = true;
  }
}

CompleteIngredient act_perm(const Permutation& rho, const CompleteIngredient& ingredient) {
  const std::size_t f = ingredient.node_count();
  require_permutation(rho, f);
  if (ingredient.labels.size() != f || ingredient.k.size() != f) {
    throw std::invalid_argument("act_perm: labels/k do not match the node count");
  }
  CompleteIngredient out{ingredient.base, {}, {}};
  out.base.nodes.clear();
  for (std::size_t i = 0; i < f; ++i) {
    out.base.nodes.push_back(ingredient.base.nodes[rho[i]]);
    out.labels.push_back(ingredient.labels[rho[i]]);
    out.k.push_back(ingredient.k[rho[i]]);
  }
  return out;
}

Permutation perm_product(const Permutation& rho1, const Permutation& rho2) {
  if (rho1.size() != rho2.size()) throw std::invalid_argument("perm_product: length mismatch");
  Permutation out(rho1.size());
  for (std::size_t i = 0; i < rho1.size(); ++i) out[i] = rho2.at(rho1[i]);
  return out;
}

CompleteIngredient act_sign(const SignVector& sv, const CompleteIngredient& ingredient) {
  const std::size_t f = ingredient.node_count();
  if (sv.sigma.size() != f || sv.delta_k.size() != f) {
    throw std::invalid_argument("act_sign: sign vector length does not match the node count");
  }
  if (ingredient.labels.size() != f || ingredient.k.size() != f) {
    throw std::invalid_argument("act_sign: labels/k do not match the node count");
  }
  CompleteIngredient out = ingredient;
  for (std::size_t i = 0; i < f; ++i) {
    if (sv.sigma[i] == 1) continue;
    if (sv.sigma[i] != -1) throw std::invalid_argument("act_sign: sign components must be +1 or -1");
    out.base = flip_cut(out.base, i);
    out.labels[i] = flip_label(out.labels[i]);
    out.k[i] = -out.k[i] + sv.delta_k[i];
  }
  return out;
}

bool sign_action_admissible(const SignVector& sv, const CompleteIngredient& ingredient) {
  try {
    return validate_diagram(act_sign(sv, ingredient).base).ok();
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace atoric
