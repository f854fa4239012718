#include "atoric/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <numbers>
#include <string>

namespace atoric::numerics {

namespace {

constexpr double kPi = std::numbers::pi;

// Fornberg weights for the k-th derivative at 0 from samples at `nodes`.
std::vector<double> fd_weights(const std::vector<double>& nodes, int k) {
  const std::size_t n = nodes.size();
  std::vector<std::vector<double>> c(n, std::vector<double>(static_cast<std::size_t>(k) + 1, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0];
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t mn = std::min<std::size_t>(i, static_cast<std::size_t>(k));
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i];
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t s = mn; s >= 1; --s) {
          c[i][s] = c1 * (static_cast<double>(s) * c[i - 1][s - 1] - c5 * c[i - 1][s]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (std::size_t s = mn; s >= 1; --s) {
        c[j][s] = (c4 * c[j][s] - static_cast<double>(s) * c[j][s - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = c[i][static_cast<std::size_t>(k)];
  return w;
}

// Stencil in grid units: offsets j + 1/2 (multiplied by h, or 3h for the
// coarse Richardson partner), plus its formal accuracy order.
struct Stencil {
  std::vector<double> offsets;  // in units of the stencil spacing
  int accuracy = 0;
};

Stencil make_stencil(int k, StencilSide side) {
  Stencil st;
  if (side == StencilSide::kCentral) {
    int n = std::max(4, k + 2);
    if (n % 2) ++n;
    for (int j = 0; j < n / 2; ++j) {
      st.offsets.push_back(-(j + 0.5));
      st.offsets.push_back(j + 0.5);
    }
    st.accuracy = n - k + ((n - k) % 2);
  } else {
    const int n = k + 3;
    const double sign = side == StencilSide::kRight ? 1.0 : -1.0;
    for (int j = 0; j < n; ++j) st.offsets.push_back(sign * (j + 0.5));
    st.accuracy = n - k;
  }
  return st;
}

// Grid index of the point at coordinate (i + 1/2) h.
std::optional<std::size_t> grid_index(const std::vector<double>& axis, double units) {
  // axis[0] = (i0 + 1/2) h
  const double h = axis.size() > 1 ? axis[1] - axis[0] : 1.0;
  const double pos = (units * h - axis.front()) / h;
  const long idx = std::lround(pos);
  if (idx < 0 || static_cast<std::size_t>(idx) >= axis.size()) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// d^p/dx^p d^q/dy^q f(0, 0) with stencils scaled by `scale` grid spacings.
double mixed_derivative(const SampledFunction& f, int p, int q, StencilSide side, int scale) {
  const Stencil sx = make_stencil(p, side);
  const Stencil sy = make_stencil(q, StencilSide::kCentral);
  const double h = f.grid.h * scale;
  std::vector<double> wx = fd_weights(sx.offsets, p);
  std::vector<double> wy = fd_weights(sy.offsets, q);
  double total = 0.0;
  for (std::size_t a = 0; a < sx.offsets.size(); ++a) {
    auto ix = grid_index(f.xs, sx.offsets[a] * scale);
    if (!ix) throw std::invalid_argument("grid too coarse for requested order");
    for (std::size_t b = 0; b < sy.offsets.size(); ++b) {
      auto iy = grid_index(f.ys, sy.offsets[b] * scale);
      if (!iy) throw std::invalid_argument("grid too coarse for requested order");
      total += wx[a] * wy[b] * f.at(*ix, *iy);
    }
  }
  return total / (std::pow(h, p) * std::pow(h, q));
}

}  // namespace

double evaluate(const Coeff& c) { return c.rational_part().get_d() + kTau * c.tau_part().get_d(); }

double evaluate(const Jet2& f, double x, double y) {
  double total = 0.0;
  for (const auto& t : f.terms()) total += evaluate(t.c) * std::pow(x, t.p) * std::pow(y, t.q);
  return total;
}

std::complex<double> evaluate(const JetMap& e, double x, double y) {
  return {evaluate(e.first, x, y), evaluate(e.second, x, y)};
}

std::complex<double> ln_plus(std::complex<double> c) {
  if (c == 0.0) throw BranchCutError("ln+ undefined at 0");
  if (c.real() == 0.0 && c.imag() > 0.0) throw BranchCutError("ln+ undefined on the positive imaginary axis");
  double arg = std::arg(c);
  if (arg > kPi / 2) arg -= 2 * kPi;
  return {std::log(std::abs(c)), arg};
}

double k_plus(std::complex<double> c) {
  if (c == 0.0) return 0.0;
  return -(c * ln_plus(c) - c).imag();
}

std::vector<double> GridSpec::axis() const {
  std::vector<double> out;
  const long reach = static_cast<long>(std::floor(half_width / h - 0.5 + 1e-9));
  for (long i = -reach - 1; i <= reach; ++i) out.push_back((static_cast<double>(i) + 0.5) * h);
  return out;
}

SampledFunction regularized_action(const Jet2& s_tilde, std::span<const JetMap> e_list, const GridSpec& grid) {
  SampledFunction out;
  out.grid = grid;
  out.xs = grid.axis();
  out.ys = out.xs;
  out.values.reserve(out.xs.size() * out.ys.size());
  for (double y : out.ys) {
    for (double x : out.xs) {
      double total = evaluate(s_tilde, x, y);
      for (const auto& e : e_list) {
        const std::complex<double> c = evaluate(e, x, y);
        if (std::abs(c.real()) <= 1e-14 && c.imag() > 0.0) {
          throw BranchCutError("grid point (" + std::to_string(x) + ", " + std::to_string(y) + ") touches the cut");
        }
        total += k_plus(c);
      }
      out.values.push_back(total / (2 * kPi));
    }
  }
  return out;
}

Jet2 taylor_coefficients(const SampledFunction& f, int order, StencilSide side) {
  Jet2 out(order);
  for (int d = 0; d <= order; ++d) {
    for (int q = 0; q <= d; ++q) {
      const int p = d - q;
      const int acc = std::min(make_stencil(p, side).accuracy, make_stencil(q, StencilSide::kCentral).accuracy);
      const double fine = mixed_derivative(f, p, q, side, 1);
      const double coarse = mixed_derivative(f, p, q, side, 3);
      const double factor = std::pow(3.0, acc);
      const double value = (factor * fine - coarse) / (factor - 1.0) / (factorial(p) * factorial(q));
      out.set(p, q, Coeff(Rational(value)));
    }
  }
  return out;
}

std::vector<RelativeActionSeries> extract_relative_series(const SampledFunction& a2, std::span<const JetMap> e_list,
                                                          int order, StencilSide side) {
  if (order < 1 || order > 4) throw std::invalid_argument("extraction order must be in 1..4");
  if (a2.grid.h > 1e-2) throw std::invalid_argument("grid too coarse: spacing must be <= 1e-2");
  SampledFunction s_tilde = a2;
  for (std::size_t iy = 0; iy < a2.ys.size(); ++iy) {
    for (std::size_t ix = 0; ix < a2.xs.size(); ++ix) {
      double v = 2 * kPi * a2.at(ix, iy);
      for (const auto& e : e_list) v -= k_plus(evaluate(e, a2.xs[ix], a2.ys[iy]));
      s_tilde.values[iy * a2.xs.size() + ix] = v;
    }
  }
  Jet2 taylor = taylor_coefficients(s_tilde, order, side);
  // The relative action series have zero constant term.
  taylor.set(0, 0, Coeff());
  std::vector<RelativeActionSeries> out;
  for (const auto& e : e_list) {
    JetMap e_trunc{e.first.truncated(std::min(order, e.order())), e.second.truncated(std::min(order, e.order()))};
    if (e_trunc.order() != order) throw std::invalid_argument("coordinate germ has lower order than requested");
    out.emplace_back(compose(taylor, inverse(e_trunc)));
  }
  return out;
}

double max_coefficient_error(const Jet2& a, const Jet2& b) {
  const int n = std::min(a.order(), b.order());
  double worst = 0.0;
  for (int d = 0; d <= n; ++d) {
    for (int q = 0; q <= d; ++q) {
      worst = std::max(worst, std::abs(evaluate(a.coeff(d - q, q)) - evaluate(b.coeff(d - q, q))));
    }
  }
  return worst;
}

}  // namespace atoric::numerics
