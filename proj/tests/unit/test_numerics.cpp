#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "atoric/io.hpp"
#include "atoric/numerics.hpp"

namespace atoric::numerics {
namespace {

using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

TEST(LnPlus, Branch) {
  EXPECT_NEAR(std::abs(ln_plus(1.0)), 0.0, 1e-15);
  cd a = ln_plus(cd(0, -1));
  EXPECT_NEAR(a.real(), 0.0, 1e-15);
  EXPECT_NEAR(a.imag(), -pi / 2, 1e-15);
  cd b = ln_plus(-1.0);
  EXPECT_NEAR(b.imag(), -pi, 1e-15);
  cd c = ln_plus(cd(-1, 1e-9));
  EXPECT_NEAR(c.imag(), -pi - 1e-9, 1e-12);
  EXPECT_THROW(ln_plus(cd(0, 2)), BranchCutError);
  EXPECT_THROW(ln_plus(0.0), BranchCutError);
}

TEST(KPlus, Examples) {
  EXPECT_NEAR(k_plus(1.0), 0.0, 1e-15);
  EXPECT_NEAR(k_plus(cd(0, -1)), -1.0, 1e-14);
  EXPECT_EQ(k_plus(0.0), 0.0);
  for (double x : {1e-6, 0.3, 2.0, 17.5}) EXPECT_NEAR(k_plus(x), 0.0, 1e-15);
  // Oracle: -Im(c (ln|c| + i arg) - c) with arg taken in (-3pi/2, pi/2].
  cd z(-0.4, -0.3);
  double arg = std::atan2(z.imag(), z.real());
  if (arg > pi / 2) arg -= 2 * pi;
  cd l(std::log(std::abs(z)), arg);
  EXPECT_NEAR(k_plus(z), -(z * l - z).imag(), 1e-15);
}

TEST(Evaluate, Jets) {
  Jet2 f = io::parse_polynomial("2tY+X^2-1/2XY", 4);
  EXPECT_NEAR(evaluate(f, 0.5, 0.25), 2 * kTau * 0.25 + 0.25 - 0.0625, 1e-14);
  EXPECT_NEAR(evaluate(Coeff(1, 2)), 1 + 2 * kTau, 1e-14);
}

TEST(RegularizedAction, Examples) {
  GridSpec grid;
  JetMap id = JetMap::identity(4);
  std::vector<JetMap> one{id}, two{id, id};
  SampledFunction zero = regularized_action(Jet2(4), one, grid);
  // tau = 2 pi, so S~ = tau Y gives A^2 = Y + K+/2pi and 2 tau Y gives 2Y + K+/2pi.
  SampledFunction lin = regularized_action(io::parse_polynomial("tY", 4), one, grid);
  SampledFunction lin2 = regularized_action(io::parse_polynomial("2tY", 4), one, grid);
  SampledFunction dbl = regularized_action(Jet2(4), two, grid);
  ASSERT_EQ(zero.values.size(), zero.xs.size() * zero.ys.size());
  for (std::size_t iy = 0; iy < zero.ys.size(); ++iy) {
    for (std::size_t ix = 0; ix < zero.xs.size(); ++ix) {
      const double kp = k_plus(cd(zero.xs[ix], zero.ys[iy])) / (2 * pi);
      EXPECT_NEAR(zero.at(ix, iy), kp, 1e-15);
      EXPECT_NEAR(lin.at(ix, iy), zero.ys[iy] + kp, 1e-14);
      EXPECT_NEAR(lin2.at(ix, iy), 2 * zero.ys[iy] + kp, 1e-14);
      EXPECT_NEAR(dbl.at(ix, iy), 2 * kp, 1e-15);
    }
  }
}

TEST(Grid, HalfIntegerAxis) {
  GridSpec grid{0.01, 0.1};
  auto axis = grid.axis();
  ASSERT_EQ(axis.size(), 20u);
  EXPECT_NEAR(axis.front(), -0.095, 1e-15);
  EXPECT_NEAR(axis.back(), 0.095, 1e-15);
}

TEST(Taylor, RecoversPolynomialSamples) {
  GridSpec grid;
  SampledFunction f{grid, grid.axis(), grid.axis(), {}};
  for (double y : f.ys) {
    for (double x : f.xs) f.values.push_back(3 * x - y + 0.5 * x * y + 2 * y * y * y);
  }
  Jet2 t = taylor_coefficients(f, 3);
  EXPECT_NEAR(t.coeff(1, 0).rational_part().get_d(), 3.0, 1e-9);
  EXPECT_NEAR(t.coeff(0, 1).rational_part().get_d(), -1.0, 1e-9);
  EXPECT_NEAR(t.coeff(1, 1).rational_part().get_d(), 0.5, 1e-7);
  EXPECT_NEAR(t.coeff(0, 3).rational_part().get_d(), 2.0, 1e-4);
  EXPECT_NEAR(t.coeff(2, 0).rational_part().get_d(), 0.0, 1e-6);
}

double roundtrip(const std::string& stilde, const std::string& e2, int order) {
  constexpr int W = 8;
  Jet2 s = io::parse_polynomial(stilde, W);
  JetMap e{Jet2::x(W), io::parse_polynomial(e2, W)};
  std::vector<JetMap> list{e};
  auto got = extract_relative_series(regularized_action(s, list, GridSpec{}), list, order);
  Jet2 expected = compose(s, inverse(e)).truncated(order);
  return max_coefficient_error(got.front().rep(), expected);
}

TEST(Extract, RoundTripExamples) {
  EXPECT_LT(roundtrip("2tY+X^2", "Y", 2), 1e-3);
  EXPECT_LT(roundtrip("0", "Y", 2), 1e-3);
  EXPECT_LT(roundtrip("2tY+X^2-3XY+Y^3", "Y+1/2X^2", 3), 1e-2);
}

TEST(Extract, Preconditions) {
  std::vector<JetMap> list{JetMap::identity(4)};
  auto a2 = regularized_action(Jet2(4), list, GridSpec{});
  EXPECT_THROW(extract_relative_series(a2, list, 5), std::invalid_argument);
  auto coarse = regularized_action(Jet2(4), list, GridSpec{0.02, 0.2});
  EXPECT_THROW(extract_relative_series(coarse, list, 2), std::invalid_argument);
}

TEST(MaxCoefficientError, EvaluatesTau) {
  Jet2 a = io::parse_polynomial("tX", 2), b = io::parse_polynomial("6X", 2);
  EXPECT_NEAR(max_coefficient_error(a, b), kTau - 6, 1e-14);
}

}  // namespace
}  // namespace atoric::numerics
