#include <gtest/gtest.h>

#include "atoric/coeff.hpp"
#include "atoric/io.hpp"
#include "atoric/jet2.hpp"
#include "gen.hpp"

namespace atoric {
namespace {

Jet2 P(const std::string& text, int order = kDefaultOrder) { return io::parse_polynomial(text, order); }

// f(X, g) expanded term by term with repeated products.
Jet2 naive_compose_y(const Jet2& f, const Jet2& g) {
  const int n = f.order();
  Jet2 out(n);
  for (const auto& t : f.terms()) {
    Jet2 term = Jet2::monomial(t.p, 0, t.c, n);
    for (int i = 0; i < t.q; ++i) term = term * g;
    out += term;
  }
  return out;
}

TEST(Coeff, RingArithmetic) {
  Coeff a(Rational(1, 2), Rational(3));
  Coeff b(Rational(-1, 3));
  EXPECT_EQ(a + b, Coeff(Rational(1, 6), Rational(3)));
  EXPECT_EQ(a * b, Coeff(Rational(-1, 6), Rational(-1)));
  EXPECT_EQ(a / Coeff(2), Coeff(Rational(1, 4), Rational(3, 2)));
  EXPECT_EQ(-a, Coeff(Rational(-1, 2), Rational(-3)));
}

TEST(Coeff, TauSquaredLeavesTheRing) {
  EXPECT_THROW(Coeff::tau(1) * Coeff::tau(1), CoeffRingError);
  EXPECT_THROW(Coeff(1) / Coeff::tau(1), CoeffRingError);
  EXPECT_THROW(Coeff(1) / Coeff(0), std::domain_error);
}

TEST(Coeff, SignIsExact) {
  EXPECT_EQ(Coeff(Rational(7), Rational(-1)).sign(), 1);
  EXPECT_EQ(Coeff(Rational(62831853, 10000000), Rational(-1)).sign(), -1);
  EXPECT_EQ(Coeff(Rational(-62831854, 10000000), Rational(1)).sign(), -1);
  EXPECT_EQ(Coeff(0).sign(), 0);
  EXPECT_EQ(Coeff::tau(Rational(1, 1000)).sign(), 1);
}

TEST(Coeff, OrderIsRationalThenTau) {
  EXPECT_LT(Coeff(Rational(1), Rational(5)), Coeff(Rational(2), Rational(-5)));
  EXPECT_LT(Coeff(Rational(1), Rational(-1)), Coeff(Rational(1), Rational(0)));
}

TEST(Coeff, ParseRational) {
  EXPECT_EQ(parse_rational("1/3"), Rational(1, 3));
  EXPECT_EQ(parse_rational("-4/6"), Rational(-2, 3));
  EXPECT_EQ(parse_rational("12"), Rational(12));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Jet2, Arithmetic) {
  EXPECT_EQ(jet_arith(Jet2::x(), Jet2::y(), ArithKind::kAdd), P("X+Y"));
  EXPECT_EQ(jet_arith(P("X+Y", 2), P("X-Y", 2), ArithKind::kMul), P("X^2-Y^2", 2));
  EXPECT_TRUE(jet_arith(Jet2::x(1), Jet2::x(1), ArithKind::kMul).is_zero());
  EXPECT_EQ(jet_arith(P("X", 3), P("X", 3), ArithKind::kSub), Jet2(3));
  EXPECT_THROW(jet_arith(Jet2(2), Jet2(3), ArithKind::kAdd), JetError);
}

TEST(Jet2, CoefficientAccess) {
  Jet2 f = P("3X^2Y+1/2Y^3-tX", 4);
  EXPECT_EQ(f.coeff(2, 1), Coeff(3));
  EXPECT_EQ(f.coeff(0, 3), Coeff(Rational(1, 2)));
  EXPECT_EQ(f.coeff(1, 0), Coeff::tau(-1));
  EXPECT_EQ(f.coeff(5, 5), Coeff(0));
  EXPECT_TRUE(f.has_tau());
  EXPECT_EQ(f.truncated(2), P("-tX", 2));
}

TEST(ComposeY, Examples) {
  EXPECT_EQ(compose_y(P("Y^2", 4), P("Y+XY", 4)), P("Y^2+2XY^2+X^2Y^2", 4));
  Jet2 f = P("1/2X+Y^2-3X^2Y+tY", 5);
  EXPECT_EQ(compose_y(f, Jet2::y(5)), f);
  EXPECT_EQ(compose_y(Jet2::x(5), P("Y+XY+Y^2", 5)), Jet2::x(5));
}

TEST(ComposeY, RejectsConstantTerm) {
  EXPECT_THROW(compose_y(P("Y", 3), P("1+Y", 3)), JetError);
}

TEST(ComposeY, MatchesTermwiseExpansion) {
  testing::Rng rng;
  for (int trial = 0; trial < 20; ++trial) {
    Jet2 f = testing::random_action_series(rng, 6, 4);
    Jet2 g = testing::random_chart(rng, 6, 3).second;
    EXPECT_EQ(compose_y(f, g), naive_compose_y(f, g));
  }
}

TEST(InvertY, Examples) {
  EXPECT_EQ(invert_y(P("Y+XY", 3)), P("Y-XY+X^2Y", 3));
  EXPECT_EQ(invert_y(Jet2::y(4)), Jet2::y(4));
  EXPECT_EQ(invert_y(P("2Y", 4)), P("1/2Y", 4));
  EXPECT_THROW(invert_y(P("X+Y^2", 4)), JetError);
  EXPECT_THROW(invert_y(P("tY", 4)), CoeffRingError);
}

TEST(InvertY, TwoSided) {
  testing::Rng rng;
  for (int trial = 0; trial < 20; ++trial) {
    Jet2 g = testing::random_chart(rng, 8, 3).second;
    Jet2 h = invert_y(g);
    EXPECT_EQ(compose_y(g, h), Jet2::y(8));
    EXPECT_EQ(compose_y(h, g), Jet2::y(8));
  }
}

TEST(GammaPullback, Examples) {
  EXPECT_EQ(gamma_pullback(P("X+Y+XY")), P("-X-Y+XY"));
  EXPECT_EQ(gamma_pullback(Jet2()), Jet2());
  Jet2 f = P("X^3-2XY+tY^2+1/5Y^5");
  EXPECT_EQ(gamma_pullback(gamma_pullback(f)), f);
}

TEST(JetMap, InverseAndComposition) {
  JetMap e{P("X+Y^2", 5), P("2Y+X^2-XY", 5)};
  JetMap id = JetMap::identity(5);
  EXPECT_EQ(compose(e, inverse(e)), id);
  EXPECT_EQ(compose(inverse(e), e), id);
  JetMap shear{P("X", 5), P("Y+1/2X^2", 5)};
  EXPECT_EQ(inverse(shear), (JetMap{P("X", 5), P("Y-1/2X^2", 5)}));
  EXPECT_EQ(compose(P("XY", 5), shear), P("XY+1/2X^3", 5));
}

}  // namespace
}  // namespace atoric
