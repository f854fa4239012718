// Randomized invariants. Set ATORIC_SEED to reproduce a run.
#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "atoric/ingredients.hpp"
#include "atoric/io.hpp"
#include "atoric/numerics.hpp"
#include "gen.hpp"

namespace atoric {
namespace {

using testing::Rng;

constexpr int N = 6;

class Seeded : public ::testing::Test {
 protected:
  void SetUp() override { RecordProperty("seed", std::to_string(testing::test_seed())); }
  Rng rng;
};

using JetProperties = Seeded;
using LabelProperties = Seeded;
using BaseProperties = Seeded;
using IngredientProperties = Seeded;
using NumericProperties = Seeded;

TEST_F(JetProperties, ComposeYIsAssociative) {
  for (int trial = 0; trial < 30; ++trial) {
    Jet2 f = testing::random_action_series(rng, N, 3);
    Jet2 g = testing::random_chart(rng, N, 2).second;
    Jet2 h = testing::random_chart(rng, N, 2).second;
    EXPECT_EQ(compose_y(compose_y(f, g), h), compose_y(f, compose_y(g, h)));
  }
}

TEST_F(JetProperties, InvertYIsTwoSided) {
  for (int trial = 0; trial < 30; ++trial) {
    Jet2 g = testing::random_chart(rng, N, 4).second;
    EXPECT_EQ(compose_y(g, invert_y(g)), Jet2::y(N));
    EXPECT_EQ(compose_y(invert_y(g), g), Jet2::y(N));
  }
}

TEST_F(JetProperties, GammaPullbackIsRingAutomorphism) {
  for (int trial = 0; trial < 30; ++trial) {
    Jet2 a = testing::random_action_series(rng, N, 4);
    Jet2 b = testing::random_chart(rng, N, 4).second;
    for (ArithKind k : {ArithKind::kAdd, ArithKind::kSub, ArithKind::kMul}) {
      EXPECT_EQ(gamma_pullback(jet_arith(a, b, k)), jet_arith(gamma_pullback(a), gamma_pullback(b), k));
    }
    EXPECT_EQ(gamma_pullback(gamma_pullback(a)), a);
  }
}

TEST_F(LabelProperties, CyclicActionPreservesValidity) {
  for (int m = 1; m <= 4; ++m) {
    FocusLabel label = testing::random_label(rng, m, N);
    for (int w = -m; w <= 2 * m; ++w) {
      FocusLabel r = cyclic_act(w, label);
      EXPECT_TRUE(verify_label(m, r.s_reps(), r.g_all()).ok());
    }
  }
}

TEST_F(LabelProperties, CocycleClosure) {
  for (int trial = 0; trial < 30; ++trial) {
    Jet2 g01 = testing::random_chart(rng, N, 3).second;
    Jet2 s1 = testing::random_action_series(rng, N, 3);
    std::vector<Jet2> s{compose_y(s1, g01), s1};
    std::vector<Jet2> g{Jet2::y(N), g01, invert_y(g01), Jet2::y(N)};
    EXPECT_TRUE(verify_label(2, s, g).ok()) << verify_label(2, s, g).to_string();
  }
}

TEST_F(LabelProperties, MutationsAreCaught) {
  using testing::Mutation;
  for (int trial = 0; trial < 40; ++trial) {
    const int m = static_cast<int>(rng.uniform(1, 3));
    auto data = testing::random_label_data(rng, m, N);
    auto kind = static_cast<Mutation>(trial % 5);
    std::string tag = testing::mutate(rng, data, kind);
    LabelReport r = verify_label(m, data.s, data.g);
    bool found = false;
    for (const auto& v : r.violations) found = found || tag == to_string(v.condition);
    EXPECT_TRUE(found) << "m=" << m << " expected " << tag << " got\n" << r.to_string();
  }
}

TEST_F(LabelProperties, TransitionSeriesSatisfiesCocycle) {
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<JetMap> e = testing::random_compatible_germs(rng, N, 3);
    Jet2 uv = transition_series(e[0], e[1]);
    Jet2 vw = transition_series(e[1], e[2]);
    Jet2 uw = transition_series(e[0], e[2]);
    EXPECT_EQ(uw, compose_y(vw, uv));
    EXPECT_EQ(transition_series(e[0], e[0]), Jet2::y(N));
  }
}

TEST_F(LabelProperties, FlipIsInvolutionOnOrbits) {
  for (int trial = 0; trial < 20; ++trial) {
    const int m = static_cast<int>(rng.uniform(1, 4));
    FocusLabel label = testing::random_label(rng, m, N);
    FocusLabel f = flip_label(label);
    EXPECT_TRUE(verify_label(m, f.s_reps(), f.g_all()).ok());
    EXPECT_TRUE(labels_equal(flip_label(f), label));
  }
}

TEST_F(LabelProperties, TwistingIndexIsAdditive) {
  for (int trial = 0; trial < 30; ++trial) {
    Jet2 base = testing::random_action_series(rng, N, 3);
    long i = rng.uniform(-5, 5), j = rng.uniform(-5, 5);
    RelativeActionSeries a(base);
    RelativeActionSeries b(base + Jet2::monomial(1, 0, Coeff::tau(i), N));
    RelativeActionSeries c(base + Jet2::monomial(1, 0, Coeff::tau(i + j), N));
    EXPECT_EQ(twisting_index(a, b), i);
    EXPECT_EQ(twisting_index(b, a), -i);
    EXPECT_EQ(twisting_index(a, c), twisting_index(a, b) + twisting_index(b, c));
  }
}

TEST_F(LabelProperties, LabelsEqualIsAnEquivalence) {
  for (int trial = 0; trial < 10; ++trial) {
    const int m = static_cast<int>(rng.uniform(1, 4));
    FocusLabel a = testing::random_label(rng, m, N);
    FocusLabel b = cyclic_act(rng.uniform(0, m - 1), a);
    FocusLabel c = cyclic_act(rng.uniform(0, m - 1), b);
    FocusLabel other = testing::random_label(rng, m, N);
    EXPECT_TRUE(labels_equal(a, a));
    EXPECT_EQ(labels_equal(a, b), labels_equal(b, a));
    EXPECT_TRUE(labels_equal(a, b) && labels_equal(b, c) && labels_equal(a, c));
    EXPECT_EQ(labels_equal(a, other), labels_equal(other, a));
  }
}

TEST_F(BaseProperties, IsoImagesValidate) {
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> mults;
    for (long i = rng.uniform(0, 3); i > 0; --i) mults.push_back(static_cast<int>(rng.uniform(1, 3)));
    BaseDiagram d = testing::random_diagram(rng, mults);
    ValidationReport r = validate_diagram(d);
    EXPECT_TRUE(r.ok()) << r.to_string();
  }
}

TEST_F(BaseProperties, IsoGroupoidLaws) {
  for (int trial = 0; trial < 20; ++trial) {
    BaseDiagram d = testing::random_diagram(rng, {1, 2});
    AffineIso g = testing::random_iso(rng, 2), h = testing::random_iso(rng, 2);
    BaseDiagram d1 = apply_iso(g, d), d2 = apply_iso(h, d1);
    ASSERT_TRUE(verify_iso(d, d1, g));
    ASSERT_TRUE(verify_iso(d1, d2, h));
    EXPECT_TRUE(verify_iso(d, d2, compose(h, g)));
    EXPECT_TRUE(verify_iso(d1, d, g.inverse()));
    EXPECT_TRUE(validate_diagram(d2).ok());
  }
}

TEST_F(BaseProperties, MonodromyStructure) {
  for (int m = 1; m <= 6; ++m) {
    IntMatrix2 mat = node_monodromy(m).matrix;
    EXPECT_EQ(mat.a + mat.d, 2);
    IntMatrix2 n{mat.a - 1, mat.b, mat.c, mat.d - 1};
    EXPECT_EQ(n * n, (IntMatrix2{0, 0, 0, 0}));
    // The first basis vector is invariant.
    EXPECT_EQ(mat.apply({1, 0}), (IntVec{1, 0}));
    EXPECT_EQ(smith_normal_form(n).d1, m);
  }
}

TEST_F(BaseProperties, BranchIndependence) {
  for (int trial = 0; trial < 100; ++trial) {
    const int m = static_cast<int>(rng.uniform(1, 6));
    std::complex<double> z = std::polar(rng.real(0.05, 0.95), rng.real(-3.1, 3.1));
    auto c = change_of_basis(standard_lattice(m, z, Branch::sheet(static_cast<int>(rng.uniform(-3, 3)))),
                             standard_lattice(m, z, Branch::sheet(static_cast<int>(rng.uniform(-3, 3)))));
    for (auto& row : c) {
      for (double v : row) EXPECT_NEAR(v, std::round(v), 1e-9);
    }
    EXPECT_NEAR(std::abs(c[0][0] * c[1][1] - c[0][1] * c[1][0]), 1.0, 1e-9);
  }
}

TEST_F(IngredientProperties, PermutationAction) {
  for (int trial = 0; trial < 10; ++trial) {
    const int f = static_cast<int>(rng.uniform(1, 4));
    CompleteIngredient a = testing::random_ingredient(rng, f, 2, 4);
    Permutation id;
    for (int i = 0; i < f; ++i) id.push_back(static_cast<std::size_t>(i));
    EXPECT_EQ(act_perm(id, a), a);
    Permutation r1 = testing::random_permutation(rng, static_cast<std::size_t>(f));
    Permutation r2 = testing::random_permutation(rng, static_cast<std::size_t>(f));
    EXPECT_EQ(act_perm(perm_product(r1, r2), a), act_perm(r1, act_perm(r2, a)));
    EXPECT_TRUE(validate_ingredient(act_perm(r1, a)).ok());
  }
}

TEST_F(IngredientProperties, SignActionInvolutive) {
  for (int trial = 0; trial < 10; ++trial) {
    const int f = static_cast<int>(rng.uniform(1, 3));
    CompleteIngredient a = testing::random_ingredient(rng, f, 2, 4);
    std::vector<int> sigma;
    for (int i = 0; i < f; ++i) sigma.push_back(rng.coin() ? 1 : -1);
    SignVector sv = SignVector::with_zero_deltas(sigma);
    CompleteIngredient twice = act_sign(sv, act_sign(sv, a));
    EXPECT_TRUE(same_presentation(twice.base, a.base));
    for (int i = 0; i < f; ++i) EXPECT_TRUE(labels_equal(twice.labels[i], a.labels[i]));
    EXPECT_EQ(twice.k, a.k);
  }
}

TEST_F(IngredientProperties, EquivalenceSymmetric) {
  for (int trial = 0; trial < 10; ++trial) {
    CompleteIngredient a = testing::random_ingredient(rng, static_cast<int>(rng.uniform(1, 2)), 2, 4);
    CompleteIngredient b = apply_iso(testing::random_iso(rng, 2), a);
    auto ab = ingredients_equivalent(a, b, 3);
    auto ba = ingredients_equivalent(b, a, 3);
    EXPECT_TRUE(ab && ba);
  }
}

TEST_F(IngredientProperties, SerializationRoundTrip) {
  for (int trial = 0; trial < 20; ++trial) {
    CompleteIngredient a = testing::random_ingredient(rng, static_cast<int>(rng.uniform(0, 3)), 3, 5);
    EXPECT_EQ(io::parse_ingredient(io::serialize_ingredient(a)), a);
  }
}

TEST_F(NumericProperties, ExpInvertsLnPlus) {
  for (int trial = 0; trial < 10000; ++trial) {
    std::complex<double> c = std::polar(rng.real(1e-3, 10.0), rng.real(-3.14159, 3.14159));
    if (std::abs(c.real()) < 1e-12 && c.imag() > 0) continue;
    std::complex<double> back = std::exp(numerics::ln_plus(c));
    EXPECT_NEAR(std::abs(back - c), 0.0, 1e-14 * std::max(1.0, std::abs(c)));
  }
}

TEST_F(NumericProperties, LnPlusArgumentRange) {
  for (int trial = 0; trial < 1000; ++trial) {
    std::complex<double> c(rng.real(-2, 2), rng.real(-2, 2));
    double arg = numerics::ln_plus(c).imag();
    EXPECT_GT(arg, -1.5 * std::numbers::pi);
    EXPECT_LE(arg, 0.5 * std::numbers::pi);
  }
}

}  // namespace
}  // namespace atoric
