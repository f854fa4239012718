#include <benchmark/benchmark.h>

#include "atoric/ingredients.hpp"
#include "atoric/io.hpp"
#include "atoric/numerics.hpp"
#include "gen.hpp"

namespace {

using namespace atoric;

void BM_ComposeY(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  testing::Rng rng(1);
  Jet2 f = testing::random_action_series(rng, n, 6);
  Jet2 g = testing::random_chart(rng, n, 4).second;
  for (auto _ : state) benchmark::DoNotOptimize(compose_y(f, g));
}
BENCHMARK(BM_ComposeY)->Arg(4)->Arg(8)->Arg(12);

void BM_InvertY(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  testing::Rng rng(2);
  Jet2 g = testing::random_chart(rng, n, 4).second;
  for (auto _ : state) benchmark::DoNotOptimize(invert_y(g));
}
BENCHMARK(BM_InvertY)->Arg(4)->Arg(8)->Arg(12);

void BM_InverseMap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  testing::Rng rng(3);
  JetMap e = testing::random_compatible_germs(rng, n, 1).front();
  for (auto _ : state) benchmark::DoNotOptimize(inverse(e));
}
BENCHMARK(BM_InverseMap)->Arg(4)->Arg(8);

void BM_VerifyLabel(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  testing::Rng rng(4);
  auto data = testing::random_label_data(rng, m, kDefaultOrder);
  for (auto _ : state) benchmark::DoNotOptimize(verify_label(m, data.s, data.g));
}
BENCHMARK(BM_VerifyLabel)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void BM_OrbitNormalForm(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  testing::Rng rng(5);
  FocusLabel label = testing::random_label(rng, m, kDefaultOrder);
  for (auto _ : state) benchmark::DoNotOptimize(orbit_normal_form(label));
}
BENCHMARK(BM_OrbitNormalForm)->Arg(2)->Arg(4);

void BM_FindIso(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  testing::Rng rng(6);
  BaseDiagram d = testing::random_diagram(rng, {1, 2, 1});
  BaseDiagram image = apply_iso(testing::random_iso(rng, bound), d);
  for (auto _ : state) benchmark::DoNotOptimize(find_iso(d, image, bound));
}
BENCHMARK(BM_FindIso)->Arg(1)->Arg(2)->Arg(3);

void BM_ValidateDiagram(benchmark::State& state) {
  std::vector<int> mults(static_cast<std::size_t>(state.range(0)), 1);
  BaseDiagram d = testing::roof_diagram(mults);
  for (auto _ : state) benchmark::DoNotOptimize(validate_diagram(d));
}
BENCHMARK(BM_ValidateDiagram)->Arg(1)->Arg(4)->Arg(16);

void BM_RoundTrip(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  Jet2 s = io::parse_polynomial("2tY+X^2-3XY+Y^3", 8);
  std::vector<JetMap> e{{Jet2::x(8), io::parse_polynomial("Y+1/2X^2", 8)}};
  for (auto _ : state) {
    auto a2 = numerics::regularized_action(s, e, numerics::GridSpec{});
    benchmark::DoNotOptimize(numerics::extract_relative_series(a2, e, order));
  }
}
BENCHMARK(BM_RoundTrip)->Arg(2)->Arg(4);

void BM_SerializeParse(benchmark::State& state) {
  testing::Rng rng(7);
  CompleteIngredient ing = testing::random_ingredient(rng, 3, 3, kDefaultOrder);
  for (auto _ : state) benchmark::DoNotOptimize(io::parse_ingredient(io::serialize_ingredient(ing)));
}
BENCHMARK(BM_SerializeParse);

}  // namespace

BENCHMARK_MAIN();
