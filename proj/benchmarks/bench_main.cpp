#include <benchmark/benchmark.h>

#include "fatdelta/bicat.hpp"
#include "fatdelta/fair_set.hpp"
#include "fatdelta/fat_delta.hpp"
#include "fatdelta/generate.hpp"

using namespace fatdelta;

namespace {

void BM_EnumHomFat(benchmark::State& state) {
  const auto dots = static_cast<std::size_t>(state.range(0));
  const auto k = ColouredOrdinal(dots - 1);
  const auto l = ColouredOrdinal::all_linked(dots);
  for (auto _ : state) benchmark::DoNotOptimize(enum_hom_fat(k, l));
}
BENCHMARK(BM_EnumHomFat)->DenseRange(3, 8);

void BM_EnumHomDelta(benchmark::State& state) {
  const Ordinal n{static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(enum_hom_delta(n, n));
}
BENCHMARK(BM_EnumHomDelta)->DenseRange(2, 7);

void BM_VerticalDecompose(benchmark::State& state) {
  const auto dots = static_cast<std::size_t>(state.range(0));
  const FatMap f(ColouredOrdinal::all_linked(2), ColouredOrdinal::all_linked(dots), {0, dots - 1});
  for (auto _ : state) benchmark::DoNotOptimize(vertical_decompose(f));
}
BENCHMARK(BM_VerticalDecompose)->DenseRange(3, 8);

void BM_EvaluateObject(benchmark::State& state) {
  gen::Rng rng(0);
  const auto x = gen::random_fair_set(rng);
  const auto k = ColouredOrdinal(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_object(x, k));
}
BENCHMARK(BM_EvaluateObject)->DenseRange(1, 4);

void BM_IdentityCategory(benchmark::State& state) {
  const auto c = gen::two_group(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(identity_category(c, 0));
}
BENCHMARK(BM_IdentityCategory)->DenseRange(2, 6);

void BM_BicatRoundTrip(benchmark::State& state) {
  const auto c = gen::monoidal_product(gen::codiscrete_cyclic(2), gen::two_group(2));
  for (auto _ : state) benchmark::DoNotOptimize(fair2_to_bicat(bicat_to_fair2(c)));
}
BENCHMARK(BM_BicatRoundTrip);

}  // namespace
BENCHMARK_MAIN();
