#include <benchmark/benchmark.h>

#include "propalloc/allocation.hpp"
#include "propalloc/flow.hpp"
#include "propalloc/scaling.hpp"
#include "propalloc/structure.hpp"
#include "propalloc/twocap.hpp"

namespace {

using namespace propalloc;

void BM_Sinkhorn(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Instance g = gen_random_mc(n, 2 * n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(sinkhorn(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Sinkhorn)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_MaxFlow(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Instance g = gen_random_mc(n, 4 * n, 11);
  for (auto _ : state) benchmark::DoNotOptimize(max_matching_value(g));
}
BENCHMARK(BM_MaxFlow)->RangeMultiplier(2)->Range(8, 512);

void BM_DmDecomposition(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Instance g = gen_random_mc(n, 2 * n, 13);
  for (auto _ : state) benchmark::DoNotOptimize(dm_decomposition(g));
}
BENCHMARK(BM_DmDecomposition)->RangeMultiplier(2)->Range(8, 512);

void BM_PerfectStrategy(benchmark::State& state) {
  Instance g = gen_path3();
  for (auto _ : state) benchmark::DoNotOptimize(ranked(g, perfect_strategy(g)));
}
BENCHMARK(BM_PerfectStrategy);

void BM_TwoCapViolation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  TwoCapInstance g = gen_powers(n);
  const WeightVector w = WeightVector::uniform(n);
  for (auto _ : state) benchmark::DoNotOptimize(violation_factor(g, w));
}
BENCHMARK(BM_TwoCapViolation)->Arg(10)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
