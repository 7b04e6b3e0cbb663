#include <benchmark/benchmark.h>

#include <vector>

#include "descartes/kernels.hpp"
#include "support/generators.hpp"

namespace {

std::vector<double> m_values(std::size_t n) {
  descartes::testing::Gen gen(7);
  std::vector<double> m(n);
  for (double& x : m) x = gen.uniform(0.5, 1.5);
  return m;
}

void BM_SubsetSumSerial(benchmark::State& state) {
  const auto m = m_values(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(descartes::subset_sum_serial(m));
}

void BM_SubsetSumParallel(benchmark::State& state) {
  const auto m = m_values(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(descartes::subset_sum_parallel(m));
}

void BM_CheckFlowersSerial(benchmark::State& state) {
  const auto sets = descartes::testing::random_flowers(20240601, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(descartes::check_flowers_serial(sets));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(sets.size()));
}

void BM_CheckFlowersParallel(benchmark::State& state) {
  const auto sets = descartes::testing::random_flowers(20240601, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(descartes::check_flowers_parallel(sets));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(sets.size()));
}

}  // namespace

BENCHMARK(BM_SubsetSumSerial)->DenseRange(16, 24, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubsetSumParallel)->DenseRange(16, 24, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckFlowersSerial)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckFlowersParallel)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
