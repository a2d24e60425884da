#include <benchmark/benchmark.h>

#include "twd/decomposition.hpp"
#include "twd/generators.hpp"

namespace {

void BM_ExactTreewidthRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const twd::Graph g = twd::random_graph(n, 0.25, 17);
  for (auto _ : state) benchmark::DoNotOptimize(twd::exact_treewidth(g).width);
  state.SetLabel("n=" + std::to_string(n));
}
BENCHMARK(BM_ExactTreewidthRandom)->DenseRange(10, 22, 4)->Unit(benchmark::kMillisecond);

void BM_ExactTreewidthGrid(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const twd::Graph g = twd::generate(twd::grid(k, k));
  for (auto _ : state) benchmark::DoNotOptimize(twd::exact_treewidth(g).width);
}
BENCHMARK(BM_ExactTreewidthGrid)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_MinFill(benchmark::State& state) {
  const twd::Graph g = twd::random_graph(static_cast<int>(state.range(0)), 0.1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(twd::min_fill_ordering(g));
}
BENCHMARK(BM_MinFill)->RangeMultiplier(2)->Range(32, 256);

}  // namespace
