#include <benchmark/benchmark.h>

#include "twd/blocks.hpp"
#include "twd/generators.hpp"

namespace {

void BM_PairConnectivity(benchmark::State& state) {
  const twd::Graph g = twd::random_graph(static_cast<int>(state.range(0)), 0.2, 5);
  twd::Vertex v = 1;
  while (v + 1 < g.order() && g.adjacent(0, v)) ++v;
  for (auto _ : state) benchmark::DoNotOptimize(twd::pair_connectivity(g, 0, v).kappa);
}
BENCHMARK(BM_PairConnectivity)->RangeMultiplier(2)->Range(16, 256);

void BM_BlockNumber(benchmark::State& state) {
  const twd::Graph g = twd::random_graph(static_cast<int>(state.range(0)), 0.4, 5);
  for (auto _ : state) benchmark::DoNotOptimize(twd::block_number(g).value);
}
BENCHMARK(BM_BlockNumber)->DenseRange(10, 30, 10)->Unit(benchmark::kMillisecond);

}  // namespace
