#include <benchmark/benchmark.h>

#include "twd/detection.hpp"
#include "twd/generators.hpp"
#include "twd/recognition.hpp"

namespace {

void BM_InducedClawInWall(benchmark::State& state) {
  const twd::Graph host = twd::generate(twd::wall(static_cast<int>(state.range(0))));
  const twd::Graph claw = twd::generate(twd::tripod(1, 1, 1));
  for (auto _ : state) benchmark::DoNotOptimize(twd::find_induced(claw, host).status);
}
BENCHMARK(BM_InducedClawInWall)->DenseRange(3, 9, 3);

// Exhausts the search: a wall has no triangle.
void BM_TriangleFreeWall(benchmark::State& state) {
  const twd::Graph host = twd::generate(twd::wall(static_cast<int>(state.range(0))));
  const twd::Graph k3 = twd::generate(twd::complete(3));
  for (auto _ : state) benchmark::DoNotOptimize(twd::find_induced(k3, host).status);
}
BENCHMARK(BM_TriangleFreeWall)->DenseRange(3, 9, 3);

void BM_MaximumClique(benchmark::State& state) {
  const twd::Graph g = twd::random_graph(static_cast<int>(state.range(0)), 0.5, 9);
  for (auto _ : state) benchmark::DoNotOptimize(twd::maximum_clique(g));
}
BENCHMARK(BM_MaximumClique)->RangeMultiplier(2)->Range(16, 128);

void BM_RecognizeLineTripod(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const twd::Graph g = twd::generate(twd::line_tripod(k, k, k));
  for (auto _ : state) benchmark::DoNotOptimize(twd::is_line_of_tripod(g).member);
}
BENCHMARK(BM_RecognizeLineTripod)->RangeMultiplier(4)->Range(4, 1024);

}  // namespace
