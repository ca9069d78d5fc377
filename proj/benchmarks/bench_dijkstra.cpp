#include <benchmark/benchmark.h>

#include "costlab/bellman_ford.hpp"
#include "costlab/dijkstra.hpp"
#include "costlab/fit.hpp"
#include "costlab/graph_gen.hpp"

using namespace costlab;

namespace {

void BM_GenerateGraph(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  std::uint64_t seed = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(generate_graph(n, sparse_density_law(), WeightRange{}, ++seed));
  state.SetItemsProcessed(state.iterations() * 10 * n);
}
BENCHMARK(BM_GenerateGraph)->Range(1 << 8, 1 << 16);

void BM_Dijkstra(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const Graph g = generate_graph(n, sparse_density_law(), WeightRange{}, 42);
  for (auto _ : state) benchmark::DoNotOptimize(dijkstra(g, 0));
  state.SetItemsProcessed(state.iterations() * g.num_edges());
  state.SetComplexityN(n);
}
BENCHMARK(BM_Dijkstra)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Complexity();

void BM_BellmanFordOracle(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const Graph g = generate_graph(n, sparse_density_law(), WeightRange{}, 42);
  for (auto _ : state) benchmark::DoNotOptimize(bellman_ford_distances(g, 0));
}
BENCHMARK(BM_BellmanFordOracle)->RangeMultiplier(4)->Range(1 << 6, 1 << 10);

void BM_PathGeometry(benchmark::State& state) {
  const Graph g = generate_graph(state.range(0), sparse_density_law(), WeightRange{}, 7);
  const DijkstraRun run = dijkstra(g, 0);
  for (auto _ : state) benchmark::DoNotOptimize(measure_path_geometry(run));
}
BENCHMARK(BM_PathGeometry)->Range(1 << 8, 1 << 14);

}  // namespace

BENCHMARK_MAIN();
