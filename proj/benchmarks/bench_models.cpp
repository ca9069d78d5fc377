#include <benchmark/benchmark.h>

#include "costlab/frontier.hpp"
#include "costlab/report.hpp"
#include "costlab/sweep.hpp"

using namespace costlab;

namespace {

const ModelRegistry& registry() {
  static const ModelRegistry reg = ModelRegistry::builtin();
  return reg;
}

void BM_EvalAllModels(benchmark::State& state) {
  const GraphParams params{static_cast<double>(state.range(0)),
                           10.0 * static_cast<double>(state.range(0)), 100.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_dijkstra(params));
    benchmark::DoNotOptimize(eval_duan(params));
    benchmark::DoNotOptimize(eval_grover(params));
    benchmark::DoNotOptimize(eval_wesolowski(params));
  }
}
BENCHMARK(BM_EvalAllModels)->Range(1 << 10, 1 << 26);

void BM_RunSweep(benchmark::State& state) {
  NGrid grid;
  grid.points_per_decade = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(run_sweep(builtin_scenarios()[0], grid, registry()));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(grid.points().size()));
}
BENCHMARK(BM_RunSweep)->Arg(5)->Arg(25)->Arg(100);

void BM_FindCrossover(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(find_crossover(builtin_scenarios()[1], "dijkstra", "wesolowski",
                                            1e2, 1e8, registry()));
}
BENCHMARK(BM_FindCrossover);

void BM_ClassifyRows(benchmark::State& state) {
  const SweepResult sweep = run_sweep(builtin_scenarios()[0], NGrid{}, registry());
  for (auto _ : state) benchmark::DoNotOptimize(classify_rows(sweep, registry()));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sweep.rows.size()));
}
BENCHMARK(BM_ClassifyRows);

void BM_MapZones(benchmark::State& state) {
  const ScalingLaw paths[] = {short_path_law(), long_path_law()};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        map_zones(0.5, 2.5, static_cast<int>(state.range(0)), paths, 1'000'000, registry()));
}
BENCHMARK(BM_MapZones)->Arg(9)->Arg(65);

void BM_ReproduceTables(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(reproduce_tables(GridMode::calibrated, registry()));
}
BENCHMARK(BM_ReproduceTables);

void BM_BundleJsonRoundTrip(benchmark::State& state) {
  ReportBundle bundle = reproduce_tables(GridMode::calibrated, registry());
  bundle.sweeps.push_back(run_sweep(builtin_scenarios()[0], NGrid{}, registry()));
  for (auto _ : state) benchmark::DoNotOptimize(bundle_from_json(to_json_string(bundle)));
}
BENCHMARK(BM_BundleJsonRoundTrip);

}  // namespace
