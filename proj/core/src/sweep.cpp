#include "costlab/sweep.hpp"

namespace costlab {

SweepResult run_sweep(const Scenario& scenario, std::span<const std::int64_t> ns,
                      const ModelRegistry& registry) {
  if (registry.size() == 0) fail(errc::invalid_params, "model registry is empty");
  if (ns.empty()) fail(errc::empty_grid, "sweep grid is empty");
  scenario.density.validate();
  scenario.path.validate();

  SweepResult result;
  result.scenario = scenario.name;
  result.model_ids = registry.ids();
  result.rows.reserve(ns.size());
  for (std::int64_t n : ns) {
    GraphParams params;
    params.n = static_cast<double>(n);
    params.m = scenario.edges_at(params.n);
    params.l = scenario.path_length_at(params.n);
    params.validate();

    SweepRow row;
    row.n = n;
    row.m = params.m;
    row.l = *params.l;
    row.costs.reserve(registry.size());
    for (const CostModel& model : registry.models()) row.costs.push_back(model.evaluate(params));
    result.rows.push_back(std::move(row));
  }
  return result;
}

SweepResult run_sweep(const Scenario& scenario, const NGrid& grid, const ModelRegistry& registry) {
  const std::vector<std::int64_t> ns = grid.points();
  return run_sweep(scenario, std::span<const std::int64_t>(ns), registry);
}

}  // namespace costlab
