#include "costlab/empirical.hpp"

#include <utility>

#include "costlab/rng.hpp"

namespace costlab {

EmpiricalResult run_empirical(const EmpiricalConfig& config) {
  if (config.n_min < 2 || config.n_max < config.n_min)
    fail(errc::invalid_range, "empirical ladder needs 2 <= n_min <= n_max");
  config.weights.validate();

  EmpiricalResult result;
  std::vector<std::pair<GraphParams, DijkstraRun>> fit_input;
  std::uint64_t index = 0;
  for (std::int64_t n = config.n_min; n <= config.n_max; n *= 2, ++index) {
    const std::uint64_t run_seed = derive_stream(config.seed, index);
    const Graph g = generate_graph(n, config.density, config.weights, run_seed);
    const DijkstraRun run = dijkstra(g, config.source);

    EmpiricalRunRow row;
    row.n = n;
    row.m = g.num_edges();
    row.seed = run_seed;
    row.source = config.source;
    row.stats = run.stats;
    row.work_proxy = dijkstra_work_proxy(run.stats, n);
    row.geometry = measure_path_geometry(run);

    GraphParams params;
    params.n = static_cast<double>(n);
    params.m = static_cast<double>(g.num_edges());
    row.model_cost = eval_dijkstra(params);
    params.l = static_cast<double>(run.hop_length);
    row.wesolowski_hop_cost = eval_wesolowski(params);
    params.l = run.weighted_length;
    row.wesolowski_weight_cost = eval_wesolowski(params);

    result.rows.push_back(row);
    params.l = run.weighted_length;
    fit_input.emplace_back(params, run);
  }

  const bool spans_decade =
      !fit_input.empty() && fit_input.back().first.n / fit_input.front().first.n >= 10.0;
  if (fit_input.size() >= 5 && spans_decade) result.fit = fit_cost_model(fit_input);
  return result;
}

}  // namespace costlab
