#include "costlab/fit.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace costlab {

double dijkstra_work_proxy(const DijkstraStats& stats, std::int64_t n) {
  return static_cast<double>(stats.heap_pops) * std::log2(static_cast<double>(n)) +
         static_cast<double>(stats.edge_relaxations);
}

FitReport fit_cost_model(std::span<const std::pair<GraphParams, DijkstraRun>> runs) {
  if (runs.size() < 5)
    fail(errc::insufficient_data, "need at least 5 runs, got " + std::to_string(runs.size()));

  std::vector<double> xs, ys;
  xs.reserve(runs.size());
  ys.reserve(runs.size());
  double n_min = runs.front().first.n, n_max = n_min;
  for (const auto& [params, run] : runs) {
    params.validate();
    n_min = std::min(n_min, params.n);
    n_max = std::max(n_max, params.n);
    xs.push_back(std::log(eval_dijkstra(params)));
    ys.push_back(std::log(dijkstra_work_proxy(run.stats, static_cast<std::int64_t>(params.n))));
  }

  const double count = static_cast<double>(xs.size());
  double x_mean = 0.0, y_mean = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    x_mean += xs[i];
    y_mean += ys[i];
  }
  x_mean /= count;
  y_mean /= count;

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - x_mean) * (xs[i] - x_mean);
    sxy += (xs[i] - x_mean) * (ys[i] - y_mean);
    syy += (ys[i] - y_mean) * (ys[i] - y_mean);
  }

  FitReport report;
  report.num_runs = static_cast<std::int64_t>(runs.size());
  if (sxx == 0.0) {
    report.degenerate = true;
    report.constant = std::exp(y_mean - x_mean);  // best single-scale guess
    return report;
  }
  if (n_max / n_min < 10.0)
    fail(errc::insufficient_data, "runs must span at least one decade of n");

  report.slope = sxy / sxx;
  report.constant = std::exp(y_mean - report.slope * x_mean);
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double predicted = (y_mean - report.slope * x_mean) + report.slope * xs[i];
    ss_res += (ys[i] - predicted) * (ys[i] - predicted);
  }
  report.r_squared = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
  return report;
}

}  // namespace costlab
