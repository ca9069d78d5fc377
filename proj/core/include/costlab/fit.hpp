#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "costlab/cost_models.hpp"
#include "costlab/dijkstra.hpp"

namespace costlab {

/// Measured operation count standing in for Dijkstra running time: every heap
/// pop weighted by log2(n), plus every scanned arc. Mirrors the two terms of
/// the theoretical model m + n*log2(n).
double dijkstra_work_proxy(const DijkstraStats& stats, std::int64_t n);

/// Log-log least-squares fit of the measured work proxy against the
/// theoretical cost: ln(proxy) = ln(constant) + slope * ln(model cost).
struct FitReport {
  double constant = 0.0;
  double slope = 0.0;
  double r_squared = 0.0;
  bool degenerate = false;  // regressor had zero variance (duplicated n, m)
  std::int64_t num_runs = 0;

  friend bool operator==(const FitReport&, const FitReport&) = default;
};

/// Requires at least 5 runs spanning at least one decade of n
/// (errc::insufficient_data). Runs whose parameters all coincide produce a
/// degenerate report instead of a fit.
FitReport fit_cost_model(std::span<const std::pair<GraphParams, DijkstraRun>> runs);

}  // namespace costlab
