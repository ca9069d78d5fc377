#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "costlab/cost_models.hpp"
#include "costlab/scenario.hpp"

namespace costlab {

struct SweepRow {
  std::int64_t n = 0;
  double m = 0.0;
  double l = 0.0;
  std::vector<double> costs;  // aligned with SweepResult::model_ids

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Per-n cost table for one scenario; rows ascend in n, one cost per
/// registered model per row, columns in registry order.
struct SweepResult {
  std::string scenario;
  std::vector<std::string> model_ids;
  std::vector<SweepRow> rows;

  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

/// Evaluates every registered model at (n, m(n), l(n)) for each grid point.
/// Pure: identical inputs yield bit-identical results.
SweepResult run_sweep(const Scenario& scenario, const NGrid& grid, const ModelRegistry& registry);
SweepResult run_sweep(const Scenario& scenario, std::span<const std::int64_t> ns,
                      const ModelRegistry& registry);

}  // namespace costlab
