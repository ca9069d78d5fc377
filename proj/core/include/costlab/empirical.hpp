#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "costlab/dijkstra.hpp"
#include "costlab/fit.hpp"
#include "costlab/graph_gen.hpp"
#include "costlab/scenario.hpp"

namespace costlab {

/// One instrumented run: graph generated from the density law, shortest paths
/// solved, operation counters and realized path geometry recorded, plus the
/// model costs the measurements ground.
struct EmpiricalRunRow {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::uint64_t seed = 0;
  std::int64_t source = 0;
  DijkstraStats stats;
  double work_proxy = 0.0;
  double model_cost = 0.0;  // m + n*log2(n) at the realized (n, m)
  PathGeometry geometry;
  // Path-dependent model cost fed with the realized geometry, both readings
  // of l (hop count and total weight of the longest shortest path).
  double wesolowski_hop_cost = 0.0;
  double wesolowski_weight_cost = 0.0;

  friend bool operator==(const EmpiricalRunRow&, const EmpiricalRunRow&) = default;
};

struct EmpiricalConfig {
  ScalingLaw density = sparse_density_law();
  std::int64_t n_min = 256;
  std::int64_t n_max = 16384;  // doubling ladder n_min, 2*n_min, ...
  WeightRange weights;
  std::uint64_t seed = 42;
  std::int64_t source = 0;
};

struct EmpiricalResult {
  std::vector<EmpiricalRunRow> rows;
  std::optional<FitReport> fit;  // present when the ladder supports a fit
};

/// Runs the instrumented ladder; per-run seeds are derive_stream(seed, index).
EmpiricalResult run_empirical(const EmpiricalConfig& config);

}  // namespace costlab
