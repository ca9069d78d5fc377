#pragma once

#include <cstdint>

#include "costlab/graph.hpp"
#include "costlab/scenario.hpp"

namespace costlab {

/// Arc-weight distribution. Integer mode draws uniformly from
/// {round(lo), ..., round(hi)} so that shortest distances are exact in
/// doubles; real mode draws uniformly from [lo, hi).
struct WeightRange {
  double lo = 1.0;
  double hi = 10.0;
  bool integer = true;

  void validate() const;  // errc::invalid_weight_range unless 0 <= lo <= hi
};

/// Uniform random simple digraph with exactly m arcs (no self-loops, no
/// duplicate arcs), fully determined by `seed`.
///
/// The construction is fixed so results reproduce across implementations:
///  1. Arcs are a uniform m-subset of the n*(n-1) ordered vertex pairs,
///     drawn by a partial Fisher-Yates shuffle over pair indices with
///     displacements kept in a hash map; index p encodes the pair
///     u = p / (n-1), v = r + (r >= u) where r = p % (n-1). Draw i takes
///     j = i + next_below(N - i) from the SplitMix64 stream seeded with
///     `seed` (see rng.hpp).
///  2. The chosen indices are sorted ascending (CSR order) and weights are
///     then drawn from the same stream, one per arc in that order:
///     integer mode uses lo + next_below(hi - lo + 1), real mode
///     lo + next_unit() * (hi - lo).
///
/// Throws errc::too_dense when m exceeds n*(n-1).
Graph generate_graph_nm(std::int64_t n, std::int64_t m, const WeightRange& weights,
                        std::uint64_t seed);

/// Same with m = round(density(n)).
Graph generate_graph(std::int64_t n, const ScalingLaw& density, const WeightRange& weights,
                     std::uint64_t seed);

}  // namespace costlab
