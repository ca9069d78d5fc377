#include "costlab/graph_gen.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "costlab/rng.hpp"

namespace costlab {

void WeightRange::validate() const {
  if (!(lo >= 0.0) || !(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi))
    fail(errc::invalid_weight_range, "weight range must satisfy 0 <= lo <= hi");
}

Graph generate_graph_nm(std::int64_t n, std::int64_t m, const WeightRange& weights,
                        std::uint64_t seed) {
  if (n < 2) fail(errc::invalid_params, "graph needs n >= 2");
  if (m < 0) fail(errc::invalid_params, "negative arc count");
  weights.validate();
  const std::uint64_t universe =
      static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1);
  if (static_cast<std::uint64_t>(m) > universe)
    fail(errc::too_dense, "m = " + std::to_string(m) + " exceeds n*(n-1) = " +
                              std::to_string(universe) + " simple arcs");

  SplitMix64 rng(seed);

  // Partial Fisher-Yates over the pair-index universe; only displaced slots
  // are materialized.
  std::vector<std::uint64_t> picked(static_cast<std::size_t>(m));
  std::unordered_map<std::uint64_t, std::uint64_t> displaced;
  displaced.reserve(static_cast<std::size_t>(m) * 2);
  auto slot_value = [&](std::uint64_t slot) {
    const auto it = displaced.find(slot);
    return it == displaced.end() ? slot : it->second;
  };
  for (std::int64_t i = 0; i < m; ++i) {
    const std::uint64_t u64_i = static_cast<std::uint64_t>(i);
    const std::uint64_t j = u64_i + rng.next_below(universe - u64_i);
    picked[static_cast<std::size_t>(i)] = slot_value(j);
    displaced[j] = slot_value(u64_i);
  }
  std::sort(picked.begin(), picked.end());  // pair-index order == (u, v) lex order

  Graph g;
  g.n = n;
  g.directed = true;
  g.seed = seed;
  g.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  g.targets.resize(static_cast<std::size_t>(m));
  g.weights.resize(static_cast<std::size_t>(m));
  const std::uint64_t row = static_cast<std::uint64_t>(n - 1);
  for (std::size_t k = 0; k < picked.size(); ++k) {
    const std::int64_t u = static_cast<std::int64_t>(picked[k] / row);
    const std::int64_t r = static_cast<std::int64_t>(picked[k] % row);
    const std::int64_t v = r + (r >= u ? 1 : 0);
    ++g.offsets[static_cast<std::size_t>(u) + 1];
    g.targets[k] = v;
  }
  for (std::int64_t u = 0; u < n; ++u) g.offsets[u + 1] += g.offsets[u];

  if (weights.integer) {
    const std::int64_t lo = std::llround(weights.lo);
    const std::int64_t hi = std::llround(weights.hi);
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    for (double& w : g.weights) w = static_cast<double>(lo + static_cast<std::int64_t>(rng.next_below(span)));
  } else {
    for (double& w : g.weights) w = weights.lo + rng.next_unit() * (weights.hi - weights.lo);
  }

  g.validate();
  return g;
}

Graph generate_graph(std::int64_t n, const ScalingLaw& density, const WeightRange& weights,
                     std::uint64_t seed) {
  density.validate();
  const std::int64_t m = std::llround(density(static_cast<double>(n)));
  return generate_graph_nm(n, m, weights, seed);
}

}  // namespace costlab
