#include "costlab/bellman_ford.hpp"

#include "costlab/dijkstra.hpp"

namespace costlab {

std::vector<double> bellman_ford_distances(const Graph& g, std::int64_t source) {
  if (source < 0 || source >= g.n)
    fail(errc::invalid_source, "source " + std::to_string(source) + " not in [0, " +
                                   std::to_string(g.n) + ")");
  std::vector<double> dist(static_cast<std::size_t>(g.n), kUnreachable);
  dist[static_cast<std::size_t>(source)] = 0.0;
  for (std::int64_t round = 0; round + 1 < g.n; ++round) {
    bool changed = false;
    for (std::int64_t u = 0; u < g.n; ++u) {
      const double du = dist[static_cast<std::size_t>(u)];
      if (du == kUnreachable) continue;
      for (std::int64_t k = g.offsets[u]; k < g.offsets[u + 1]; ++k) {
        const std::int64_t v = g.targets[k];
        const double candidate = du + g.weights[k];
        if (candidate < dist[static_cast<std::size_t>(v)]) {
          dist[static_cast<std::size_t>(v)] = candidate;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return dist;
}

}  // namespace costlab
