#include "costlab/dijkstra.hpp"

#include <algorithm>
#include <queue>
#include <utility>

namespace costlab {

DijkstraRun dijkstra(const Graph& g, std::int64_t source) {
  if (source < 0 || source >= g.n)
    fail(errc::invalid_source, "source " + std::to_string(source) + " not in [0, " +
                                   std::to_string(g.n) + ")");
  DijkstraRun run;
  run.source = source;
  run.dist.assign(static_cast<std::size_t>(g.n), kUnreachable);
  run.pred.assign(static_cast<std::size_t>(g.n), kNoPredecessor);

  using Entry = std::pair<double, std::int64_t>;  // (distance, vertex)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  run.dist[static_cast<std::size_t>(source)] = 0.0;
  heap.emplace(0.0, source);
  ++run.stats.heap_pushes;

  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    ++run.stats.heap_pops;
    if (d > run.dist[static_cast<std::size_t>(u)]) continue;  // stale entry
    ++run.stats.settled_pops;
    for (std::int64_t k = g.offsets[u]; k < g.offsets[u + 1]; ++k) {
      ++run.stats.edge_relaxations;
      const std::int64_t v = g.targets[k];
      const double candidate = d + g.weights[k];
      if (candidate < run.dist[static_cast<std::size_t>(v)]) {
        run.dist[static_cast<std::size_t>(v)] = candidate;
        run.pred[static_cast<std::size_t>(v)] = u;
        heap.emplace(candidate, v);
        ++run.stats.heap_pushes;
      }
    }
  }

  // Farthest reachable vertex; ties resolve to the smallest id.
  std::int64_t farthest = source;
  for (std::int64_t v = 0; v < g.n; ++v) {
    const double dv = run.dist[static_cast<std::size_t>(v)];
    if (dv != kUnreachable && dv > run.dist[static_cast<std::size_t>(farthest)]) farthest = v;
  }
  run.weighted_length = run.dist[static_cast<std::size_t>(farthest)];
  std::int64_t hops = 0;
  for (std::int64_t v = farthest; run.pred[static_cast<std::size_t>(v)] != kNoPredecessor;
       v = run.pred[static_cast<std::size_t>(v)])
    ++hops;
  run.hop_length = hops;
  return run;
}

std::vector<std::int64_t> hop_counts(const DijkstraRun& run) {
  const std::size_t n = run.dist.size();
  std::vector<std::int64_t> hops(n, -1);
  hops[static_cast<std::size_t>(run.source)] = 0;
  std::vector<std::int64_t> chain;
  for (std::size_t v = 0; v < n; ++v) {
    if (run.dist[v] == kUnreachable || hops[v] >= 0) continue;
    chain.clear();
    std::int64_t cursor = static_cast<std::int64_t>(v);
    while (hops[static_cast<std::size_t>(cursor)] < 0) {
      chain.push_back(cursor);
      cursor = run.pred[static_cast<std::size_t>(cursor)];
    }
    std::int64_t base = hops[static_cast<std::size_t>(cursor)];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
      hops[static_cast<std::size_t>(*it)] = ++base;
  }
  return hops;
}

namespace {

double median_of_sorted(const std::vector<double>& xs) {
  const std::size_t k = xs.size();
  if (k == 0) return 0.0;
  return k % 2 == 1 ? xs[k / 2] : 0.5 * (xs[k / 2 - 1] + xs[k / 2]);
}

}  // namespace

PathGeometry measure_path_geometry(const DijkstraRun& run) {
  const std::vector<std::int64_t> hops = hop_counts(run);
  std::vector<double> hop_values, weight_values;
  for (std::size_t v = 0; v < run.dist.size(); ++v) {
    if (run.dist[v] == kUnreachable) continue;
    hop_values.push_back(static_cast<double>(hops[v]));
    weight_values.push_back(run.dist[v]);
  }
  std::sort(hop_values.begin(), hop_values.end());
  std::sort(weight_values.begin(), weight_values.end());

  PathGeometry geo;
  geo.reachable = static_cast<std::int64_t>(weight_values.size());
  if (geo.reachable == 0) return geo;
  geo.max_hops = static_cast<std::int64_t>(hop_values.back());
  geo.max_weight = weight_values.back();
  double hop_sum = 0.0, weight_sum = 0.0;
  for (double h : hop_values) hop_sum += h;
  for (double w : weight_values) weight_sum += w;
  geo.mean_hops = hop_sum / static_cast<double>(geo.reachable);
  geo.mean_weight = weight_sum / static_cast<double>(geo.reachable);
  geo.median_hops = median_of_sorted(hop_values);
  geo.median_weight = median_of_sorted(weight_values);
  return geo;
}

PathGeometry measure_path_geometry(const Graph& g, std::int64_t source) {
  return measure_path_geometry(dijkstra(g, source));
}

}  // namespace costlab
