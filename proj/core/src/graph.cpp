#include "costlab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <tuple>

#include "costlab/io.hpp"

namespace costlab {

void Graph::validate() const {
  if (n < 0) fail(errc::invalid_params, "negative vertex count");
  if (static_cast<std::int64_t>(offsets.size()) != n + 1)
    fail(errc::invalid_params, "offsets must have n+1 entries");
  if (!offsets.empty() && offsets.front() != 0) fail(errc::invalid_params, "offsets[0] must be 0");
  const std::int64_t m = num_edges();
  if (offsets.empty() || offsets.back() != m)
    fail(errc::invalid_params, "offsets[n] must equal the arc count");
  if (weights.size() != targets.size())
    fail(errc::invalid_params, "weights and targets must have equal length");
  for (std::int64_t u = 0; u < n; ++u) {
    if (offsets[u] > offsets[u + 1]) fail(errc::invalid_params, "offsets must be non-decreasing");
    for (std::int64_t k = offsets[u]; k < offsets[u + 1]; ++k) {
      const std::int64_t v = targets[k];
      if (v < 0 || v >= n) fail(errc::invalid_params, "arc target out of range");
      if (v == u) fail(errc::invalid_params, "self-loop at vertex " + std::to_string(u));
      if (k > offsets[u] && targets[k - 1] >= v)
        fail(errc::invalid_params, "row targets must be strictly increasing (duplicate arc?)");
      const double w = weights[k];
      if (!(w >= 0.0) || !std::isfinite(w)) fail(errc::invalid_params, "arc weight must be >= 0");
    }
  }
}

Graph Graph::from_edges(std::int64_t n,
                        std::vector<std::tuple<std::int64_t, std::int64_t, double>> edges,
                        bool directed) {
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  Graph g;
  g.n = n;
  g.directed = directed;
  g.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  g.targets.reserve(edges.size());
  g.weights.reserve(edges.size());
  for (const auto& [u, v, w] : edges) {
    if (u < 0 || u >= n) fail(errc::invalid_params, "arc source out of range");
    ++g.offsets[static_cast<std::size_t>(u) + 1];
    g.targets.push_back(v);
    g.weights.push_back(w);
  }
  for (std::int64_t u = 0; u < n; ++u) g.offsets[u + 1] += g.offsets[u];
  g.validate();
  return g;
}

void save_graph(const Graph& g, std::ostream& out) {
  g.validate();
  out << g.n << ' ' << g.num_edges() / (g.directed ? 1 : 2) << ' ' << (g.directed ? 1 : 0) << '\n';
  for (std::int64_t u = 0; u < g.n; ++u) {
    for (std::int64_t k = g.offsets[u]; k < g.offsets[u + 1]; ++k) {
      const std::int64_t v = g.targets[k];
      if (!g.directed && v < u) continue;  // mirrored arc, stored once
      out << u << ' ' << v << ' ' << format_double_shortest(g.weights[k]) << '\n';
    }
  }
  if (!out) fail(errc::io_failure, "graph write failed");
}

void save_graph(const Graph& g, const std::filesystem::path& path) {
  std::ostringstream os;
  save_graph(g, os);
  write_file_atomic(path, os.str());
}

Graph load_graph(std::istream& in, const std::string& origin) {
  std::int64_t n = 0, m = 0;
  int directed_flag = 1;
  if (!(in >> n >> m >> directed_flag) || n < 0 || m < 0 || (directed_flag != 0 && directed_flag != 1))
    fail(errc::parse_failure, origin + ": bad header, expected 'n m directed'");
  std::vector<std::tuple<std::int64_t, std::int64_t, double>> edges;
  edges.reserve(static_cast<std::size_t>(directed_flag ? m : 2 * m));
  for (std::int64_t i = 0; i < m; ++i) {
    std::int64_t u = 0, v = 0;
    std::string w_text;
    if (!(in >> u >> v >> w_text))
      fail(errc::parse_failure, origin + ": expected " + std::to_string(m) + " arc lines");
    const double w = parse_double(w_text);
    edges.emplace_back(u, v, w);
    if (!directed_flag) edges.emplace_back(v, u, w);
  }
  Graph g = Graph::from_edges(n, std::move(edges), directed_flag == 1);
  return g;
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_failure, "cannot open graph file '" + path.string() + "'");
  return load_graph(in, path.string());
}

}  // namespace costlab
