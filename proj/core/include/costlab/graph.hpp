#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "costlab/error.hpp"

namespace costlab {

/// Weighted digraph in CSR form. Targets are sorted within each row; the
/// structure carries no self-loops and no duplicate arcs.
struct Graph {
  std::int64_t n = 0;
  std::vector<std::int64_t> offsets;  // n+1 entries, offsets[0] = 0, offsets[n] = m
  std::vector<std::int64_t> targets;  // m entries in [0, n)
  std::vector<double> weights;        // m non-negative entries
  bool directed = true;
  std::uint64_t seed = 0;  // generation seed; 0 for loaded/hand-built graphs

  std::int64_t num_vertices() const { return n; }
  std::int64_t num_edges() const { return static_cast<std::int64_t>(targets.size()); }

  /// Throws errc::invalid_params when any CSR invariant is broken.
  void validate() const;

  /// Builds CSR from an arc list (sorted and checked). Undirected graphs must
  /// supply both orientations of every edge.
  static Graph from_edges(std::int64_t n,
                          std::vector<std::tuple<std::int64_t, std::int64_t, double>> edges,
                          bool directed = true);
};

/// Plain-text exchange format. One header line `n m directed` (directed is 0
/// or 1), then m lines `u v w`. Weights are written shortest-round-trip, so a
/// save/load cycle is bit-exact; an undirected file stores each edge once as
/// `min(u,v) max(u,v) w`.
void save_graph(const Graph& g, std::ostream& out);
void save_graph(const Graph& g, const std::filesystem::path& path);
Graph load_graph(std::istream& in, const std::string& origin = "<stream>");
Graph load_graph(const std::filesystem::path& path);

}  // namespace costlab
