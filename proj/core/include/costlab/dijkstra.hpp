#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "costlab/graph.hpp"

namespace costlab {

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();
inline constexpr std::int64_t kNoPredecessor = -1;

struct DijkstraStats {
  std::int64_t heap_pops = 0;         // every pop, stale entries included
  std::int64_t settled_pops = 0;      // pops that settled a vertex (<= n)
  std::int64_t heap_pushes = 0;
  std::int64_t edge_relaxations = 0;  // arcs scanned from settled vertices (<= m)

  friend bool operator==(const DijkstraStats&, const DijkstraStats&) = default;
};

struct DijkstraRun {
  std::int64_t source = 0;
  std::vector<double> dist;        // kUnreachable where no path exists
  std::vector<std::int64_t> pred;  // kNoPredecessor for the source and unreachable vertices
  DijkstraStats stats;
  // Realized geometry of the longest (by weight) finite shortest path.
  std::int64_t hop_length = 0;
  double weighted_length = 0.0;

  friend bool operator==(const DijkstraRun&, const DijkstraRun&) = default;
};

/// Single-source shortest paths with a binary heap and lazy deletion: stale
/// heap entries are skipped on pop. Requires non-negative weights (guaranteed
/// by Graph::validate) and a source in [0, n); throws errc::invalid_source.
DijkstraRun dijkstra(const Graph& g, std::int64_t source);

/// Hop count per vertex along the predecessor tree (-1 when unreachable).
std::vector<std::int64_t> hop_counts(const DijkstraRun& run);

/// Distribution summary of realized shortest-path lengths over all reachable
/// vertices (source included). Medians average the two middle values for even
/// counts.
struct PathGeometry {
  std::int64_t reachable = 0;
  std::int64_t max_hops = 0;
  double mean_hops = 0.0;
  double median_hops = 0.0;
  double max_weight = 0.0;
  double mean_weight = 0.0;
  double median_weight = 0.0;

  friend bool operator==(const PathGeometry&, const PathGeometry&) = default;
};

PathGeometry measure_path_geometry(const Graph& g, std::int64_t source);
PathGeometry measure_path_geometry(const DijkstraRun& run);

}  // namespace costlab
