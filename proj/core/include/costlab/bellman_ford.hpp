#pragma once

#include <cstdint>
#include <vector>

#include "costlab/graph.hpp"

namespace costlab {

/// Independent shortest-distance oracle: relaxation rounds to fixpoint (at
/// most n-1, with early exit). Shares no code with dijkstra(); intended for
/// cross-checking at desk scale (quadratic work).
std::vector<double> bellman_ford_distances(const Graph& g, std::int64_t source);

}  // namespace costlab
