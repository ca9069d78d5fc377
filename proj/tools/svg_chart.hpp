#pragma once

#include <string>

#include "costlab/sweep.hpp"

namespace costlab::tools {

/// Log-log line chart of a sweep (one series per model column), rendered as a
/// standalone SVG document.
std::string sweep_svg(const SweepResult& sweep, int width = 760, int height = 520);

}  // namespace costlab::tools
