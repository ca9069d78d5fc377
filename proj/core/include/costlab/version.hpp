#pragma once

#include <string_view>

namespace costlab {

inline constexpr std::string_view kToolName = "costlab";
inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace costlab
