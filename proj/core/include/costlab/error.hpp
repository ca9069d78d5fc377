#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace costlab {

enum class errc {
  invalid_params,
  missing_path_length,
  duplicate_id,
  empty_grid,
  invalid_range,
  missing_model_kind,
  too_dense,
  invalid_weight_range,
  invalid_source,
  insufficient_data,
  parse_failure,
  io_failure,
};

std::string_view to_string(errc code);

/// Domain error carrying a machine-checkable error code.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace costlab
