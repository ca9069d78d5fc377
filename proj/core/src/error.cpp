#include "costlab/error.hpp"

namespace costlab {

std::string_view to_string(errc code) {
  switch (code) {
    case errc::invalid_params: return "invalid-params";
    case errc::missing_path_length: return "missing-path-length";
    case errc::duplicate_id: return "duplicate-id";
    case errc::empty_grid: return "empty-grid";
    case errc::invalid_range: return "invalid-range";
    case errc::missing_model_kind: return "missing-model-kind";
    case errc::too_dense: return "too-dense";
    case errc::invalid_weight_range: return "invalid-weight-range";
    case errc::invalid_source: return "invalid-source";
    case errc::insufficient_data: return "insufficient-data";
    case errc::parse_failure: return "parse-failure";
    case errc::io_failure: return "io-failure";
  }
  return "unknown-error";
}

}  // namespace costlab
