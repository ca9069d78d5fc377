#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "costlab/error.hpp"

namespace costlab {

/// Parameter triple every cost model consumes. Edge count and path length are
/// real-valued: scenario laws such as n^2/100 or (log2 n)^2 are non-integral.
/// The vertex count is integral in every sweep grid, but is stored as a real
/// so that crossover search can work on the continuous relaxation.
struct GraphParams {
  double n = 2.0;           // vertex count, >= 2
  double m = 1.0;           // edge count, > 0
  std::optional<double> l;  // solution path length, >= 0 when present

  /// Throws errc::invalid_params unless n >= 2, m > 0 and l (if set) >= 0.
  void validate() const;
};

// The four built-in theoretical cost functions. All logarithms are base 2 and
// every hidden constant is 1; results are unitless. Each throws
// errc::invalid_params on a bad parameter triple.
double eval_dijkstra(const GraphParams& p);    // m + n*log2(n)
double eval_duan(const GraphParams& p);        // m * log2(n)^(2/3)
double eval_grover(const GraphParams& p);      // sqrt(n) * m
double eval_wesolowski(const GraphParams& p);  // l * sqrt(m); needs l

enum class ModelKind { classical, quantum };

std::string_view to_string(ModelKind kind);

/// A named, evaluable cost model. `evaluate` must be pure, deterministic and
/// finite-positive over valid parameters (Wesolowski-style models may return 0
/// for l = 0).
struct CostModel {
  std::string id;
  ModelKind kind = ModelKind::classical;
  bool requires_path_length = false;
  std::function<double(const GraphParams&)> evaluate;
};

/// Ordered model registry. Registration order is significant: it fixes sweep
/// column order and argmin tie-breaking. Registration is a single-threaded
/// setup phase; afterwards the registry is immutable and safe to share across
/// threads.
class ModelRegistry {
 public:
  /// Empty registry.
  ModelRegistry() = default;

  /// Registry pre-loaded with the built-ins, in the fixed order
  /// dijkstra, duan, grover, wesolowski.
  static ModelRegistry builtin();

  /// Appends a model; returns its index. Throws errc::duplicate_id if the id
  /// is taken and errc::invalid_params on an empty id or missing evaluate.
  std::size_t add(CostModel model);

  std::span<const CostModel> models() const { return models_; }
  std::size_t size() const { return models_.size(); }
  const CostModel& at(std::size_t index) const { return models_.at(index); }

  const CostModel* find(std::string_view id) const;
  bool contains(std::string_view id) const { return find(id) != nullptr; }

  std::vector<std::string> ids() const;

 private:
  std::vector<CostModel> models_;
};

}  // namespace costlab
