#include "costlab/cost_models.hpp"

#include <cmath>

namespace costlab {

void GraphParams::validate() const {
  if (!(n >= 2.0) || !std::isfinite(n))
    fail(errc::invalid_params, "vertex count must be >= 2, got " + std::to_string(n));
  if (!(m > 0.0) || !std::isfinite(m))
    fail(errc::invalid_params, "edge count must be positive and finite, got " + std::to_string(m));
  if (l && (!(*l >= 0.0) || !std::isfinite(*l)))
    fail(errc::invalid_params, "path length must be >= 0 and finite, got " + std::to_string(*l));
}

double eval_dijkstra(const GraphParams& p) {
  p.validate();
  return p.m + p.n * std::log2(p.n);
}

double eval_duan(const GraphParams& p) {
  p.validate();
  return p.m * std::pow(std::log2(p.n), 2.0 / 3.0);
}

double eval_grover(const GraphParams& p) {
  p.validate();
  return std::sqrt(p.n) * p.m;
}

double eval_wesolowski(const GraphParams& p) {
  p.validate();
  if (!p.l) fail(errc::missing_path_length, "model 'wesolowski' needs a path length");
  return *p.l * std::sqrt(p.m);
}

std::string_view to_string(ModelKind kind) {
  return kind == ModelKind::classical ? "classical" : "quantum";
}

ModelRegistry ModelRegistry::builtin() {
  ModelRegistry reg;
  reg.add({"dijkstra", ModelKind::classical, false, eval_dijkstra});
  reg.add({"duan", ModelKind::classical, false, eval_duan});
  reg.add({"grover", ModelKind::quantum, false, eval_grover});
  reg.add({"wesolowski", ModelKind::quantum, true, eval_wesolowski});
  return reg;
}

std::size_t ModelRegistry::add(CostModel model) {
  if (model.id.empty()) fail(errc::invalid_params, "model id must be non-empty");
  if (!model.evaluate) fail(errc::invalid_params, "model '" + model.id + "' has no evaluate function");
  if (contains(model.id)) fail(errc::duplicate_id, "model '" + model.id + "' is already registered");
  models_.push_back(std::move(model));
  return models_.size() - 1;
}

const CostModel* ModelRegistry::find(std::string_view id) const {
  for (const CostModel& model : models_)
    if (model.id == id) return &model;
  return nullptr;
}

std::vector<std::string> ModelRegistry::ids() const {
  std::vector<std::string> out;
  out.reserve(models_.size());
  for (const CostModel& model : models_) out.push_back(model.id);
  return out;
}

}  // namespace costlab
