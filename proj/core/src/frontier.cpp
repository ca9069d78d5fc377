#include "costlab/frontier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace costlab {

std::string_view to_string(Advantage a) {
  switch (a) {
    case Advantage::classical: return "classical";
    case Advantage::marginal: return "marginal";
    case Advantage::quantum: return "quantum";
  }
  return "unknown";
}

Advantage classify_ratio(double ratio, const ClassificationBand& band) {
  if (ratio < band.classical_below) return Advantage::classical;
  if (ratio >= band.quantum_at_least) return Advantage::quantum;
  return Advantage::marginal;
}

namespace {

struct ColumnInfo {
  std::vector<std::size_t> classical_columns;
  std::size_t wesolowski_column = 0;
};

ColumnInfo resolve_columns(const SweepResult& sweep, const ModelRegistry& registry) {
  ColumnInfo info;
  bool have_wesolowski = false;
  for (std::size_t i = 0; i < sweep.model_ids.size(); ++i) {
    const CostModel* model = registry.find(sweep.model_ids[i]);
    if (!model) fail(errc::missing_model_kind, "model '" + sweep.model_ids[i] + "' is not registered");
    if (model->kind == ModelKind::classical) info.classical_columns.push_back(i);
    if (model->id == "wesolowski") {
      info.wesolowski_column = i;
      have_wesolowski = true;
    }
  }
  if (info.classical_columns.empty())
    fail(errc::missing_model_kind, "sweep has no classical model column");
  if (!have_wesolowski) fail(errc::missing_model_kind, "sweep has no 'wesolowski' column");
  return info;
}

WinnerRow classify_one(const SweepRow& row, const SweepResult& sweep, const ColumnInfo& info,
                       const ClassificationBand& band) {
  WinnerRow out;
  out.n = row.n;
  std::size_t winner = 0;
  for (std::size_t i = 1; i < row.costs.size(); ++i)
    if (row.costs[i] < row.costs[winner]) winner = i;  // strict: ties keep registry order
  out.winner = sweep.model_ids[winner];
  out.best_classical = std::numeric_limits<double>::infinity();
  for (std::size_t i : info.classical_columns)
    out.best_classical = std::min(out.best_classical, row.costs[i]);
  out.wesolowski = row.costs[info.wesolowski_column];
  out.ratio = out.best_classical / out.wesolowski;
  out.label = classify_ratio(out.ratio, band);
  return out;
}

}  // namespace

std::vector<WinnerRow> classify_rows(const SweepResult& sweep, const ModelRegistry& registry,
                                     const ClassificationBand& band) {
  const ColumnInfo info = resolve_columns(sweep, registry);
  std::vector<WinnerRow> out;
  out.reserve(sweep.rows.size());
  for (const SweepRow& row : sweep.rows) out.push_back(classify_one(row, sweep, info, band));
  return out;
}

namespace {

double model_cost(const Scenario& scenario, const CostModel& model, double n) {
  GraphParams params;
  params.n = n;
  params.m = scenario.edges_at(n);
  params.l = scenario.path_length_at(n);
  return model.evaluate(params);
}

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

}  // namespace

CrossoverResult find_crossover(const Scenario& scenario, const std::string& model_a,
                               const std::string& model_b, double n_lo, double n_hi,
                               const ModelRegistry& registry, int probes) {
  if (!(n_lo >= 2.0) || !(n_hi > n_lo) || !(n_hi <= 1e12))
    fail(errc::invalid_range, "crossover range must satisfy 2 <= n_lo < n_hi <= 1e12");
  if (probes < 2) fail(errc::invalid_range, "need at least 2 probes");
  const CostModel* a = registry.find(model_a);
  const CostModel* b = registry.find(model_b);
  if (!a || !b) fail(errc::invalid_params, "both crossover models must be registered");

  CrossoverResult result;
  result.scenario = scenario.name;
  result.model_a = model_a;
  result.model_b = model_b;
  result.bracket_lo = n_lo;
  result.bracket_hi = n_hi;

  const double x_lo = std::log(n_lo), x_hi = std::log(n_hi);
  auto diff_at = [&](double x) {
    const double n = std::exp(x);
    return std::log(model_cost(scenario, *a, n)) - std::log(model_cost(scenario, *b, n));
  };

  // Probe scan; exact zeros carry no sign and are skipped when pairing.
  std::vector<double> xs(static_cast<std::size_t>(probes));
  std::vector<int> signs(static_cast<std::size_t>(probes));
  for (int i = 0; i < probes; ++i) {
    xs[i] = x_lo + (x_hi - x_lo) * i / (probes - 1);
    signs[i] = sign_of(diff_at(xs[i]));
  }

  int prev_sign = 0;
  std::size_t prev_index = 0;
  std::optional<std::pair<std::size_t, std::size_t>> first_bracket;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (signs[i] == 0) continue;
    if (prev_sign != 0 && signs[i] != prev_sign) {
      if (!first_bracket) {
        first_bracket = {prev_index, i};
      } else {
        result.more_crossings = true;
        break;
      }
    }
    prev_sign = signs[i];
    prev_index = i;
  }

  if (!first_bracket) {
    result.sign_below = result.sign_above = prev_sign;  // constant sign (or 0 throughout)
    return result;
  }

  double lo = xs[first_bracket->first], hi = xs[first_bracket->second];
  result.bracket_lo = std::exp(lo);
  result.bracket_hi = std::exp(hi);
  result.sign_below = signs[first_bracket->first];
  result.sign_above = signs[first_bracket->second];

  double f_lo = diff_at(lo);
  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    const double f_mid = diff_at(mid);
    if (std::abs(f_mid) <= 1e-12 || hi - lo <= 1e-13) break;
    if (sign_of(f_mid) == sign_of(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  result.n_star = std::exp(mid);
  result.n_star_rounded = std::llround(*result.n_star);
  return result;
}

RatioSeries cost_ratio_series(const Scenario& scenario, const std::string& numerator,
                              const std::string& denominator, std::span<const double> ns,
                              const ModelRegistry& registry) {
  if (ns.empty()) fail(errc::empty_grid, "ratio series grid is empty");
  const CostModel* num = registry.find(numerator);
  const CostModel* den = registry.find(denominator);
  if (!num || !den) fail(errc::invalid_params, "both ratio models must be registered");

  RatioSeries series;
  series.scenario = scenario.name;
  series.numerator = numerator;
  series.denominator = denominator;
  series.n.assign(ns.begin(), ns.end());
  series.ratio.reserve(ns.size());
  for (double n : ns) {
    if (!(n >= 2.0)) fail(errc::invalid_range, "ratio series requires n >= 2");
    series.ratio.push_back(model_cost(scenario, *num, n) / model_cost(scenario, *den, n));
  }
  series.strictly_increasing = series.ratio.size() > 1;
  for (std::size_t i = 1; i < series.ratio.size(); ++i)
    if (!(series.ratio[i] > series.ratio[i - 1])) {
      series.strictly_increasing = false;
      break;
    }
  return series;
}

RatioSeries cost_ratio_series(const Scenario& scenario, const std::string& numerator,
                              const std::string& denominator, double n_lo, double n_hi,
                              const ModelRegistry& registry, int points_per_decade) {
  if (!(n_lo >= 2.0) || !(n_hi > n_lo)) fail(errc::invalid_range, "bad ratio series range");
  if (points_per_decade < 1) fail(errc::invalid_range, "points per decade must be >= 1");
  const double decades = std::log10(n_hi) - std::log10(n_lo);
  const int count = std::max(2, static_cast<int>(std::lround(decades * points_per_decade)) + 1);
  std::vector<double> ns(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    ns[i] = std::pow(10.0, std::log10(n_lo) + decades * i / (count - 1));
  return cost_ratio_series(scenario, numerator, denominator, ns, registry);
}

ScalingLaw pivot_density_law(double alpha) {
  // c(alpha) = pivot_m / pivot_n^alpha with pivot (10^3, 10^4).
  return {ScalingLaw::Kind::power, 1e4 / std::pow(1e3, alpha), alpha};
}

ZoneMap map_zones(double alpha_min, double alpha_max, int alpha_count,
                  std::span<const ScalingLaw> path_laws, std::int64_t reference_n,
                  const ModelRegistry& registry, const ClassificationBand& band) {
  if (reference_n < 2) fail(errc::invalid_params, "reference n must be >= 2");
  if (alpha_count < 1 || path_laws.empty()) fail(errc::invalid_params, "zone grid is empty");
  if (alpha_count > 1 && !(alpha_max > alpha_min))
    fail(errc::invalid_params, "alpha range must be increasing");

  ZoneMap map;
  map.reference_n = reference_n;
  for (int i = 0; i < alpha_count; ++i)
    map.alphas.push_back(alpha_count == 1 ? alpha_min
                                          : alpha_min + (alpha_max - alpha_min) * i / (alpha_count - 1));
  for (const ScalingLaw& law : path_laws) map.path_labels.push_back(to_string(law));

  for (double alpha : map.alphas) {
    for (std::size_t p = 0; p < path_laws.size(); ++p) {
      Scenario cell_scenario{"zone", pivot_density_law(alpha), path_laws[p]};
      const std::int64_t ns[] = {reference_n};
      const SweepResult sweep = run_sweep(cell_scenario, ns, registry);
      const WinnerRow row = classify_rows(sweep, registry, band).front();
      map.cells.push_back({alpha, map.path_labels[p], row.ratio, row.label});
    }
  }
  return map;
}

}  // namespace costlab
