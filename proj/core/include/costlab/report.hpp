#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "costlab/empirical.hpp"
#include "costlab/fit.hpp"
#include "costlab/frontier.hpp"
#include "costlab/sweep.hpp"

namespace costlab {

enum class GridMode { exact_decades, calibrated };

std::string_view to_string(GridMode mode);
GridMode grid_mode_from_string(std::string_view text);  // "exact" | "calibrated"

struct CostTableRow {
  std::string scenario;
  std::int64_t n = 0;  // evaluation point (calibrated sample in calibrated mode)
  double m = 0.0;
  double l = 0.0;
  std::vector<double> costs;  // model-registry order
  std::string winner;

  friend bool operator==(const CostTableRow&, const CostTableRow&) = default;
};

struct RatioTableRow {
  std::string scenario;
  std::int64_t n = 0;
  double best_classical = 0.0;
  double wesolowski = 0.0;
  double ratio = 0.0;          // full-precision best_classical / wesolowski
  double display_ratio = 0.0;  // quotient of the 3-significant-figure cells,
                               // the form the reference table prints
  Advantage label = Advantage::marginal;

  friend bool operator==(const RatioTableRow&, const RatioTableRow&) = default;
};

/// Everything a CLI invocation produced, with enough metadata to rerun it.
/// JSON serialization is lossless; CSV renderings round to 6 significant
/// digits.
struct ReportBundle {
  std::string tool;
  std::string version;
  std::string grid_mode = "exact";
  std::uint64_t seed = 0;
  std::vector<std::string> model_ids;
  std::vector<CostTableRow> cost_table;
  std::vector<RatioTableRow> ratio_table;
  std::vector<SweepResult> sweeps;
  std::vector<CrossoverResult> crossovers;
  std::optional<ZoneMap> zones;
  std::vector<EmpiricalRunRow> empirical_runs;
  std::optional<FitReport> fit;

  friend bool operator==(const ReportBundle&, const ReportBundle&) = default;
};

ReportBundle make_bundle();  // metadata-initialized empty bundle

/// Rebuilds the reference cost and ratio tables (sparse cost rows at the
/// decade anchors; ratio rows for all four built-in scenarios). In calibrated
/// mode the anchors are replaced by the back-solved reference samples.
ReportBundle reproduce_tables(GridMode mode, const ModelRegistry& registry,
                              const ClassificationBand& band = {});

// CSV renderings. Every table has a header row; model columns follow registry
// order.
std::string cost_table_csv(const ReportBundle& bundle);
std::string ratio_table_csv(const ReportBundle& bundle);
std::string sweep_csv(const SweepResult& sweep);
std::string crossover_csv(const CrossoverResult& result);
std::string zone_map_csv(const ZoneMap& map);
std::string empirical_csv(const ReportBundle& bundle);

// Aligned plain-text tables for terminal output.
std::string render_cost_table(const ReportBundle& bundle);
std::string render_ratio_table(const ReportBundle& bundle);

// Lossless JSON round-trip.
std::string to_json_string(const ReportBundle& bundle, int indent = 2);
ReportBundle bundle_from_json(const std::string& text);
std::string to_json_string(const SweepResult& sweep, int indent = 2);
SweepResult sweep_from_json(const std::string& text);

}  // namespace costlab
