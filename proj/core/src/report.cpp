#include "costlab/report.hpp"

#include <array>
#include <sstream>

#include <json.hpp>

#include "costlab/io.hpp"
#include "costlab/reference.hpp"
#include "costlab/version.hpp"

namespace costlab {

using nlohmann::json;

std::string_view to_string(GridMode mode) {
  return mode == GridMode::exact_decades ? "exact" : "calibrated";
}

GridMode grid_mode_from_string(std::string_view text) {
  if (text == "exact" || text == "exact-decades") return GridMode::exact_decades;
  if (text == "calibrated") return GridMode::calibrated;
  fail(errc::parse_failure, "unknown grid mode '" + std::string(text) + "'");
}

namespace {

Advantage advantage_from_string(std::string_view text) {
  if (text == "classical") return Advantage::classical;
  if (text == "marginal") return Advantage::marginal;
  if (text == "quantum") return Advantage::quantum;
  fail(errc::parse_failure, "unknown advantage label '" + std::string(text) + "'");
}

}  // namespace

ReportBundle make_bundle() {
  ReportBundle bundle;
  bundle.tool = std::string(kToolName);
  bundle.version = std::string(kToolVersion);
  return bundle;
}

ReportBundle reproduce_tables(GridMode mode, const ModelRegistry& registry,
                              const ClassificationBand& band) {
  static constexpr std::array<std::int64_t, 3> kAnchors = {10'000, 1'000'000, 100'000'000};

  ReportBundle bundle = make_bundle();
  bundle.grid_mode = std::string(to_string(mode));
  bundle.model_ids = registry.ids();

  auto sample_at = [&](const Scenario& scenario, std::int64_t anchor) {
    return mode == GridMode::calibrated ? calibrated_anchor(scenario, anchor) : anchor;
  };
  auto classified_row = [&](const Scenario& scenario, std::int64_t n) {
    const std::int64_t ns[] = {n};
    const SweepResult sweep = run_sweep(scenario, ns, registry);
    return std::make_pair(sweep.rows.front(), classify_rows(sweep, registry, band).front());
  };

  for (const char* name : {"sparse-short", "sparse-long"}) {
    const Scenario& scenario = *find_builtin_scenario(name);
    for (std::int64_t anchor : kAnchors) {
      const std::int64_t n = sample_at(scenario, anchor);
      const auto [row, winner] = classified_row(scenario, n);
      bundle.cost_table.push_back({scenario.name, n, row.m, row.l, row.costs, winner.winner});
    }
  }

  for (const ReferenceRatioRow& ref : reference_ratio_table()) {
    const Scenario& scenario = *find_builtin_scenario(ref.scenario);
    const std::int64_t n = sample_at(scenario, ref.anchor);
    const auto [row, winner] = classified_row(scenario, n);
    RatioTableRow out;
    out.scenario = scenario.name;
    out.n = n;
    out.best_classical = winner.best_classical;
    out.wesolowski = winner.wesolowski;
    out.ratio = winner.ratio;
    out.display_ratio = round_to_sig(winner.best_classical, 3) / round_to_sig(winner.wesolowski, 3);
    out.label = winner.label;
    bundle.ratio_table.push_back(std::move(out));
  }
  return bundle;
}

// ---------------------------------------------------------------------------
// CSV

namespace {

void append_csv_row(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  out += '\n';
}

std::string sig6(double v) { return format_sig(v, 6); }

}  // namespace

std::string cost_table_csv(const ReportBundle& bundle) {
  std::string out;
  std::vector<std::string> header = {"scenario", "n", "m", "l"};
  header.insert(header.end(), bundle.model_ids.begin(), bundle.model_ids.end());
  header.push_back("winner");
  append_csv_row(out, header);
  for (const CostTableRow& row : bundle.cost_table) {
    std::vector<std::string> cells = {row.scenario, std::to_string(row.n), sig6(row.m), sig6(row.l)};
    for (double c : row.costs) cells.push_back(sig6(c));
    cells.push_back(row.winner);
    append_csv_row(out, cells);
  }
  return out;
}

std::string ratio_table_csv(const ReportBundle& bundle) {
  std::string out;
  append_csv_row(out, {"scenario", "n", "best_classical", "wesolowski", "ratio", "advantage"});
  for (const RatioTableRow& row : bundle.ratio_table)
    append_csv_row(out, {row.scenario, std::to_string(row.n), sig6(row.best_classical),
                         sig6(row.wesolowski), sig6(row.display_ratio),
                         std::string(to_string(row.label))});
  return out;
}

std::string sweep_csv(const SweepResult& sweep) {
  std::string out;
  std::vector<std::string> header = {"n", "m", "l"};
  header.insert(header.end(), sweep.model_ids.begin(), sweep.model_ids.end());
  append_csv_row(out, header);
  for (const SweepRow& row : sweep.rows) {
    std::vector<std::string> cells = {std::to_string(row.n), sig6(row.m), sig6(row.l)};
    for (double c : row.costs) cells.push_back(sig6(c));
    append_csv_row(out, cells);
  }
  return out;
}

std::string crossover_csv(const CrossoverResult& result) {
  std::string out;
  append_csv_row(out, {"scenario", "model_a", "model_b", "n_star", "n_star_rounded", "bracket_lo",
                       "bracket_hi", "sign_below", "sign_above", "more_crossings"});
  append_csv_row(out, {result.scenario, result.model_a, result.model_b,
                       result.n_star ? sig6(*result.n_star) : std::string(),
                       result.n_star_rounded ? std::to_string(*result.n_star_rounded) : std::string(),
                       sig6(result.bracket_lo), sig6(result.bracket_hi),
                       std::to_string(result.sign_below), std::to_string(result.sign_above),
                       result.more_crossings ? "true" : "false"});
  return out;
}

std::string zone_map_csv(const ZoneMap& map) {
  std::string out;
  append_csv_row(out, {"reference_n", "alpha", "path_law", "ratio", "advantage"});
  for (const ZoneCell& cell : map.cells)
    append_csv_row(out, {std::to_string(map.reference_n), sig6(cell.alpha), cell.path_label,
                         sig6(cell.ratio), std::string(to_string(cell.label))});
  return out;
}

std::string empirical_csv(const ReportBundle& bundle) {
  std::string out;
  append_csv_row(out,
                 {"n", "m", "seed", "source", "heap_pops", "settled_pops", "heap_pushes",
                  "edge_relaxations", "work_proxy", "model_cost", "reachable", "max_hops",
                  "mean_hops", "median_hops", "max_weight", "mean_weight", "median_weight",
                  "wesolowski_hop_cost", "wesolowski_weight_cost"});
  for (const EmpiricalRunRow& row : bundle.empirical_runs)
    append_csv_row(out, {std::to_string(row.n), std::to_string(row.m), std::to_string(row.seed),
                         std::to_string(row.source), std::to_string(row.stats.heap_pops),
                         std::to_string(row.stats.settled_pops), std::to_string(row.stats.heap_pushes),
                         std::to_string(row.stats.edge_relaxations), sig6(row.work_proxy),
                         sig6(row.model_cost), std::to_string(row.geometry.reachable),
                         std::to_string(row.geometry.max_hops), sig6(row.geometry.mean_hops),
                         sig6(row.geometry.median_hops), sig6(row.geometry.max_weight),
                         sig6(row.geometry.mean_weight), sig6(row.geometry.median_weight),
                         sig6(row.wesolowski_hop_cost), sig6(row.wesolowski_weight_cost)});
  return out;
}

// ---------------------------------------------------------------------------
// Plain-text tables

namespace {

std::string render_aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (widths.size() <= i) widths.resize(i + 1, 0);
      widths[i] = std::max(widths[i], row[i].size());
    }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += row[i];
      if (i + 1 < row.size()) out.append(widths[i] - row[i].size() + 2, ' ');
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string render_cost_table(const ReportBundle& bundle) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"scenario", "n"};
  header.insert(header.end(), bundle.model_ids.begin(), bundle.model_ids.end());
  header.push_back("winner");
  rows.push_back(header);
  for (const CostTableRow& row : bundle.cost_table) {
    std::vector<std::string> cells = {row.scenario, std::to_string(row.n)};
    for (double c : row.costs) cells.push_back(sig6(c));
    cells.push_back(row.winner);
    rows.push_back(cells);
  }
  return render_aligned(rows);
}

std::string render_ratio_table(const ReportBundle& bundle) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"scenario", "n", "best_classical", "wesolowski", "ratio", "advantage"});
  for (const RatioTableRow& row : bundle.ratio_table)
    rows.push_back({row.scenario, std::to_string(row.n), sig6(row.best_classical),
                    sig6(row.wesolowski), sig6(row.display_ratio),
                    std::string(to_string(row.label))});
  return render_aligned(rows);
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json sweep_to_json(const SweepResult& sweep) {
  json rows = json::array();
  for (const SweepRow& row : sweep.rows)
    rows.push_back({{"n", row.n}, {"m", row.m}, {"l", row.l}, {"costs", row.costs}});
  return {{"scenario", sweep.scenario}, {"model_ids", sweep.model_ids}, {"rows", std::move(rows)}};
}

SweepResult sweep_from_json_obj(const json& j) {
  SweepResult sweep;
  sweep.scenario = j.at("scenario").get<std::string>();
  sweep.model_ids = j.at("model_ids").get<std::vector<std::string>>();
  for (const json& row : j.at("rows"))
    sweep.rows.push_back({row.at("n").get<std::int64_t>(), row.at("m").get<double>(),
                          row.at("l").get<double>(), row.at("costs").get<std::vector<double>>()});
  return sweep;
}

json crossover_to_json(const CrossoverResult& r) {
  json j = {{"scenario", r.scenario},
            {"model_a", r.model_a},
            {"model_b", r.model_b},
            {"bracket_lo", r.bracket_lo},
            {"bracket_hi", r.bracket_hi},
            {"sign_below", r.sign_below},
            {"sign_above", r.sign_above},
            {"more_crossings", r.more_crossings}};
  j["n_star"] = r.n_star ? json(*r.n_star) : json(nullptr);
  j["n_star_rounded"] = r.n_star_rounded ? json(*r.n_star_rounded) : json(nullptr);
  return j;
}

CrossoverResult crossover_from_json(const json& j) {
  CrossoverResult r;
  r.scenario = j.at("scenario").get<std::string>();
  r.model_a = j.at("model_a").get<std::string>();
  r.model_b = j.at("model_b").get<std::string>();
  r.bracket_lo = j.at("bracket_lo").get<double>();
  r.bracket_hi = j.at("bracket_hi").get<double>();
  r.sign_below = j.at("sign_below").get<int>();
  r.sign_above = j.at("sign_above").get<int>();
  r.more_crossings = j.at("more_crossings").get<bool>();
  if (!j.at("n_star").is_null()) r.n_star = j.at("n_star").get<double>();
  if (!j.at("n_star_rounded").is_null())
    r.n_star_rounded = j.at("n_star_rounded").get<std::int64_t>();
  return r;
}

json zones_to_json(const ZoneMap& map) {
  json cells = json::array();
  for (const ZoneCell& cell : map.cells)
    cells.push_back({{"alpha", cell.alpha},
                     {"path_label", cell.path_label},
                     {"ratio", cell.ratio},
                     {"advantage", std::string(to_string(cell.label))}});
  return {{"reference_n", map.reference_n},
          {"alphas", map.alphas},
          {"path_labels", map.path_labels},
          {"cells", std::move(cells)}};
}

ZoneMap zones_from_json(const json& j) {
  ZoneMap map;
  map.reference_n = j.at("reference_n").get<std::int64_t>();
  map.alphas = j.at("alphas").get<std::vector<double>>();
  map.path_labels = j.at("path_labels").get<std::vector<std::string>>();
  for (const json& cell : j.at("cells"))
    map.cells.push_back({cell.at("alpha").get<double>(),
                         cell.at("path_label").get<std::string>(),
                         cell.at("ratio").get<double>(),
                         advantage_from_string(cell.at("advantage").get<std::string>())});
  return map;
}

json geometry_to_json(const PathGeometry& geo) {
  return {{"reachable", geo.reachable},   {"max_hops", geo.max_hops},
          {"mean_hops", geo.mean_hops},   {"median_hops", geo.median_hops},
          {"max_weight", geo.max_weight}, {"mean_weight", geo.mean_weight},
          {"median_weight", geo.median_weight}};
}

PathGeometry geometry_from_json(const json& j) {
  PathGeometry geo;
  geo.reachable = j.at("reachable").get<std::int64_t>();
  geo.max_hops = j.at("max_hops").get<std::int64_t>();
  geo.mean_hops = j.at("mean_hops").get<double>();
  geo.median_hops = j.at("median_hops").get<double>();
  geo.max_weight = j.at("max_weight").get<double>();
  geo.mean_weight = j.at("mean_weight").get<double>();
  geo.median_weight = j.at("median_weight").get<double>();
  return geo;
}

json empirical_to_json(const EmpiricalRunRow& row) {
  return {{"n", row.n},
          {"m", row.m},
          {"seed", row.seed},
          {"source", row.source},
          {"heap_pops", row.stats.heap_pops},
          {"settled_pops", row.stats.settled_pops},
          {"heap_pushes", row.stats.heap_pushes},
          {"edge_relaxations", row.stats.edge_relaxations},
          {"work_proxy", row.work_proxy},
          {"model_cost", row.model_cost},
          {"geometry", geometry_to_json(row.geometry)},
          {"wesolowski_hop_cost", row.wesolowski_hop_cost},
          {"wesolowski_weight_cost", row.wesolowski_weight_cost}};
}

EmpiricalRunRow empirical_from_json(const json& j) {
  EmpiricalRunRow row;
  row.n = j.at("n").get<std::int64_t>();
  row.m = j.at("m").get<std::int64_t>();
  row.seed = j.at("seed").get<std::uint64_t>();
  row.source = j.at("source").get<std::int64_t>();
  row.stats.heap_pops = j.at("heap_pops").get<std::int64_t>();
  row.stats.settled_pops = j.at("settled_pops").get<std::int64_t>();
  row.stats.heap_pushes = j.at("heap_pushes").get<std::int64_t>();
  row.stats.edge_relaxations = j.at("edge_relaxations").get<std::int64_t>();
  row.work_proxy = j.at("work_proxy").get<double>();
  row.model_cost = j.at("model_cost").get<double>();
  row.geometry = geometry_from_json(j.at("geometry"));
  row.wesolowski_hop_cost = j.at("wesolowski_hop_cost").get<double>();
  row.wesolowski_weight_cost = j.at("wesolowski_weight_cost").get<double>();
  return row;
}

json fit_to_json(const FitReport& fit) {
  return {{"constant", fit.constant},
          {"slope", fit.slope},
          {"r_squared", fit.r_squared},
          {"degenerate", fit.degenerate},
          {"num_runs", fit.num_runs}};
}

FitReport fit_from_json(const json& j) {
  FitReport fit;
  fit.constant = j.at("constant").get<double>();
  fit.slope = j.at("slope").get<double>();
  fit.r_squared = j.at("r_squared").get<double>();
  fit.degenerate = j.at("degenerate").get<bool>();
  fit.num_runs = j.at("num_runs").get<std::int64_t>();
  return fit;
}

}  // namespace

std::string to_json_string(const ReportBundle& bundle, int indent) {
  json j;
  j["tool"] = bundle.tool;
  j["version"] = bundle.version;
  j["grid_mode"] = bundle.grid_mode;
  j["seed"] = bundle.seed;
  j["model_ids"] = bundle.model_ids;
  j["cost_table"] = json::array();
  for (const CostTableRow& row : bundle.cost_table)
    j["cost_table"].push_back({{"scenario", row.scenario},
                               {"n", row.n},
                               {"m", row.m},
                               {"l", row.l},
                               {"costs", row.costs},
                               {"winner", row.winner}});
  j["ratio_table"] = json::array();
  for (const RatioTableRow& row : bundle.ratio_table)
    j["ratio_table"].push_back({{"scenario", row.scenario},
                                {"n", row.n},
                                {"best_classical", row.best_classical},
                                {"wesolowski", row.wesolowski},
                                {"ratio", row.ratio},
                                {"display_ratio", row.display_ratio},
                                {"advantage", std::string(to_string(row.label))}});
  j["sweeps"] = json::array();
  for (const SweepResult& sweep : bundle.sweeps) j["sweeps"].push_back(sweep_to_json(sweep));
  j["crossovers"] = json::array();
  for (const CrossoverResult& r : bundle.crossovers) j["crossovers"].push_back(crossover_to_json(r));
  j["zones"] = bundle.zones ? zones_to_json(*bundle.zones) : json(nullptr);
  j["empirical_runs"] = json::array();
  for (const EmpiricalRunRow& row : bundle.empirical_runs)
    j["empirical_runs"].push_back(empirical_to_json(row));
  j["fit"] = bundle.fit ? fit_to_json(*bundle.fit) : json(nullptr);
  return j.dump(indent) + "\n";
}

ReportBundle bundle_from_json(const std::string& text) try {
  const json j = json::parse(text);
  ReportBundle bundle;
  bundle.tool = j.at("tool").get<std::string>();
  bundle.version = j.at("version").get<std::string>();
  bundle.grid_mode = j.at("grid_mode").get<std::string>();
  bundle.seed = j.at("seed").get<std::uint64_t>();
  bundle.model_ids = j.at("model_ids").get<std::vector<std::string>>();
  for (const json& row : j.at("cost_table"))
    bundle.cost_table.push_back({row.at("scenario").get<std::string>(),
                                 row.at("n").get<std::int64_t>(), row.at("m").get<double>(),
                                 row.at("l").get<double>(),
                                 row.at("costs").get<std::vector<double>>(),
                                 row.at("winner").get<std::string>()});
  for (const json& row : j.at("ratio_table"))
    bundle.ratio_table.push_back(
        {row.at("scenario").get<std::string>(), row.at("n").get<std::int64_t>(),
         row.at("best_classical").get<double>(), row.at("wesolowski").get<double>(),
         row.at("ratio").get<double>(), row.at("display_ratio").get<double>(),
         advantage_from_string(row.at("advantage").get<std::string>())});
  for (const json& sweep : j.at("sweeps")) bundle.sweeps.push_back(sweep_from_json_obj(sweep));
  for (const json& r : j.at("crossovers")) bundle.crossovers.push_back(crossover_from_json(r));
  if (!j.at("zones").is_null()) bundle.zones = zones_from_json(j.at("zones"));
  for (const json& row : j.at("empirical_runs"))
    bundle.empirical_runs.push_back(empirical_from_json(row));
  if (!j.at("fit").is_null()) bundle.fit = fit_from_json(j.at("fit"));
  return bundle;
} catch (const json::exception& e) {
  fail(errc::parse_failure, std::string("bad report JSON: ") + e.what());
}

std::string to_json_string(const SweepResult& sweep, int indent) {
  return sweep_to_json(sweep).dump(indent) + "\n";
}

SweepResult sweep_from_json(const std::string& text) try {
  return sweep_from_json_obj(json::parse(text));
} catch (const json::exception& e) {
  fail(errc::parse_failure, std::string("bad sweep JSON: ") + e.what());
}

}  // namespace costlab
