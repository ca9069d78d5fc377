#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "costlab/empirical.hpp"
#include "costlab/frontier.hpp"
#include "costlab/io.hpp"
#include "costlab/reference.hpp"
#include "costlab/report.hpp"
#include "costlab/scenario.hpp"
#include "costlab/sweep.hpp"
#include "costlab/version.hpp"
#include "svg_chart.hpp"

namespace {

using namespace costlab;

constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

struct OutputOptions {
  std::string out_dir = ".";
  std::string format = "both";  // csv | json | both

  bool want_csv() const { return format != "json"; }
  bool want_json() const { return format != "csv"; }
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--out", opts.out_dir, "Output directory")->capture_default_str();
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "both"}))
      ->capture_default_str();
}

std::filesystem::path output_path(const OutputOptions& opts, const std::string& name) {
  std::filesystem::create_directories(opts.out_dir);
  return std::filesystem::path(opts.out_dir) / name;
}

void emit(const OutputOptions& opts, const std::string& name, const std::string& contents) {
  const auto path = output_path(opts, name);
  write_file_atomic(path, contents);
  std::cout << "wrote " << path.string() << '\n';
}

std::string file_token(const std::string& name) {
  std::string token = name;
  for (char& c : token)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
  return token;
}

double parse_count_flag(const std::string& text, const char* what) {
  try {
    return parse_double(text);
  } catch (const error&) {
    fail(errc::parse_failure, std::string("bad ") + what + " '" + text + "'");
  }
}

// ---------------------------------------------------------------------------
// reproduce-tables

struct TablesArgs {
  std::string grid = "exact";
  OutputOptions out;
};

int cmd_reproduce_tables(const TablesArgs& args) {
  const ModelRegistry registry = ModelRegistry::builtin();
  const ReportBundle bundle = reproduce_tables(grid_mode_from_string(args.grid), registry);
  std::cout << "grid mode: " << bundle.grid_mode << "\n\n"
            << "Theoretical cost comparison (sparse scenarios)\n"
            << render_cost_table(bundle) << '\n'
            << "Best-classical vs wesolowski cost ratios\n"
            << render_ratio_table(bundle);
  if (args.out.want_csv()) {
    emit(args.out, "cost_table.csv", cost_table_csv(bundle));
    emit(args.out, "ratio_table.csv", ratio_table_csv(bundle));
  }
  if (args.out.want_json()) emit(args.out, "tables.json", to_json_string(bundle));
  return 0;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  std::string scenario = "sparse-short";
  std::string nmin = "1e2";
  std::string nmax = "1e8";
  int ppd = 25;
  bool svg = false;
  OutputOptions out;
};

int cmd_sweep(const SweepArgs& args) {
  const ScenarioFile resolved = resolve_scenario(args.scenario);
  NGrid grid = resolved.grid.value_or(NGrid{});
  grid.n_min = static_cast<std::int64_t>(parse_count_flag(args.nmin, "--nmin"));
  grid.n_max = static_cast<std::int64_t>(parse_count_flag(args.nmax, "--nmax"));
  grid.points_per_decade = args.ppd;

  const ModelRegistry registry = ModelRegistry::builtin();
  const SweepResult sweep = run_sweep(resolved.scenario, grid, registry);
  std::cout << "scenario " << sweep.scenario << ": " << sweep.rows.size() << " rows, n in ["
            << sweep.rows.front().n << ", " << sweep.rows.back().n << "]\n";

  const std::string token = file_token(sweep.scenario);
  if (args.out.want_csv()) emit(args.out, "sweep_" + token + ".csv", sweep_csv(sweep));
  if (args.out.want_json()) {
    ReportBundle bundle = make_bundle();
    bundle.model_ids = registry.ids();
    bundle.sweeps.push_back(sweep);
    emit(args.out, "sweep_" + token + ".json", to_json_string(bundle));
  }
  if (args.svg) emit(args.out, "sweep_" + token + ".svg", tools::sweep_svg(sweep));
  return 0;
}

// ---------------------------------------------------------------------------
// crossover

struct CrossoverArgs {
  std::string scenario = "sparse-long";
  std::string model_a = "dijkstra";
  std::string model_b = "wesolowski";
  std::string nmin = "1e2";
  std::string nmax = "1e8";
  OutputOptions out;
};

int cmd_crossover(const CrossoverArgs& args) {
  const ScenarioFile resolved = resolve_scenario(args.scenario);
  const ModelRegistry registry = ModelRegistry::builtin();
  const CrossoverResult result =
      find_crossover(resolved.scenario, args.model_a, args.model_b,
                     parse_count_flag(args.nmin, "--nmin"), parse_count_flag(args.nmax, "--nmax"),
                     registry);
  if (result.n_star)
    std::cout << "crossover of " << result.model_a << " and " << result.model_b << " under "
              << result.scenario << ": n* = " << format_sig(*result.n_star, 6) << " (round "
              << *result.n_star_rounded << ')'
              << (result.more_crossings ? ", further crossings exist" : "") << '\n';
  else
    std::cout << "no crossover of " << result.model_a << " and " << result.model_b << " under "
              << result.scenario << " in range\n";

  const std::string token = "crossover_" + file_token(result.scenario) + '_' +
                            file_token(result.model_a) + "_vs_" + file_token(result.model_b);
  if (args.out.want_csv()) emit(args.out, token + ".csv", crossover_csv(result));
  if (args.out.want_json()) {
    ReportBundle bundle = make_bundle();
    bundle.model_ids = registry.ids();
    bundle.crossovers.push_back(result);
    emit(args.out, token + ".json", to_json_string(bundle));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// zones

struct ZonesArgs {
  std::string alpha = "0.5:2.5:9";
  std::string paths = "short,long";
  std::string ref_n = "1e6";
  OutputOptions out;
};

ScalingLaw parse_path_token(const std::string& token) {
  if (token == "short") return short_path_law();
  if (token == "long") return long_path_law();
  // polylog:<e>[:<c>] or power:<e>[:<c>]
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= token.size()) {
    const std::size_t colon = token.find(':', start);
    parts.push_back(token.substr(start, colon == std::string::npos ? colon : colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (parts.size() < 2 || parts.size() > 3)
    fail(errc::parse_failure, "bad path law '" + token + "', expected short|long|kind:e[:c]");
  ScalingLaw law;
  if (parts[0] == "polylog")
    law.kind = ScalingLaw::Kind::polylog;
  else if (parts[0] == "power")
    law.kind = ScalingLaw::Kind::power;
  else
    fail(errc::parse_failure, "bad path law kind '" + parts[0] + "'");
  law.e = parse_double(parts[1]);
  law.c = parts.size() == 3 ? parse_double(parts[2]) : 1.0;
  law.validate();
  return law;
}

int cmd_zones(const ZonesArgs& args) {
  double alpha_lo = 0, alpha_hi = 0;
  int alpha_count = 0;
  {
    char c1 = 0, c2 = 0;
    std::istringstream is(args.alpha);
    if (!(is >> alpha_lo >> c1 >> alpha_hi >> c2 >> alpha_count) || c1 != ':' || c2 != ':')
      fail(errc::parse_failure, "bad --alpha '" + args.alpha + "', expected lo:hi:count");
  }
  std::vector<ScalingLaw> path_laws;
  std::vector<std::string> display;
  {
    std::istringstream is(args.paths);
    std::string token;
    while (std::getline(is, token, ',')) {
      path_laws.push_back(parse_path_token(token));
      display.push_back(token);
    }
  }
  const ModelRegistry registry = ModelRegistry::builtin();
  const std::int64_t ref_n = static_cast<std::int64_t>(parse_count_flag(args.ref_n, "--ref-n"));
  const ZoneMap map = map_zones(alpha_lo, alpha_hi, alpha_count, path_laws, ref_n, registry);

  std::cout << "advantage zones at n = " << map.reference_n << " (" << map.cells.size()
            << " cells)\n";
  for (const ZoneCell& cell : map.cells)
    std::cout << "  alpha " << format_sig(cell.alpha, 6) << "  " << cell.path_label << "  ratio "
              << format_sig(cell.ratio, 6) << "  " << to_string(cell.label) << '\n';

  if (args.out.want_csv()) emit(args.out, "zones.csv", zone_map_csv(map));
  if (args.out.want_json()) {
    ReportBundle bundle = make_bundle();
    bundle.model_ids = registry.ids();
    bundle.zones = map;
    emit(args.out, "zones.json", to_json_string(bundle));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// empirical

struct EmpiricalArgs {
  std::string scenario = "sparse-short";
  std::string nmin = "256";
  std::string nmax = "16384";
  std::uint64_t seed = 42;
  double wmin = 1.0;
  double wmax = 10.0;
  bool real_weights = false;
  OutputOptions out;
};

int cmd_empirical(const EmpiricalArgs& args) {
  EmpiricalConfig config;
  config.density = resolve_scenario(args.scenario).scenario.density;
  config.n_min = static_cast<std::int64_t>(parse_count_flag(args.nmin, "--nmin"));
  config.n_max = static_cast<std::int64_t>(parse_count_flag(args.nmax, "--nmax"));
  config.weights = {args.wmin, args.wmax, !args.real_weights};
  config.seed = args.seed;

  const EmpiricalResult result = run_empirical(config);
  ReportBundle bundle = make_bundle();
  bundle.seed = args.seed;
  bundle.model_ids = ModelRegistry::builtin().ids();
  bundle.empirical_runs = result.rows;
  bundle.fit = result.fit;

  for (const EmpiricalRunRow& row : result.rows)
    std::cout << "n=" << row.n << " m=" << row.m << " pops=" << row.stats.heap_pops
              << " relaxations=" << row.stats.edge_relaxations << " proxy="
              << format_sig(row.work_proxy, 6) << " model=" << format_sig(row.model_cost, 6)
              << " max_hops=" << row.geometry.max_hops << '\n';
  if (result.fit)
    std::cout << "log-log fit: slope " << format_sig(result.fit->slope, 6) << ", constant "
              << format_sig(result.fit->constant, 6) << ", R^2 "
              << format_sig(result.fit->r_squared, 6)
              << (result.fit->degenerate ? " (degenerate)" : "") << '\n';
  else
    std::cout << "ladder too short for a fit (need >= 5 sizes over a decade)\n";

  if (args.out.want_csv()) emit(args.out, "empirical_runs.csv", empirical_csv(bundle));
  if (args.out.want_json()) emit(args.out, "empirical.json", to_json_string(bundle));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Theoretical cost-model comparison toolkit for shortest-path algorithms"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  TablesArgs tables_args;
  CLI::App* tables = app.add_subcommand(
      "reproduce-tables", "Regenerate the reference cost and ratio tables");
  tables->add_option("--grid", tables_args.grid, "Anchor grid")
      ->check(CLI::IsMember({"exact", "calibrated"}))
      ->capture_default_str();
  add_output_options(tables, tables_args.out);

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "Evaluate every model over an n-grid");
  sweep->add_option("--scenario", sweep_args.scenario, "Built-in scenario name or scenario file")
      ->capture_default_str();
  sweep->add_option("--nmin", sweep_args.nmin, "Smallest n")->capture_default_str();
  sweep->add_option("--nmax", sweep_args.nmax, "Largest n")->capture_default_str();
  sweep->add_option("--ppd", sweep_args.ppd, "Log-spaced points per decade")->capture_default_str();
  sweep->add_flag("--svg", sweep_args.svg, "Also write a log-log SVG chart");
  add_output_options(sweep, sweep_args.out);

  CrossoverArgs crossover_args;
  CLI::App* crossover =
      app.add_subcommand("crossover", "Locate the cost crossover of two models");
  crossover->add_option("--scenario", crossover_args.scenario)->capture_default_str();
  crossover->add_option("--a", crossover_args.model_a, "First model id")->capture_default_str();
  crossover->add_option("--b", crossover_args.model_b, "Second model id")->capture_default_str();
  crossover->add_option("--nmin", crossover_args.nmin)->capture_default_str();
  crossover->add_option("--nmax", crossover_args.nmax)->capture_default_str();
  add_output_options(crossover, crossover_args.out);

  ZonesArgs zones_args;
  CLI::App* zones = app.add_subcommand(
      "zones", "Map advantage zones over the density-exponent / path-law plane");
  zones->add_option("--alpha", zones_args.alpha, "Density exponents lo:hi:count")
      ->capture_default_str();
  zones->add_option("--paths", zones_args.paths,
                    "Comma list of path laws (short, long, polylog:e[:c], power:e[:c])")
      ->capture_default_str();
  zones->add_option("--ref-n", zones_args.ref_n, "Reference vertex count")->capture_default_str();
  add_output_options(zones, zones_args.out);

  EmpiricalArgs empirical_args;
  CLI::App* empirical = app.add_subcommand(
      "empirical", "Instrumented shortest-path runs grounding the theoretical model");
  empirical->add_option("--scenario", empirical_args.scenario, "Scenario supplying the density law")
      ->capture_default_str();
  empirical->add_option("--nmin", empirical_args.nmin)->capture_default_str();
  empirical->add_option("--nmax", empirical_args.nmax)->capture_default_str();
  empirical->add_option("--seed", empirical_args.seed, "Master seed")->capture_default_str();
  empirical->add_option("--wmin", empirical_args.wmin, "Smallest arc weight")->capture_default_str();
  empirical->add_option("--wmax", empirical_args.wmax, "Largest arc weight")->capture_default_str();
  empirical->add_flag("--real-weights", empirical_args.real_weights,
                      "Draw real-valued weights instead of integers");
  add_output_options(empirical, empirical_args.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (tables->parsed()) return cmd_reproduce_tables(tables_args);
    if (sweep->parsed()) return cmd_sweep(sweep_args);
    if (crossover->parsed()) return cmd_crossover(crossover_args);
    if (zones->parsed()) return cmd_zones(zones_args);
    if (empirical->parsed()) return cmd_empirical(empirical_args);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == errc::parse_failure ? kExitUsage : kExitComputation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return 0;
}
