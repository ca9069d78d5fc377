#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "costlab/io.hpp"
#include "costlab/reference.hpp"
#include "costlab/report.hpp"
#include "test_util.hpp"

using namespace costlab;

namespace {

const ModelRegistry& registry() {
  static const ModelRegistry reg = ModelRegistry::builtin();
  return reg;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    rows.emplace_back();
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) rows.back().push_back(cell);
  }
  return rows;
}

SweepResult random_sweep(costlab::testing::Gen& gen, int tag) {
  Scenario scenario;
  scenario.name = "rand-" + std::to_string(tag);
  scenario.density.kind = gen.coin() ? ScalingLaw::Kind::power : ScalingLaw::Kind::polylog;
  scenario.density.c = gen.log_uniform(0.1, 50.0);
  scenario.density.e = gen.log_uniform(0.3, 2.0);
  scenario.path.kind = gen.coin() ? ScalingLaw::Kind::power : ScalingLaw::Kind::polylog;
  scenario.path.c = gen.log_uniform(0.1, 50.0);
  scenario.path.e = gen.log_uniform(0.3, 2.0);
  std::vector<std::int64_t> ns;
  std::int64_t n = gen.int_in(2, 1000);
  for (int k = static_cast<int>(gen.int_in(1, 5)); k-- > 0; n += gen.int_in(1, 100'000))
    ns.push_back(n);
  return run_sweep(scenario, ns, registry());
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_sig(232877.12379549449, 6) == "232877");
  CHECK(format_sig(9010575.846, 6) == "9.01058e+06");
  CHECK(format_double_shortest(7.0) == "7");
  CHECK(format_double_shortest(0.5) == "0.5");
  CHECK(parse_double(format_double_shortest(0.1)) == 0.1);
  CHECK_THROWS_AS(parse_double("12x"), error);
  CHECK_THROWS_AS(parse_double(""), error);
}

TEST_CASE("reference helpers") {
  CHECK(round_to_sig(232877.12, 3) == doctest::Approx(233000.0));
  CHECK(round_to_sig(1.1356, 3) == doctest::Approx(1.14));
  CHECK(round_to_sig(0.0, 3) == 0.0);
  const ReferenceCell cell{"2.16e5"};
  CHECK(cell.value() == doctest::Approx(216000.0));
  CHECK(cell.significant_digits() == 3);
  CHECK(matches_printed(216316.0, cell));
  CHECK_FALSE(matches_printed(216600.0, cell));
  const ReferenceCell short_cell{"0.10"};
  CHECK(short_cell.significant_digits() == 2);
  CHECK(matches_printed(0.0975, short_cell));
  CHECK(symmetric_rel_diff(1e7, 9.01e6) == doctest::Approx(0.099).epsilon(1e-9));
  CHECK(symmetric_rel_diff(0.0, 0.0) == 0.0);
}

TEST_CASE("grid mode names") {
  CHECK(grid_mode_from_string("exact") == GridMode::exact_decades);
  CHECK(grid_mode_from_string("calibrated") == GridMode::calibrated);
  CHECK_THROWS_AS(grid_mode_from_string("wat"), error);
  CHECK(to_string(GridMode::calibrated) == "calibrated");
}

TEST_CASE("calibrated anchors by density family") {
  const Scenario& sparse = builtin_scenarios()[0];
  const Scenario& dense = builtin_scenarios()[3];
  CHECK(calibrated_anchor(sparse, 10'000) == 9'329);
  CHECK(calibrated_anchor(sparse, 1'000'000) == 932'650);
  CHECK(calibrated_anchor(sparse, 100'000'000) == 93'258'220);
  CHECK(calibrated_anchor(dense, 10'000) == 9'771);
  Scenario custom{"c", {ScalingLaw::Kind::power, 3.0, 1.5}, short_path_law()};
  CHECK(calibrated_anchor(custom, 10'000) == 10'000);  // unknown family: unchanged
}

TEST_CASE("reproduce_tables emits 6 cost rows and 7 ratio rows") {
  for (GridMode mode : {GridMode::exact_decades, GridMode::calibrated}) {
    const ReportBundle bundle = reproduce_tables(mode, registry());
    CHECK(bundle.grid_mode == to_string(mode));
    CHECK(bundle.model_ids == registry().ids());
    REQUIRE(bundle.cost_table.size() == 6);
    REQUIRE(bundle.ratio_table.size() == 7);
    // Winners never depend on the grid mode.
    for (int i = 0; i < 3; ++i) CHECK(bundle.cost_table[i].winner == "wesolowski");
    for (int i = 3; i < 6; ++i) CHECK(bundle.cost_table[i].winner == "dijkstra");
  }
}

TEST_CASE("calibrated reproduction hits every reference cell at printed precision") {
  const ReportBundle bundle = reproduce_tables(GridMode::calibrated, registry());
  const auto reference = reference_cost_table();
  for (std::size_t r = 0; r < reference.size(); ++r) {
    CHECK(bundle.cost_table[r].scenario == reference[r].scenario);
    for (int c = 0; c < 4; ++c)
      CHECK(matches_printed(bundle.cost_table[r].costs[c], reference[r].costs[c]));
    CHECK(bundle.cost_table[r].winner == reference[r].winner);
  }
  const auto ratio_reference = reference_ratio_table();
  for (std::size_t r = 0; r < ratio_reference.size(); ++r) {
    CHECK(matches_printed(bundle.ratio_table[r].display_ratio, ratio_reference[r].ratio));
    CHECK(bundle.ratio_table[r].label == ratio_reference[r].label);
  }
}

TEST_CASE("cost table CSV has the documented shape") {
  const ReportBundle bundle = reproduce_tables(GridMode::exact_decades, registry());
  const auto rows = parse_csv(cost_table_csv(bundle));
  REQUIRE(rows.size() == 7);  // header + 6
  CHECK(rows[0] == std::vector<std::string>{"scenario", "n", "m", "l", "dijkstra", "duan",
                                            "grover", "wesolowski", "winner"});
  CHECK(rows[1][0] == "sparse-short");
  CHECK(rows[1][1] == "10000");
  CHECK(rows[1][4] == format_sig(bundle.cost_table[0].costs[0], 6));
}

TEST_CASE("sweep CSV cells are the 6-significant-digit rendering of the rows") {
  const std::int64_t ns[] = {2};
  const SweepResult sweep = run_sweep(builtin_scenarios()[0], ns, registry());
  const auto rows = parse_csv(sweep_csv(sweep));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"n", "m", "l", "dijkstra", "duan", "grover",
                                            "wesolowski"});
  CHECK(rows[1] == std::vector<std::string>{"2", "20", "1", "22", "20", "28.2843", "4.47214"});
}

TEST_CASE("property: CSV renderings re-parse to the 6-digit rounding of every cost") {
  costlab::testing::Gen gen(0xc5f);
  for (int i = 0; i < 1000; ++i) {
    const SweepResult sweep = random_sweep(gen, i);
    const auto rows = parse_csv(sweep_csv(sweep));
    REQUIRE(rows.size() == sweep.rows.size() + 1);
    for (std::size_t r = 0; r < sweep.rows.size(); ++r) {
      CHECK(rows[r + 1][0] == std::to_string(sweep.rows[r].n));
      for (std::size_t c = 0; c < sweep.model_ids.size(); ++c) {
        const double reparsed = parse_double(rows[r + 1][3 + c]);
        const double rounded = parse_double(format_sig(sweep.rows[r].costs[c], 6));
        CHECK(reparsed == rounded);
      }
    }
  }
}

TEST_CASE("property: sweep JSON round-trips losslessly") {
  costlab::testing::Gen gen(0x105e);
  for (int i = 0; i < 1000; ++i) {
    ReportBundle bundle = make_bundle();
    bundle.model_ids = registry().ids();
    bundle.sweeps.push_back(random_sweep(gen, i));
    const std::string text = to_json_string(bundle);
    const ReportBundle parsed = bundle_from_json(text);
    REQUIRE(parsed == bundle);             // every double bit-exact
    CHECK(to_json_string(parsed) == text); // and the rendering is stable
  }
}

TEST_CASE("full bundles round-trip through JSON") {
  ReportBundle bundle = reproduce_tables(GridMode::calibrated, registry());
  bundle.seed = 77;
  bundle.sweeps.push_back(run_sweep(builtin_scenarios()[1], NGrid{100, 10'000, 3, {}},
                                    registry()));
  bundle.crossovers.push_back(find_crossover(builtin_scenarios()[1], "dijkstra", "wesolowski",
                                             1e2, 1e8, registry()));
  bundle.crossovers.push_back(find_crossover(builtin_scenarios()[0], "dijkstra", "wesolowski",
                                             1e2, 1e8, registry()));  // none-in-range
  const ScalingLaw paths[] = {short_path_law(), long_path_law()};
  bundle.zones = map_zones(0.5, 2.5, 5, paths, 10'000, registry());
  EmpiricalConfig config;
  config.n_max = 1024;
  const EmpiricalResult empirical = run_empirical(config);
  bundle.empirical_runs = empirical.rows;

  const ReportBundle parsed = bundle_from_json(to_json_string(bundle));
  CHECK(parsed == bundle);
}

TEST_CASE("bad JSON is a parse failure") {
  CHECK_THROWS_AS(bundle_from_json("{nope"), error);
  CHECK_THROWS_AS(sweep_from_json("[]"), error);
}

TEST_CASE("ratio table CSV carries the printed ratio and label") {
  const ReportBundle bundle = reproduce_tables(GridMode::calibrated, registry());
  const auto rows = parse_csv(ratio_table_csv(bundle));
  REQUIRE(rows.size() == 8);
  CHECK(rows[0][5] == "advantage");
  CHECK(rows[7][0] == "dense-long");
  CHECK(rows[7][5] == "marginal");
  CHECK(parse_double(rows[7][4]) == doctest::Approx(1.13089).epsilon(1e-4));
}

TEST_CASE("crossover and zone CSVs have headers and expected rows") {
  const CrossoverResult crossover =
      find_crossover(builtin_scenarios()[1], "dijkstra", "wesolowski", 1e2, 1e8, registry());
  auto rows = parse_csv(crossover_csv(crossover));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][0] == "scenario");
  CHECK(rows[1][3] == "4962.59");

  const ScalingLaw paths[] = {short_path_law(), long_path_law()};
  rows = parse_csv(zone_map_csv(map_zones(0.5, 2.5, 9, paths, 1'000'000, registry())));
  CHECK(rows.size() == 19);  // header + 18 cells
}

TEST_CASE("atomic writes leave no temporary behind") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "costlab_report_test";
  fs::create_directories(dir);
  const fs::path target = dir / "out.csv";
  write_file_atomic(target, "a,b\n1,2\n");
  CHECK(read_file(target) == "a,b\n1,2\n");
  CHECK_FALSE(fs::exists(target.string() + ".tmp"));
  // A failing write must not leave partial output at the destination.
  const fs::path bad = dir / "missing" / "out.csv";
  CHECK_THROWS_AS(write_file_atomic(bad, "x"), error);
  CHECK_FALSE(fs::exists(bad));
  fs::remove_all(dir);
}

TEST_CASE("rendered tables align and include every row") {
  const ReportBundle bundle = reproduce_tables(GridMode::exact_decades, registry());
  const std::string cost = render_cost_table(bundle);
  CHECK(std::count(cost.begin(), cost.end(), '\n') == 7);
  const std::string ratio = render_ratio_table(bundle);
  CHECK(std::count(ratio.begin(), ratio.end(), '\n') == 8);
  CHECK(ratio.find("marginal") != std::string::npos);
}
