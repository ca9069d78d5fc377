// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
// Every tolerance is fixed here, in code. Relative comparisons against the
// printed reference values use the symmetric difference |a-b| / max(a, b).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "costlab/bellman_ford.hpp"
#include "costlab/empirical.hpp"
#include "costlab/frontier.hpp"
#include "costlab/graph_gen.hpp"
#include "costlab/reference.hpp"
#include "costlab/report.hpp"
#include "costlab/rng.hpp"
#include "costlab/sweep.hpp"

using namespace costlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail = what;
    }
  }
};

const ModelRegistry& registry() {
  static const ModelRegistry reg = ModelRegistry::builtin();
  return reg;
}

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

// --------------------------------------------------------------------------
// 1. Reference cost table: calibrated cells at printed precision, exact-decade
//    cells within 10%, winner column exact in both modes, under one second.

Outcome criterion_1() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const ReportBundle calibrated = reproduce_tables(GridMode::calibrated, registry());
  const ReportBundle exact = reproduce_tables(GridMode::exact_decades, registry());
  const double elapsed = millis_since(start);

  const auto reference = reference_cost_table();
  for (std::size_t r = 0; r < reference.size(); ++r) {
    for (int c = 0; c < 4; ++c) {
      out.require(matches_printed(calibrated.cost_table[r].costs[c], reference[r].costs[c]),
                  "calibrated cell (" + std::string(reference[r].scenario) + ", col " +
                      std::to_string(c) + ") missed 3 significant figures");
      out.require(symmetric_rel_diff(exact.cost_table[r].costs[c], reference[r].costs[c].value()) <
                      0.10,
                  "exact-decade cell deviates by 10% or more");
    }
    out.require(calibrated.cost_table[r].winner == reference[r].winner &&
                    exact.cost_table[r].winner == reference[r].winner,
                "winner column mismatch in row " + std::to_string(r));
  }
  out.require(elapsed < 1000.0, "table reproduction exceeded 1 s");
  return out;
}

// --------------------------------------------------------------------------
// 2. Reference ratio table: the seven printed ratio cells at printed precision
//    on the calibrated grid, within 15% at exact decades; all seven advantage
//    labels exact under the [0.8, 1.25) marginal band; under one second.

Outcome criterion_2() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const ReportBundle calibrated = reproduce_tables(GridMode::calibrated, registry());
  const ReportBundle exact = reproduce_tables(GridMode::exact_decades, registry());
  const double elapsed = millis_since(start);

  const auto reference = reference_ratio_table();
  int quantum = 0, classical = 0, marginal = 0;
  for (std::size_t r = 0; r < reference.size(); ++r) {
    out.require(matches_printed(calibrated.ratio_table[r].display_ratio, reference[r].ratio),
                "calibrated ratio cell " + std::to_string(r) + " missed printed precision");
    out.require(symmetric_rel_diff(exact.ratio_table[r].display_ratio,
                                   reference[r].ratio.value()) <= 0.15,
                "exact-decade ratio cell " + std::to_string(r) + " off by more than 15%");
    out.require(calibrated.ratio_table[r].label == reference[r].label &&
                    exact.ratio_table[r].label == reference[r].label,
                "advantage label mismatch in row " + std::to_string(r));
    switch (reference[r].label) {
      case Advantage::quantum: ++quantum; break;
      case Advantage::classical: ++classical; break;
      case Advantage::marginal: ++marginal; break;
    }
  }
  out.require(quantum == 4 && classical == 2 && marginal == 1,
              "reference label census is not quantum x4 / classical x2 / marginal x1");
  out.require(elapsed < 1000.0, "ratio reproduction exceeded 1 s");
  return out;
}

// --------------------------------------------------------------------------
// 3. Sparse-short decade-8 advantage: best-classical / wesolowski above 150 on
//    the calibrated grid and above 140 at the exact decade.

Outcome criterion_3() {
  Outcome out;
  const ReportBundle calibrated = reproduce_tables(GridMode::calibrated, registry());
  const ReportBundle exact = reproduce_tables(GridMode::exact_decades, registry());
  // Row 2 of the ratio table is sparse-short at the 1e8 anchor.
  out.require(calibrated.ratio_table[2].scenario == "sparse-short" &&
                  calibrated.ratio_table[2].n == 93'258'220,
              "ratio table row 2 is not the sparse-short 1e8 anchor");
  out.require(calibrated.ratio_table[2].ratio > 150.0,
              "calibrated ratio is not above 150");
  out.require(exact.ratio_table[2].ratio > 140.0, "exact-decade ratio is not above 140");
  return out;
}

// --------------------------------------------------------------------------
// 4. Crossover: sparse-long dijkstra/wesolowski inside [4.5e3, 5.5e3], matching
//    an exhaustive 1e4-point scan within one grid step; sparse-short reports
//    none over [1e2, 1e8].

struct ScanResult {
  std::optional<double> lo, hi;
  int constant_sign = 0;
};

ScanResult exhaustive_scan(const Scenario& scenario, double n_lo, double n_hi, int points) {
  auto diff = [&](double n) {
    GraphParams p{n, scenario.edges_at(n), scenario.path_length_at(n)};
    return eval_dijkstra(p) - eval_wesolowski(p);
  };
  ScanResult scan;
  int prev_sign = 0;
  double prev_n = n_lo;
  for (int i = 0; i < points; ++i) {
    const double n =
        std::exp(std::log(n_lo) + (std::log(n_hi) - std::log(n_lo)) * i / (points - 1));
    const double d = diff(n);
    const int s = d > 0 ? 1 : (d < 0 ? -1 : 0);
    if (s == 0) continue;
    if (prev_sign != 0 && s != prev_sign) {
      scan.lo = prev_n;
      scan.hi = n;
      return scan;
    }
    prev_sign = s;
    prev_n = n;
  }
  scan.constant_sign = prev_sign;
  return scan;
}

Outcome criterion_4() {
  Outcome out;
  const CrossoverResult found =
      find_crossover(builtin_scenarios()[1], "dijkstra", "wesolowski", 1e2, 1e8, registry());
  out.require(found.n_star.has_value(), "sparse-long crossover not found");
  if (found.n_star) {
    out.require(*found.n_star >= 4.5e3 && *found.n_star <= 5.5e3,
                "crossover outside [4.5e3, 5.5e3]");
    const ScanResult scan = exhaustive_scan(builtin_scenarios()[1], 1e2, 1e8, 10'000);
    out.require(scan.lo.has_value(), "exhaustive scan found no sign change");
    if (scan.lo) {
      const double step = std::pow(1e8 / 1e2, 1.0 / 9999.0);
      out.require(*found.n_star >= *scan.lo / step && *found.n_star <= *scan.hi * step,
                  "bisection disagrees with the exhaustive scan by more than one step");
    }
  }
  const CrossoverResult none =
      find_crossover(builtin_scenarios()[0], "dijkstra", "wesolowski", 1e2, 1e8, registry());
  out.require(!none.n_star.has_value(), "sparse-short unexpectedly reports a crossover");
  out.require(exhaustive_scan(builtin_scenarios()[0], 1e2, 1e8, 10'000).constant_sign != 0,
              "exhaustive scan contradicts the none-in-range result");
  return out;
}

// --------------------------------------------------------------------------
// 5. Divergence of the search-accelerated model: grover/dijkstra cost ratio
//    strictly increases at every grid point of the sparse scenario sweep.

Outcome criterion_5() {
  Outcome out;
  const RatioSeries series =
      cost_ratio_series(builtin_scenarios()[0], "grover", "dijkstra", 1e4, 1e8, registry(), 25);
  out.require(series.ratio.size() >= 101, "ratio grid unexpectedly small");
  for (std::size_t i = 1; i < series.ratio.size(); ++i)
    out.require(series.ratio[i] > series.ratio[i - 1],
                "ratio not strictly increasing at grid point " + std::to_string(i));
  out.require(series.strictly_increasing, "series flag disagrees");
  return out;
}

// --------------------------------------------------------------------------
// 6. Instrumented shortest paths equal the relaxation oracle on 1000 seeded
//    graphs (n <= 200, integer weights), with counter bounds, under 60 s.

Outcome criterion_6() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  SplitMix64 seeds(20240810);
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t n = 2 + static_cast<std::int64_t>(seeds.next_below(199));
    const std::int64_t cap = std::min<std::int64_t>(n * (n - 1), 10 * n);
    const std::int64_t m = static_cast<std::int64_t>(seeds.next_below(cap + 1));
    const Graph g = generate_graph_nm(n, m, WeightRange{1, 10, true}, seeds.next());
    const std::int64_t s = static_cast<std::int64_t>(seeds.next_below(n));
    const DijkstraRun run = dijkstra(g, s);
    if (run.dist != bellman_ford_distances(g, s)) ++failures;
    if (run.stats.settled_pops > n || run.stats.edge_relaxations > m ||
        run.stats.heap_pops > run.stats.heap_pushes ||
        run.stats.heap_pushes > n + run.stats.edge_relaxations)
      ++failures;
  }
  const double elapsed = millis_since(start);
  out.require(failures == 0, std::to_string(failures) + " runs disagreed with the oracle");
  out.require(elapsed < 60'000.0, "oracle comparison exceeded 60 s");
  return out;
}

// --------------------------------------------------------------------------
// 7. Empirical scaling: log-log slope of the work proxy against the
//    theoretical cost within [0.9, 1.1], R^2 at least 0.98, over the sparse
//    ladder n = 2^8 .. 2^14.

Outcome criterion_7() {
  Outcome out;
  EmpiricalConfig config;  // defaults: sparse density, 256 .. 16384, seed 42
  const EmpiricalResult result = run_empirical(config);
  out.require(result.rows.size() == 7, "ladder did not produce 7 sizes");
  out.require(result.fit.has_value(), "no fit produced");
  if (result.fit) {
    out.require(!result.fit->degenerate, "fit degenerate");
    out.require(result.fit->slope >= 0.9 && result.fit->slope <= 1.1,
                "slope " + std::to_string(result.fit->slope) + " outside [0.9, 1.1]");
    out.require(result.fit->r_squared >= 0.98,
                "R^2 " + std::to_string(result.fit->r_squared) + " below 0.98");
  }
  return out;
}

// --------------------------------------------------------------------------
// 8. Property suites at 1000 randomized cases each: model monotonicity,
//    scaling homogeneities, argmin invariance, sweep determinism, and
//    CSV/JSON round-trips.

double log_uniform(SplitMix64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
  return std::exp(std::log(lo) + u * (std::log(hi) - std::log(lo)));
}

Outcome criterion_8() {
  Outcome out;
  SplitMix64 rng(0xacceff);

  for (int i = 0; i < 1000; ++i) {  // monotonicity + homogeneities
    const double n1 = log_uniform(rng, 2, 1e8);
    const double n2 = n1 * log_uniform(rng, 1.001, 10);
    const double m1 = log_uniform(rng, 1e-2, 1e15);
    const double m2 = m1 * log_uniform(rng, 1.001, 10);
    const double l1 = log_uniform(rng, 1e-2, 1e10);
    const double l2 = l1 * log_uniform(rng, 1.001, 10);
    out.require(eval_dijkstra({n2, m1, {}}) > eval_dijkstra({n1, m1, {}}) &&
                    eval_dijkstra({n1, m2, {}}) > eval_dijkstra({n1, m1, {}}),
                "dijkstra monotonicity violated");
    out.require(eval_duan({n2, m1, {}}) > eval_duan({n1, m1, {}}) &&
                    eval_duan({n1, m2, {}}) > eval_duan({n1, m1, {}}),
                "duan monotonicity violated");
    out.require(eval_grover({n2, m1, {}}) > eval_grover({n1, m1, {}}) &&
                    eval_grover({n1, m2, {}}) > eval_grover({n1, m1, {}}),
                "grover monotonicity violated");
    out.require(eval_wesolowski({n1, m2, l1}) > eval_wesolowski({n1, m1, l1}) &&
                    eval_wesolowski({n1, m1, l2}) > eval_wesolowski({n1, m1, l1}),
                "wesolowski monotonicity violated");
    const double k = std::exp2(static_cast<double>(
        static_cast<std::int64_t>(rng.next_below(31)) - 15));
    out.require(eval_grover({n1, k * m1, {}}) == k * eval_grover({n1, m1, {}}),
                "grover homogeneity violated");
    out.require(eval_wesolowski({n1, m1, k * l1}) == k * eval_wesolowski({n1, m1, l1}) &&
                    eval_wesolowski({n1, k * k * m1, l1}) == k * eval_wesolowski({n1, m1, l1}),
                "wesolowski bilinear scaling violated");
  }

  const SweepResult base =
      run_sweep(builtin_scenarios()[2], NGrid{100, 1'000'000, 4, {}}, registry());
  const auto base_rows = classify_rows(base, registry());
  for (int i = 0; i < 1000; ++i) {  // argmin invariance under global scaling
    const double k = log_uniform(rng, 1e-6, 1e6);
    SweepResult scaled = base;
    for (SweepRow& row : scaled.rows)
      for (double& c : row.costs) c *= k;
    const auto scaled_rows = classify_rows(scaled, registry());
    for (std::size_t r = 0; r < base_rows.size(); ++r) {
      out.require(scaled_rows[r].winner == base_rows[r].winner &&
                      scaled_rows[r].label == base_rows[r].label,
                  "winner or label changed under global scaling");
      out.require(std::abs(scaled_rows[r].ratio / base_rows[r].ratio - 1.0) < 1e-12,
                  "ratio drifted under global scaling");
    }
  }

  for (int i = 0; i < 1000; ++i) {  // sweep determinism
    Scenario scenario;
    scenario.name = "p8";
    scenario.density = {ScalingLaw::Kind::power, log_uniform(rng, 0.1, 50), 1.0};
    scenario.path = {ScalingLaw::Kind::polylog, log_uniform(rng, 0.1, 50), 2.0};
    const std::int64_t ns[] = {static_cast<std::int64_t>(2 + rng.next_below(1'000'000))};
    out.require(run_sweep(scenario, ns, registry()) == run_sweep(scenario, ns, registry()),
                "sweep reruns differ");
  }

  for (int i = 0; i < 1000; ++i) {  // CSV and JSON round-trips
    const std::int64_t ns[] = {static_cast<std::int64_t>(2 + rng.next_below(100'000))};
    ReportBundle bundle = make_bundle();
    bundle.model_ids = registry().ids();
    bundle.sweeps.push_back(run_sweep(builtin_scenarios()[i % 4], ns, registry()));
    out.require(bundle_from_json(to_json_string(bundle)) == bundle, "JSON round-trip lossy");
    const std::string csv = sweep_csv(bundle.sweeps[0]);
    const std::size_t newline = csv.find('\n');
    out.require(csv.substr(0, newline) == "n,m,l,dijkstra,duan,grover,wesolowski",
                "CSV header missing");
  }
  return out;
}

struct Criterion {
  int id;
  const char* summary;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "reference cost table (calibrated 3 sig figs, exact-decade 10%, winners)", criterion_1},
      {2, "reference ratio table (7 cells, advantage labels)", criterion_2},
      {3, "sparse-short 1e8 advantage ratio (>150 calibrated, >140 exact)", criterion_3},
      {4, "dijkstra/wesolowski crossover location and absence", criterion_4},
      {5, "grover/dijkstra ratio strictly diverges on sparse graphs", criterion_5},
      {6, "instrumented runs equal the oracle on 1000 seeded graphs", criterion_6},
      {7, "work-proxy log-log fit: slope in [0.9, 1.1], R^2 >= 0.98", criterion_7},
      {8, "property suites (1000 cases each)", criterion_8},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome outcome = criterion.run();
    const double elapsed = millis_since(start);
    std::printf("[%s] criterion %d: %s (%.1f ms)%s%s\n", outcome.pass ? "PASS" : "FAIL",
                criterion.id, criterion.summary, elapsed, outcome.pass ? "" : " -- ",
                outcome.pass ? "" : outcome.detail.c_str());
    if (!outcome.pass) ++failures;
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures;
}
