#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "costlab/error.hpp"

namespace costlab {

/// A one-parameter structural law, evaluated at a vertex count n >= 2:
///   power:   c * n^e
///   polylog: c * log2(n)^e
/// With c > 0 the value is positive on the whole domain.
struct ScalingLaw {
  enum class Kind { power, polylog };

  Kind kind = Kind::power;
  double c = 1.0;
  double e = 1.0;

  double operator()(double n) const;

  void validate() const;  // errc::invalid_params unless c > 0 and c, e finite

  friend bool operator==(const ScalingLaw&, const ScalingLaw&) = default;
};

/// Renders a law as "power c e" / "polylog c e" (the scenario-file syntax).
std::string to_string(const ScalingLaw& law);

/// A graph-structure scenario: a density law m(n) and a path-length law l(n).
struct Scenario {
  std::string name;
  ScalingLaw density;
  ScalingLaw path;

  double edges_at(double n) const { return density(n); }
  double path_length_at(double n) const { return path(n); }

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// The four built-in scenarios, in fixed order:
//   sparse-short  m = 10n,      l = (log2 n)^2
//   sparse-long   m = 10n,      l = n/10
//   dense-short   m = n^2/100,  l = (log2 n)^2
//   dense-long    m = n^2/100,  l = n/10
const std::vector<Scenario>& builtin_scenarios();

/// Looks up a built-in scenario by name; nullptr when unknown.
const Scenario* find_builtin_scenario(std::string_view name);

ScalingLaw sparse_density_law();  // power  c=10    e=1
ScalingLaw dense_density_law();   // power  c=0.01  e=2
ScalingLaw short_path_law();      // polylog c=1    e=2
ScalingLaw long_path_law();       // power  c=0.1   e=1

/// Log-spaced integer evaluation grid.
///
/// The lattice holds exponents log10(n_min) + k / points_per_decade up to
/// log10(n_max); each sample is rounded to the nearest integer. The grid is
/// unioned with n_max and with every anchor that falls inside
/// [n_min, n_max], then deduplicated, so it is strictly increasing.
/// points_per_decade == 0 selects an anchors-only grid.
struct NGrid {
  std::int64_t n_min = 100;
  std::int64_t n_max = 100'000'000;
  int points_per_decade = 25;
  std::vector<std::int64_t> anchors = {10'000, 1'000'000, 100'000'000};

  void validate() const;
  std::vector<std::int64_t> points() const;

  static NGrid anchors_only(std::vector<std::int64_t> anchor_points);
};

/// Scenario-definition file: `key = value` lines, `#` comments.
///
///   name    = my-scenario
///   density = power 10 1        # or: polylog <c> <e>
///   path    = polylog 1 2
///   grid    = 100,100000000,25  # optional: nmin,nmax,ppd
struct ScenarioFile {
  Scenario scenario;
  std::optional<NGrid> grid;
};

ScenarioFile parse_scenario_file(std::istream& in, const std::string& origin = "<stream>");
ScenarioFile load_scenario_file(const std::filesystem::path& path);

/// Resolves --scenario arguments: a built-in name or a definition file path.
ScenarioFile resolve_scenario(const std::string& name_or_path);

}  // namespace costlab
