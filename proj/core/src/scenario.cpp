#include "costlab/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace costlab {

double ScalingLaw::operator()(double n) const {
  const double base = kind == Kind::power ? n : std::log2(n);
  return c * std::pow(base, e);
}

void ScalingLaw::validate() const {
  if (!(c > 0.0) || !std::isfinite(c))
    fail(errc::invalid_params, "law coefficient must be positive and finite");
  if (!std::isfinite(e)) fail(errc::invalid_params, "law exponent must be finite");
}

std::string to_string(const ScalingLaw& law) {
  std::ostringstream os;
  os << (law.kind == ScalingLaw::Kind::power ? "power" : "polylog") << ' ' << law.c << ' ' << law.e;
  return os.str();
}

ScalingLaw sparse_density_law() { return {ScalingLaw::Kind::power, 10.0, 1.0}; }
ScalingLaw dense_density_law() { return {ScalingLaw::Kind::power, 0.01, 2.0}; }
ScalingLaw short_path_law() { return {ScalingLaw::Kind::polylog, 1.0, 2.0}; }
ScalingLaw long_path_law() { return {ScalingLaw::Kind::power, 0.1, 1.0}; }

const std::vector<Scenario>& builtin_scenarios() {
  static const std::vector<Scenario> scenarios = {
      {"sparse-short", sparse_density_law(), short_path_law()},
      {"sparse-long", sparse_density_law(), long_path_law()},
      {"dense-short", dense_density_law(), short_path_law()},
      {"dense-long", dense_density_law(), long_path_law()},
  };
  return scenarios;
}

const Scenario* find_builtin_scenario(std::string_view name) {
  for (const Scenario& s : builtin_scenarios())
    if (s.name == name) return &s;
  return nullptr;
}

void NGrid::validate() const {
  if (n_min < 2) fail(errc::invalid_range, "grid n_min must be >= 2");
  if (n_max < n_min) fail(errc::invalid_range, "grid n_max must be >= n_min");
  if (points_per_decade < 0) fail(errc::invalid_range, "points per decade must be >= 0");
  if (points_per_decade == 0 && anchors.empty())
    fail(errc::empty_grid, "anchors-only grid has no anchors");
}

std::vector<std::int64_t> NGrid::points() const {
  validate();
  std::vector<std::int64_t> out;
  if (points_per_decade > 0) {
    const double lo = std::log10(static_cast<double>(n_min));
    const double hi = std::log10(static_cast<double>(n_max));
    const double step = 1.0 / points_per_decade;
    // Tiny slack so an n_max that sits on the lattice is not lost to rounding.
    for (int k = 0; lo + k * step <= hi + 1e-12; ++k)
      out.push_back(std::llround(std::pow(10.0, lo + k * step)));
    out.push_back(n_max);
  }
  for (std::int64_t a : anchors)
    if (a >= n_min && a <= n_max) out.push_back(a);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) fail(errc::empty_grid, "grid produced no points");
  return out;
}

NGrid NGrid::anchors_only(std::vector<std::int64_t> anchor_points) {
  if (anchor_points.empty()) fail(errc::empty_grid, "anchors-only grid has no anchors");
  NGrid grid;
  grid.n_min = *std::min_element(anchor_points.begin(), anchor_points.end());
  grid.n_max = *std::max_element(anchor_points.begin(), anchor_points.end());
  grid.points_per_decade = 0;
  grid.anchors = std::move(anchor_points);
  return grid;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string_view::npos ? std::string() : std::string(s.substr(b, e - b + 1));
}

ScalingLaw parse_law(const std::string& value, const std::string& origin) {
  std::istringstream is(value);
  std::string kind;
  double c = 0.0, e = 0.0;
  if (!(is >> kind >> c >> e))
    fail(errc::parse_failure, origin + ": expected '<power|polylog> <c> <e>', got '" + value + "'");
  ScalingLaw law;
  if (kind == "power")
    law.kind = ScalingLaw::Kind::power;
  else if (kind == "polylog")
    law.kind = ScalingLaw::Kind::polylog;
  else
    fail(errc::parse_failure, origin + ": unknown law kind '" + kind + "'");
  law.c = c;
  law.e = e;
  law.validate();
  return law;
}

NGrid parse_grid(const std::string& value, const std::string& origin) {
  NGrid grid;
  grid.anchors.clear();
  char c1 = 0, c2 = 0;
  std::istringstream is(value);
  if (!(is >> grid.n_min >> c1 >> grid.n_max >> c2 >> grid.points_per_decade) || c1 != ',' || c2 != ',')
    fail(errc::parse_failure, origin + ": expected 'nmin,nmax,ppd', got '" + value + "'");
  grid.validate();
  return grid;
}

}  // namespace

ScenarioFile parse_scenario_file(std::istream& in, const std::string& origin) {
  ScenarioFile out;
  bool have_density = false, have_path = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line.substr(0, line.find('#')));
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    const std::string where = origin + ":" + std::to_string(lineno);
    if (eq == std::string::npos) fail(errc::parse_failure, where + ": expected 'key = value'");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key == "name") {
      out.scenario.name = value;
    } else if (key == "density") {
      out.scenario.density = parse_law(value, where);
      have_density = true;
    } else if (key == "path") {
      out.scenario.path = parse_law(value, where);
      have_path = true;
    } else if (key == "grid") {
      out.grid = parse_grid(value, where);
    } else {
      fail(errc::parse_failure, where + ": unknown key '" + key + "'");
    }
  }
  if (out.scenario.name.empty()) fail(errc::parse_failure, origin + ": missing 'name'");
  if (!have_density) fail(errc::parse_failure, origin + ": missing 'density'");
  if (!have_path) fail(errc::parse_failure, origin + ": missing 'path'");
  return out;
}

ScenarioFile load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_failure, "cannot open scenario file '" + path.string() + "'");
  return parse_scenario_file(in, path.string());
}

ScenarioFile resolve_scenario(const std::string& name_or_path) {
  if (const Scenario* s = find_builtin_scenario(name_or_path)) return {*s, std::nullopt};
  if (std::filesystem::exists(name_or_path)) return load_scenario_file(name_or_path);
  fail(errc::parse_failure,
       "'" + name_or_path + "' is neither a built-in scenario nor a scenario file");
}

}  // namespace costlab
