#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "costlab/cost_models.hpp"
#include "costlab/scenario.hpp"
#include "costlab/sweep.hpp"

namespace costlab {

enum class Advantage { classical, marginal, quantum };

std::string_view to_string(Advantage a);

/// Cost-ratio band separating the three advantage labels. The defaults place
/// "marginal" at ratios in [0.8, 1.25); they can be widened or narrowed per
/// analysis.
struct ClassificationBand {
  double classical_below = 0.8;
  double quantum_at_least = 1.25;

  friend bool operator==(const ClassificationBand&, const ClassificationBand&) = default;
};

/// classical if ratio < band.classical_below, quantum if
/// ratio >= band.quantum_at_least, marginal in between.
Advantage classify_ratio(double ratio, const ClassificationBand& band = {});

/// One classified sweep row: the overall winner plus the
/// best-classical / wesolowski cost ratio.
struct WinnerRow {
  std::int64_t n = 0;
  std::string winner;          // argmin over all models, ties to registry order
  double best_classical = 0.0; // min cost over models with kind == classical
  double wesolowski = 0.0;
  double ratio = 0.0;          // best_classical / wesolowski
  Advantage label = Advantage::marginal;

  friend bool operator==(const WinnerRow&, const WinnerRow&) = default;
};

/// Classifies every sweep row. Requires at least one classical model column
/// and a "wesolowski" column (errc::missing_model_kind otherwise).
std::vector<WinnerRow> classify_rows(const SweepResult& sweep, const ModelRegistry& registry,
                                     const ClassificationBand& band = {});

/// Crossover of two models' costs under a scenario, located on the continuous
/// relaxation (real-valued n).
struct CrossoverResult {
  std::string scenario;
  std::string model_a;
  std::string model_b;
  std::optional<double> n_star;
  std::optional<std::int64_t> n_star_rounded;
  double bracket_lo = 0.0;  // probe interval containing the crossing
  double bracket_hi = 0.0;  // (the full scan range when no crossing exists)
  int sign_below = 0;       // sign of cost_a - cost_b below / above n_star
  int sign_above = 0;
  bool more_crossings = false;  // further sign changes past the first

  friend bool operator==(const CrossoverResult&, const CrossoverResult&) = default;
};

/// Scans `probes` log-spaced points of [n_lo, n_hi] for a sign change of
/// log cost_a - log cost_b, then bisects in log n. Returns the smallest-n
/// crossing and flags any further ones; an identically-zero difference is
/// reported as no crossing. Range must satisfy 2 <= n_lo < n_hi <= 1e12.
CrossoverResult find_crossover(const Scenario& scenario, const std::string& model_a,
                               const std::string& model_b, double n_lo, double n_hi,
                               const ModelRegistry& registry, int probes = 512);

/// cost_numerator / cost_denominator sampled over a log-spaced grid, with a
/// strict-monotonicity verdict (divergence evidence when true).
struct RatioSeries {
  std::string scenario;
  std::string numerator;
  std::string denominator;
  std::vector<double> n;
  std::vector<double> ratio;
  bool strictly_increasing = false;

  friend bool operator==(const RatioSeries&, const RatioSeries&) = default;
};

RatioSeries cost_ratio_series(const Scenario& scenario, const std::string& numerator,
                              const std::string& denominator, std::span<const double> ns,
                              const ModelRegistry& registry);
RatioSeries cost_ratio_series(const Scenario& scenario, const std::string& numerator,
                              const std::string& denominator, double n_lo, double n_hi,
                              const ModelRegistry& registry, int points_per_decade = 25);

/// Advantage-zone map over the (density exponent, path law) plane at a fixed
/// reference n. Density laws are the power family anchored at the pivot
/// (n = 10^3, m = 10^4): c(alpha) = 10^4 / (10^3)^alpha, which interpolates
/// the built-in sparse (alpha=1, c=10) and dense (alpha=2, c=0.01) laws.
struct ZoneCell {
  double alpha = 0.0;
  std::string path_label;
  double ratio = 0.0;
  Advantage label = Advantage::marginal;

  friend bool operator==(const ZoneCell&, const ZoneCell&) = default;
};

struct ZoneMap {
  std::int64_t reference_n = 0;
  std::vector<double> alphas;
  std::vector<std::string> path_labels;
  std::vector<ZoneCell> cells;  // row-major over alphas, inner loop over paths

  friend bool operator==(const ZoneMap&, const ZoneMap&) = default;
};

/// Density law for a zone-map column.
ScalingLaw pivot_density_law(double alpha);

ZoneMap map_zones(double alpha_min, double alpha_max, int alpha_count,
                  std::span<const ScalingLaw> path_laws, std::int64_t reference_n,
                  const ModelRegistry& registry, const ClassificationBand& band = {});

}  // namespace costlab
