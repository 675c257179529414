#pragma once

// Monte-Carlo experiments. Sample i of size n always uses the seed
// derive_seed(master, n, i), so results do not depend on the worker count.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qmap/embedded_tree.hpp"
#include "qmap/statistics.hpp"

namespace qmap {

struct ExperimentConfig {
  std::string kind;  // radius | profile | coupling | tail | fidis
  std::vector<std::size_t> sizes;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::string output;  // directory for <kind>.csv and <kind>_summary.json; empty = none
  std::size_t jobs = 1;
  std::vector<double> x_grid;  // profile
  std::vector<double> y_grid;  // tail
  std::vector<double> times;   // fidis, one or two times in (0,1)
  std::size_t bins = 40;       // fidis
  double window_lo = 0.2;      // fidis chi-square window on the scaled height
  double window_hi = 2.2;
};

/// Parses the JSON form; missing keys keep their defaults, unknown keys and
/// bad values throw std::invalid_argument.
ExperimentConfig parse_config(std::string_view json_text);
std::string config_to_json(const ExperimentConfig& cfg);
/// 16 hex digits of FNV-1a over the configuration without `jobs`/`output`.
std::string run_id(const ExperimentConfig& cfg);

/// Calls body(begin, end) on consecutive index chunks from `jobs` threads.
void parallel_chunks(std::size_t count, std::size_t jobs,
                     const std::function<void(std::size_t, std::size_t)>& body);

/// Lambda-hat of the well-labelled tree squeezed between the shifted
/// cumulative counts of the embedded tree, for every level.
bool coupling_inequalities_hold(const LabelDistribution& well_labelled,
                                const LabelDistribution& embedded);

/// A hard invariant failed on a specific sample.
class ExperimentFailure : public std::runtime_error {
 public:
  ExperimentFailure(const std::string& what, std::uint64_t seed);
  std::uint64_t seed;
};

struct RadiusSample {
  std::size_t size = 0;
  std::uint64_t seed = 0;
  std::int64_t radius = 0;
  std::int64_t min_label = 0;  // embedded tree, root label 0
  std::int64_t max_label = 0;
  std::int64_t max_well_label = 0;
  double scaled = 0.0;  // n^{-1/4} radius
};

/// Builds the quadrangulation of each coupled well-labelled tree, checks that
/// its radius is the max label and that the coupling bound holds.
std::vector<RadiusSample> radius_samples(std::size_t size, std::size_t samples, std::uint64_t seed,
                                         std::size_t jobs);

/// Averaged F_n(x) = lambda-hat_{floor((8n/9)^{1/4} x)} / (n+1) on the grid.
std::vector<double> averaged_profile(std::size_t size, std::size_t samples, std::uint64_t seed,
                                     std::size_t jobs, const std::vector<double>& x_grid);

/// F_n for one well-labelled tree.
std::vector<double> scaled_profile(const LabelDistribution& labels, std::size_t size,
                                   const std::vector<double>& x_grid);

struct CouplingReport {
  std::size_t size = 0;
  std::size_t pairs = 0;
  std::size_t inequality_violations = 0;
  std::size_t bound_violations = 0;  // |mu - (M - m)| > 3
  std::size_t embedded_well_labelled = 0;
  std::uint64_t first_violation_seed = 0;
  double expected_fraction() const { return 2.0 / static_cast<double>(size + 2); }
};

/// With check_pairs false only the embedded trees are drawn (faster).
CouplingReport coupling_check(std::size_t size, std::size_t samples, std::uint64_t seed,
                              std::size_t jobs, bool check_pairs = true);

struct TailPoint {
  std::size_t size = 0;
  double threshold = 0.0;
  std::size_t exceed = 0;
  std::size_t samples = 0;
  double p_hat() const { return static_cast<double>(exceed) / static_cast<double>(samples); }
};

/// Fraction of embedded trees whose max label minus root label exceeds y n^{1/4}.
std::vector<TailPoint> tail_estimate(std::size_t size, std::size_t samples, std::uint64_t seed,
                                     std::size_t jobs, const std::vector<double>& y_grid);

struct FidisBin {
  double lo = 0.0;
  double hi = 0.0;
  double observed = 0.0;
  double expected = 0.0;
};

struct FidisMarginal {
  double tau = 0.0;
  std::vector<FidisBin> bins;  // window bins, then one cell for the rest
  ChiSquareResult chi_square;
  /// Var(label | height near 1) divided by the mean height in that window;
  /// the limit law predicts 1.
  double conditional_variance_ratio = 0.0;
  std::size_t conditional_count = 0;
};

struct FidisReport {
  std::size_t size = 0;
  std::size_t samples = 0;
  std::vector<FidisMarginal> marginals;
  std::size_t binary_shapes = 0;  // samples whose shape is binary (p = 2)
};

FidisReport fidis_experiment(std::size_t size, std::size_t samples, std::uint64_t seed,
                             std::size_t jobs, const std::vector<double>& times, std::size_t bins,
                             double window_lo, double window_hi);

/// Expected probability mass of a scaled-height window [lo, hi) at time tau
/// for paths of semilength n, summed over reachable lattice heights.
double lattice_height_mass(std::size_t size, double tau, double lo, double hi);

struct ExperimentResult {
  std::string csv;
  std::string summary_json;
  bool ok = true;
  std::string failure;
};

/// Runs cfg.kind for every size; writes files when cfg.output is set.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

}  // namespace qmap
