#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qmap {

double mean(std::span<const double> xs);
/// Unbiased sample variance; 0 for fewer than two values.
double variance(std::span<const double> xs);
/// Linear interpolation between order statistics, q in [0,1].
double quantile(std::vector<double> xs, double frac);

/// sup |F_a - F_b| between the two empirical distribution functions.
double ks_two_sample(std::vector<double> lhs, std::vector<double> rhs);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double value) const { return lo <= value && value <= hi; }
};

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double sigmas = 3.0);

/// |successes/trials - p| <= z * sqrt(p(1-p)/trials).
bool within_sigma(std::uint64_t successes, std::uint64_t trials, double prob, double sigmas = 3.0);

struct ChiSquareResult {
  double statistic = 0.0;
  std::size_t degrees_of_freedom = 0;
  double p_value = 0.0;
};

/// Pearson statistic over cells with positive expectation; degrees of freedom
/// are cells - 1 - fitted_parameters.
ChiSquareResult chi_square_test(std::span<const double> observed, std::span<const double> expected,
                                std::size_t fitted_parameters = 0);

/// Upper tail of the chi-square distribution.
double chi_square_survival(double statistic, std::size_t degrees_of_freedom);

}  // namespace qmap
