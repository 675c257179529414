#include "qmap/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace qmap {

double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  double scale = 0.0;
  for (auto value : xs) scale += value;
  return scale / static_cast<double>(xs.size());
}

double variance(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double mu = mean(xs);
  double scale = 0.0;
  for (auto value : xs) scale += (value - mu) * (value - mu);
  return scale / static_cast<double>(xs.size() - 1);
}

double quantile(std::vector<double> xs, double prob) {
  if (xs.empty()) throw std::domain_error("quantile of an empty sample");
  if (prob < 0.0 || prob > 1.0) throw std::domain_error("quantile level outside [0,1]");
  std::sort(xs.begin(), xs.end());
  const double pos = prob * static_cast<double>(xs.size() - 1);
  const auto i = static_cast<std::size_t>(std::floor(pos));
  if (i + 1 >= xs.size()) return xs.back();
  const double frac = pos - static_cast<double>(i);
  return xs[i] + frac * (xs[i + 1] - xs[i]);
}

double ks_two_sample(std::vector<double> lhs, std::vector<double> rhs) {
  if (lhs.empty() || rhs.empty()) throw std::domain_error("KS test needs two nonempty samples");
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  const double na = static_cast<double>(lhs.size());
  const double nb = static_cast<double>(rhs.size());
  std::size_t i = 0, j = 0;
  double delta = 0.0;
  while (i < lhs.size() && j < rhs.size()) {
    const double value = std::min(lhs[i], rhs[j]);
    while (i < lhs.size() && lhs[i] == value) ++i;
    while (j < rhs.size() && rhs[j] == value) ++j;
    delta = std::max(delta, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return delta;
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double sigmas) {
  if (trials == 0) return {0.0, 1.0};
  const double nt = static_cast<double>(trials);
  const double ph = static_cast<double>(successes) / nt;
  const double z2 = sigmas * sigmas;
  const double centre = (ph + z2 / (2 * nt)) / (1 + z2 / nt);
  const double half = sigmas * std::sqrt(ph * (1 - ph) / nt + z2 / (4 * nt * nt)) / (1 + z2 / nt);
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

bool within_sigma(std::uint64_t successes, std::uint64_t trials, double prob, double sigmas) {
  if (trials == 0) return false;
  const double nt = static_cast<double>(trials);
  const double sigma = std::sqrt(prob * (1 - prob) / nt);
  return std::abs(static_cast<double>(successes) / nt - prob) <= sigmas * sigma;
}

double chi_square_survival(double statistic, std::size_t degrees_of_freedom) {
  if (degrees_of_freedom == 0) throw std::domain_error("chi-square needs positive dof");
  if (statistic <= 0.0) return 1.0;
  return boost::math::gamma_q(static_cast<double>(degrees_of_freedom) / 2.0, statistic / 2.0);
}

ChiSquareResult chi_square_test(std::span<const double> observed, std::span<const double> expected,
                                std::size_t fitted_parameters) {
  if (observed.size() != expected.size()) throw std::domain_error("cell count mismatch");
  ChiSquareResult chi;
  std::size_t cells = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (expected[i] <= 0.0) {
      if (observed[i] > 0.0) chi.statistic = INFINITY;
      continue;
    }
    ++cells;
    const double diff = observed[i] - expected[i];
    chi.statistic += diff * diff / expected[i];
  }
  if (cells < 2 + fitted_parameters) throw std::domain_error("too few cells for chi-square");
  chi.degrees_of_freedom = cells - 1 - fitted_parameters;
  chi.p_value = std::isinf(chi.statistic) ? 0.0 : chi_square_survival(chi.statistic, chi.degrees_of_freedom);
  return chi;
}

}  // namespace qmap
