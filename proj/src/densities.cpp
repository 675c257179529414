#include "qmap/densities.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qmap {

double limit_height_density(std::span<const double> heights, std::span<const double> minima,
                            std::span<const double> tau) {
  const auto count = heights.size();
  if (count == 0 || tau.size() != count || minima.size() + 1 != count) {
    throw std::domain_error("height density needs as many heights as times and one minimum fewer");
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (!(tau[i] > 0.0 && tau[i] < 1.0) || (i > 0 && !(tau[i] > tau[i - 1]))) {
      throw std::domain_error("times must be strictly increasing in (0,1)");
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (!(heights[i] > 0.0)) return 0.0;
  }
  // Factor i covers [tau_i, tau_{i+1}] with tau_0 = 0, tau_{p+1} = 1; it starts
  // at height beta above its lower end and ends at gamma above it.
  std::vector<double> sum(count + 1);
  std::vector<double> span_len(count + 1);
  sum[0] = heights[0];
  span_len[0] = tau[0];
  for (std::size_t i = 1; i < count; ++i) {
    const double beta = heights[i - 1] - minima[i - 1];
    const double gamma = heights[i] - minima[i - 1];
    if (minima[i - 1] < 0.0 || beta < 0.0 || gamma < 0.0) return 0.0;
    sum[i] = beta + gamma;
    span_len[i] = tau[i] - tau[i - 1];
  }
  sum[count] = heights[count - 1];
  span_len[count] = 1.0 - tau[count - 1];

  const double times = static_cast<double>(count);
  double value = std::pow(2.0, 2.0 * times) * std::pow(2.0 * std::numbers::pi, -times / 2.0);
  for (std::size_t i = 0; i <= count; ++i) {
    value *= sum[i] * std::exp(-sum[i] * sum[i] / (2.0 * span_len[i])) /
             std::pow(span_len[i], 1.5);
  }
  return value;
}

double limit_label_density(std::span<const double> ell, std::span<const double> points) {
  if (ell.size() != points.size() || ell.empty()) {
    throw std::domain_error("label density needs matching nonempty vectors");
  }
  double value = std::pow(2.0 * std::numbers::pi, -static_cast<double>(ell.size()) / 2.0);
  for (std::size_t i = 0; i < ell.size(); ++i) {
    if (!(ell[i] > 0.0)) throw std::domain_error("variances must be positive");
    value *= std::exp(-points[i] * points[i] / (2.0 * ell[i])) / std::sqrt(ell[i]);
  }
  return value;
}

}  // namespace qmap
