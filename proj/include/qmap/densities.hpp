#pragma once

// Closed-form limit densities for the scaled contour pair at finitely many times.

#include <span>

namespace qmap {

/// Density for the heights x_1..x_p at times tau_1 < ... < tau_p in (0,1) and
/// the minima m_1..m_{p-1} between consecutive times. Zero outside the cone
/// x_i > 0, 0 <= m_i <= min(x_i, x_{i+1}). Throws std::domain_error on size
/// mismatch or bad times.
///
/// This is the lattice local-limit form: heights of a Dyck path have a fixed
/// parity at each time, so a probability density in x is half of this value.
double limit_height_density(std::span<const double> heights, std::span<const double> minima,
                            std::span<const double> tau);

/// Product of centred Gaussian densities with variances ell_i at points k_i.
double limit_label_density(std::span<const double> ell, std::span<const double> points);

}  // namespace qmap
