#include "doctest.h"

#include <cmath>
#include <vector>

#include "qmap/random.hpp"
#include "qmap/statistics.hpp"

using namespace qmap;

TEST_CASE("moments and quantiles") {
  const std::vector<double> xs{4, 1, 3, 2};
  CHECK(mean(xs) == 2.5);
  CHECK(variance(xs) == doctest::Approx(5.0 / 3.0));
  CHECK(variance(std::vector<double>{7}) == 0.0);
  CHECK(quantile(xs, 0.0) == 1.0);
  CHECK(quantile(xs, 1.0) == 4.0);
  CHECK(quantile(xs, 0.5) == 2.5);
  CHECK(quantile(xs, 1.0 / 3.0) == doctest::Approx(2.0));
  CHECK_THROWS(quantile({}, 0.5));
  CHECK_THROWS(quantile(xs, 1.5));
}

TEST_CASE("two-sample KS") {
  const std::vector<double> lhs{1, 2, 3, 4};
  CHECK(ks_two_sample(lhs, lhs) == 0.0);
  CHECK(ks_two_sample(lhs, {10, 11}) == 1.0);
  CHECK(ks_two_sample({1, 2}, {2, 3}) == doctest::Approx(0.5));

  // Against a direct evaluation of both step functions at every sample point.
  Rng rng(3);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> xs_(1 + rng() % 60), ys_(1 + rng() % 60);
    for (auto& value : xs_) value = std::round(gauss(rng) * 4);
    for (auto& value : ys_) value = std::round(gauss(rng) * 4 + 1);
    double worst = 0;
    for (const auto& pool : {xs_, ys_}) {
      for (double at : pool) {
        const double fx = std::count_if(xs_.begin(), xs_.end(), [&](double value) { return value <= at; }) /
                          static_cast<double>(xs_.size());
        const double fy = std::count_if(ys_.begin(), ys_.end(), [&](double value) { return value <= at; }) /
                          static_cast<double>(ys_.size());
        worst = std::max(worst, std::abs(fx - fy));
      }
    }
    CHECK(ks_two_sample(xs_, ys_) == doctest::Approx(worst));
  }
}

TEST_CASE("binomial bounds") {
  CHECK(within_sigma(500, 1000, 0.5));
  CHECK_FALSE(within_sigma(560, 1000, 0.5));
  CHECK(within_sigma(547, 1000, 0.5));
  const auto nbr = wilson_interval(30, 100);
  CHECK(nbr.contains(0.3));
  CHECK(nbr.lo > 0.0);
  CHECK(nbr.hi < 1.0);
  CHECK_FALSE(nbr.contains(0.6));
  const auto none = wilson_interval(0, 50);
  CHECK(none.lo == doctest::Approx(0.0));
  CHECK(none.hi > 0.0);
}

TEST_CASE("chi-square") {
  // Two degrees of freedom: the tail is exp(-x/2). One: erfc(sqrt(x/2)).
  for (double pos_x : {0.1, 1.0, 4.0, 15.0}) {
    CHECK(chi_square_survival(pos_x, 2) == doctest::Approx(std::exp(-pos_x / 2)));
    CHECK(chi_square_survival(pos_x, 1) == doctest::Approx(std::erfc(std::sqrt(pos_x / 2))));
  }
  CHECK(chi_square_survival(0.0, 3) == 1.0);

  const std::vector<double> obs{10, 20, 30}, exp{20, 20, 20};
  const auto chi = chi_square_test(obs, exp);
  CHECK(chi.statistic == doctest::Approx(10.0));
  CHECK(chi.degrees_of_freedom == 2);
  CHECK(chi.p_value == doctest::Approx(std::exp(-5.0)));
  CHECK(chi_square_test(obs, exp, 1).degrees_of_freedom == 1);
  // Cells with zero expectation are skipped.
  const std::vector<double> obs2{10, 20, 30, 0}, exp2{20, 20, 20, 0};
  CHECK(chi_square_test(obs2, exp2).statistic == doctest::Approx(10.0));
  CHECK_THROWS(chi_square_test(obs, std::vector<double>{1, 2}));
}
