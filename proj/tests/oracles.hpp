#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// the tests check, apart from the inputs they are handed.

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

template <typename F>
double integrate(F f, double a, double b, double* error = nullptr) {
  double err = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-12, &err);
  if (error) *error = err;
  return value;
}

/// Ground-state density average of sin^2(k_transfer X), by quadrature.
/// sigma^2 = hbar / (2 m omega) and eta = k_transfer * sigma.
inline double d2_fraction_by_quadrature(double eta) {
  // Work in units of sigma: X = sigma u, density exp(-u^2/2)/sqrt(2 pi).
  auto f = [eta](double u) {
    const double s = std::sin(eta * u);
    return std::exp(-0.5 * u * u) / std::sqrt(2.0 * M_PI) * s * s;
  };
  return integrate(f, -40.0, 40.0);
}

/// |<n|exp(i eta X)|0>|^2 summed over n by explicit series (Poisson weights).
inline double poisson_weight(int n, double eta) {
  double w = std::exp(-eta * eta);
  for (int j = 1; j <= n; ++j) w *= eta * eta / j;
  return w;
}

inline double normal_cdf(double x, double sigma) { return 0.5 * std::erfc(-x / (sigma * std::sqrt(2.0))); }

/// Kolmogorov-Smirnov statistic of samples against N(0, sigma^2).
inline double ks_statistic(std::vector<double> samples, double sigma) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double cdf = normal_cdf(samples[i], sigma);
    d = std::max({d, cdf - i / n, (i + 1) / n - cdf});
  }
  return d;
}

/// |observed - n p| <= sigmas * sqrt(n p (1 - p)).
inline bool binomial_within(std::uint64_t observed, std::uint64_t n, double p, double sigmas = 5.0) {
  const double mean = static_cast<double>(n) * p;
  const double sd = std::sqrt(static_cast<double>(n) * p * (1.0 - p));
  return std::abs(static_cast<double>(observed) - mean) <= sigmas * sd;
}

}  // namespace oracle
