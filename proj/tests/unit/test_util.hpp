#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace test_util {

// Wilson-Hilferty approximation of the chi-square quantile; plenty accurate
// for goodness-of-fit gates at the 0.01 level.
inline double chi2_quantile(double df, double p) {
  const double z = p == 0.99 ? 2.3263478740408408 : throw std::invalid_argument("p");
  const double t = 1.0 - 2.0 / (9.0 * df) + z * std::sqrt(2.0 / (9.0 * df));
  return df * t * t * t;
}

// Asymptotic Kolmogorov-Smirnov critical value at significance 0.01.
inline double ks_critical_001(std::size_t n) { return 1.628 / std::sqrt(static_cast<double>(n)); }

// Bisection for a continuous function with f(lo) and f(hi) of opposite sign.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int iterations = 200) {
  double flo = f(lo);
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((flo <= 0.0) == (fm <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace test_util
