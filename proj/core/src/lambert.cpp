#include "d2d/lambert.hpp"

#include <cmath>
#include <stdexcept>

namespace d2d {

namespace {

constexpr double kInvE = 0.36787944117144232160;
constexpr int kMaxIter = 64;

// Halley iteration on f(w) = w e^w - x from a given starting point.
double halley(double w, double x) {
  for (int i = 0; i < kMaxIter; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * (w + 1.0));
    const double step = f / denom;
    w -= step;
    if (std::abs(step) <= 1e-14 * std::fmax(1.0, std::abs(w))) break;
  }
  return w;
}

}  // namespace

double lambert_w0(double x) {
  if (std::isnan(x)) return x;
  const double q = M_E * x + 1.0;  // distance from the branch point, scaled
  if (q <= 0.0) {
    if (x >= -kInvE - 1e-14) return -1.0;
    throw std::domain_error("lambert_w0: argument below -1/e");
  }
  if (x == 0.0) return 0.0;
  if (q < 1e-10) {
    // Branch-point series: W = -1 + p - p^2/3 + ..., p = sqrt(2 q).
    const double p = std::sqrt(2.0 * q);
    return -1.0 + p - 2.0 * q / 3.0;
  }
  if (x > 1e100) return lambert_w0_exp_arg(std::log(x));
  const double guess = (x < -0.3235) ? -1.0 + std::sqrt(2.0 * q) : std::log1p(x);
  return halley(guess, x);
}

double lambert_w0_exp_arg(double y) {
  if (std::isnan(y)) return y;
  if (y < 3.0) return lambert_w0(std::exp(y));
  // Newton on f(w) = w + ln w - y; f is concave and the start w = y - ln y
  // lies below the root, so the iteration increases monotonically.
  double w = y - std::log(y);
  for (int i = 0; i < kMaxIter; ++i) {
    const double f = w + std::log(w) - y;
    const double step = f * w / (w + 1.0);
    w -= step;
    if (std::abs(step) <= 1e-14 * std::fmax(1.0, std::abs(w))) break;
  }
  return w;
}

}  // namespace d2d
