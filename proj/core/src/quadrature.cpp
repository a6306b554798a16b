#include "d2d/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

namespace d2d {

namespace {

// 15-point Kronrod nodes on [-1, 1] (odd-indexed entries are the embedded
// 7-point Gauss nodes) with the matching weight sets.
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
  double a, b;
  double value;
  double error;
};

bool operator<(const Segment& lhs, const Segment& rhs) { return lhs.error < rhs.error; }

Segment gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double kronrod = 0.0;
  double gauss = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double offset = half * kNodes[i];
    double fsum;
    if (i == 7) {
      fsum = f(center);
    } else {
      fsum = f(center - offset) + f(center + offset);
    }
    kronrod += kKronrodWeights[i] * fsum;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fsum;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_segments) {
  if (a == b) return 0.0;
  std::priority_queue<Segment> queue;
  queue.push(gauss_kronrod(f, a, b));
  double total_value = queue.top().value;
  double total_error = queue.top().error;
  int segments = 1;
  while (total_error > abs_tol && segments < max_segments) {
    const Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval has collapsed to adjacent doubles; cannot refine further.
      queue.push(worst);
      break;
    }
    const Segment left = gauss_kronrod(f, worst.a, mid);
    const Segment right = gauss_kronrod(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++segments;
  }
  if (total_error > abs_tol)
    throw QuadratureError("integrate_adaptive: tolerance not reached (achieved " +
                              std::to_string(total_error) + ", requested " +
                              std::to_string(abs_tol) + ")",
                          total_error);
  return total_value;
}

}  // namespace d2d
