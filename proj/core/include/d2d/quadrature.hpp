#pragma once

#include <functional>
#include <stdexcept>

namespace d2d {

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_error_(achieved) {}
  double achieved_error() const { return achieved_error_; }

 private:
  double achieved_error_;
};

// Globally adaptive Gauss-Kronrod 15(7): repeatedly bisects the segment with
// the largest error estimate until the summed estimate falls below abs_tol.
// Endpoints are never evaluated. Throws QuadratureError (carrying the achieved
// error) if the budget of segments is exhausted first.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_segments = 4000);

}  // namespace d2d
