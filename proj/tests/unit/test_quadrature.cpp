#include <doctest.h>

#include <cmath>

#include "d2d/quadrature.hpp"

using namespace d2d;

TEST_CASE("polynomials are integrated to machine precision") {
  CHECK(integrate_adaptive([](double x) { return x * x * x * x; }, 0.0, 1.0, 1e-13) ==
        doctest::Approx(0.2).epsilon(1e-14));
  CHECK(integrate_adaptive([](double x) { return std::pow(x, 20); }, 0.0, 1.0, 1e-12) ==
        doctest::Approx(1.0 / 21.0).epsilon(1e-13));
}

TEST_CASE("smooth transcendental integrand") {
  CHECK(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-10) ==
        doctest::Approx(2.0).epsilon(1e-11));
}

TEST_CASE("disk pair-distance density integrates to one") {
  const double r_cell = 500.0;
  const auto pdf = [&](double r) {
    const double ratio = r / (2.0 * r_cell);
    return (2.0 * r / (r_cell * r_cell)) *
           ((2.0 / M_PI) * std::acos(ratio) -
            (r / (M_PI * r_cell)) * std::sqrt(1.0 - ratio * ratio));
  };
  CHECK(integrate_adaptive(pdf, 0.0, 2.0 * r_cell, 1e-8) ==
        doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("integrable endpoint singularity converges") {
  CHECK(integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-6) ==
        doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("divergent integrand reports the achieved error") {
  try {
    integrate_adaptive([](double x) { return 1.0 / x; }, 0.0, 1.0, 1e-8, 200);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(e.achieved_error() > 1e-8);
  }
}

TEST_CASE("empty interval integrates to zero") {
  CHECK(integrate_adaptive([](double) { return 1.0; }, 2.0, 2.0, 1e-12) == 0.0);
}
