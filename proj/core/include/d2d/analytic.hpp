#pragma once

#include "d2d/config.hpp"

namespace d2d {

enum class ThresholdMethod { unconditional, conditional };

// Optimal operating point of the SIR-aware access scheme for one of the two
// optimization routes. Self-consistent by construction: when active,
// access_probability(g_star) returns ps_star.
struct ThresholdSolution {
  ThresholdMethod method = ThresholdMethod::unconditional;
  double ps_star = 1.0;  // optimal access probability, in (0, 1]
  double g_star = 0.0;   // linear SIR threshold; 0 when no selection is imposed
  bool active = false;   // false when the optimum is to admit every link
};

// Coverage probability of a typical D2D link with all links active: the
// interference Laplace factor times the expectation over the uplink-to-receiver
// distance, evaluated by adaptive quadrature (abs tol 1e-8) against the
// two-points-in-a-disk distance density.
double coverage_prob_exact(double beta_linear, const NetworkConfig& cfg, double density);

// Closed-form approximation: exp(-density C beta^{2/alpha}) / (1 + K beta^{2/alpha}).
double coverage_prob_approx(double beta_linear, const NetworkConfig& cfg, double density);

// Access probability of the SIR-threshold scheme: the coverage form evaluated
// at the activation threshold; 1 when g is 0.
double access_probability(double g_linear, const NetworkConfig& cfg, double density);

// Area spectral efficiency under the unconditional success approximation for a
// given access probability: density ps e^{-density ps C b}/(1 + K b) log2(1+beta),
// with b = beta^{2/alpha}. Units: bits/s/Hz/m^2.
double ase_unconditional(double ps, double beta_linear, const NetworkConfig& cfg,
                         double density);

// Maximizer of the unconditional ASE with its threshold. Below the activation
// boundary (density C beta^{2/alpha} <= 1) the scheme stays off: ps = 1, g = 0.
ThresholdSolution optimal_unconditional(double beta_linear, const NetworkConfig& cfg,
                                        double density);

// Maximizer built from the conditional success approximation: ps solves
// ps (1 + K b) = exp(-density C ps b), resolved in closed form via Lambert W,
// with the threshold inverting the access-probability curve at that ps.
ThresholdSolution optimal_conditional(double beta_linear, const NetworkConfig& cfg,
                                      double density);

// Mean aggregate D2D rate with every link active, bits/s/Hz:
// density pi R^2 / ln 2 times the integral of coverage/(1+x) over x >= 0.
// The tail beyond x = 1 is mapped to a finite interval via x = t/(1-t).
double sum_rate_analytic(const NetworkConfig& cfg, double density);

}  // namespace d2d
