#include "d2d/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "d2d/lambert.hpp"
#include "d2d/quadrature.hpp"

namespace d2d {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

double beta_exponent(double beta_linear, double alpha) {
  return std::pow(beta_linear, 2.0 / alpha);
}

// Distance density between two independent uniform points in a disk of radius R.
double disk_pair_distance_pdf(double r, double radius) {
  const double ratio = std::fmin(r / (2.0 * radius), 1.0);
  const double root = std::sqrt(std::fmax(1.0 - ratio * ratio, 0.0));
  return (2.0 * r / (radius * radius)) *
         ((2.0 / M_PI) * std::acos(ratio) - (r / (M_PI * radius)) * root);
}

}  // namespace

double coverage_prob_exact(double beta_linear, const NetworkConfig& cfg, double density) {
  validate(cfg);
  require(beta_linear > 0.0, "coverage_prob_exact: beta must be > 0");
  require(density >= 0.0, "coverage_prob_exact: density must be >= 0");
  const double alpha = cfg.pathloss_exponent;
  const double d = cfg.d2d_link_distance_m;
  const double radius = cfg.cell_radius_m;
  const double c_alpha = M_PI * d * d / sinc_normalized(2.0 / alpha);
  const double laplace = std::exp(-density * c_alpha * beta_exponent(beta_linear, alpha));
  const double power_ratio = cfg.cellular_power_mw / cfg.d2d_power_mw;
  const auto integrand = [&](double r) {
    const double uplink = beta_linear * power_ratio * std::pow(d / r, alpha);
    return disk_pair_distance_pdf(r, radius) / (1.0 + uplink);
  };
  const double expectation = integrate_adaptive(integrand, 0.0, 2.0 * radius, 1e-8);
  return laplace * expectation;
}

double coverage_prob_approx(double beta_linear, const NetworkConfig& cfg, double density) {
  validate(cfg);
  require(beta_linear > 0.0, "coverage_prob_approx: beta must be > 0");
  require(density >= 0.0, "coverage_prob_approx: density must be >= 0");
  const DerivedConstants dc = derive_constants(cfg);
  const double b = beta_exponent(beta_linear, cfg.pathloss_exponent);
  return std::exp(-density * dc.c_alpha * b) / (1.0 + dc.k_alpha * b);
}

double access_probability(double g_linear, const NetworkConfig& cfg, double density) {
  require(g_linear >= 0.0, "access_probability: threshold must be >= 0");
  if (g_linear == 0.0) return 1.0;
  return coverage_prob_approx(g_linear, cfg, density);
}

double ase_unconditional(double ps, double beta_linear, const NetworkConfig& cfg,
                         double density) {
  require(ps > 0.0 && ps <= 1.0, "ase_unconditional: ps must be in (0, 1]");
  // Thinning to density ps reproduces the unconditional success probability.
  return density * ps * coverage_prob_approx(beta_linear, cfg, density * ps) *
         std::log2(1.0 + beta_linear);
}

ThresholdSolution optimal_unconditional(double beta_linear, const NetworkConfig& cfg,
                                        double density) {
  validate(cfg);
  require(beta_linear > 0.0, "optimal_unconditional: beta must be > 0");
  require(density > 0.0, "optimal_unconditional: density must be > 0");
  const DerivedConstants dc = derive_constants(cfg);
  const double alpha = cfg.pathloss_exponent;
  const double b = beta_exponent(beta_linear, alpha);
  const double lc = density * dc.c_alpha;

  ThresholdSolution sol;
  sol.method = ThresholdMethod::unconditional;
  if (lc * b <= 1.0) {
    sol.ps_star = 1.0;
    sol.g_star = 0.0;
    sol.active = false;
    return sol;
  }
  sol.ps_star = 1.0 / (lc * b);
  // W argument is (lc^2 b / K) e^{lc / K}; taken through the log-domain form
  // because the exponential overflows in dense scenarios.
  const double y = std::log(lc * lc * b / dc.k_alpha) + lc / dc.k_alpha;
  const double w = lambert_w0_exp_arg(y);
  const double g_b = std::fmax(w / lc - 1.0 / dc.k_alpha, 0.0);  // = g_star^{2/alpha}
  sol.g_star = std::pow(g_b, alpha / 2.0);
  sol.active = true;
  return sol;
}

ThresholdSolution optimal_conditional(double beta_linear, const NetworkConfig& cfg,
                                      double density) {
  validate(cfg);
  require(beta_linear > 0.0, "optimal_conditional: beta must be > 0");
  require(density > 0.0, "optimal_conditional: density must be > 0");
  const DerivedConstants dc = derive_constants(cfg);
  const double alpha = cfg.pathloss_exponent;
  const double b = beta_exponent(beta_linear, alpha);
  const double lc = density * dc.c_alpha;
  const double denom = 1.0 + dc.k_alpha * b;

  ThresholdSolution sol;
  sol.method = ThresholdMethod::conditional;
  const double ps = lambert_w0(lc * b / denom) / (lc * b);
  if (ps >= 1.0) {
    sol.ps_star = 1.0;
    sol.g_star = 0.0;
    sol.active = false;
    return sol;
  }
  sol.ps_star = ps;
  const double y = std::log(lc / (dc.k_alpha * ps)) + lc / dc.k_alpha;
  const double w = lambert_w0_exp_arg(y);
  const double g_b = std::fmax(w / lc - 1.0 / dc.k_alpha, 0.0);
  sol.g_star = std::pow(g_b, alpha / 2.0);
  sol.active = true;
  return sol;
}

double sum_rate_analytic(const NetworkConfig& cfg, double density) {
  validate(cfg);
  require(density >= 0.0, "sum_rate_analytic: density must be >= 0");
  const auto ccdf_over_1px = [&](double x) {
    return coverage_prob_approx(x, cfg, density) / (1.0 + x);
  };
  const double head = integrate_adaptive(ccdf_over_1px, 0.0, 1.0, 5e-7);
  // x = t/(1-t) maps [1, inf) onto [1/2, 1); the 1/(1+x) factor cancels to 1/(1-t).
  const auto tail_integrand = [&](double t) {
    const double x = t / (1.0 - t);
    return coverage_prob_approx(x, cfg, density) / (1.0 - t);
  };
  const double tail = integrate_adaptive(tail_integrand, 0.5, 1.0, 5e-7);
  const double radius = cfg.cell_radius_m;
  return density * M_PI * radius * radius / std::log(2.0) * (head + tail);
}

}  // namespace d2d
