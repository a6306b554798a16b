#include "d2d/config.hpp"

#include <stdexcept>
#include <string>

namespace d2d {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(std::string("NetworkConfig: ") + message);
}

}  // namespace

void validate(const NetworkConfig& cfg) {
  require(std::isfinite(cfg.cell_radius_m) && cfg.cell_radius_m > 0.0,
          "cell_radius_m must be > 0");
  require(std::isfinite(cfg.d2d_density_per_m2) && cfg.d2d_density_per_m2 > 0.0,
          "d2d_density_per_m2 must be > 0");
  require(std::isfinite(cfg.d2d_link_distance_m) && cfg.d2d_link_distance_m > 0.0,
          "d2d_link_distance_m must be > 0");
  require(std::isfinite(cfg.cellular_power_mw) && cfg.cellular_power_mw > 0.0,
          "cellular_power_mw must be > 0");
  require(std::isfinite(cfg.d2d_power_mw) && cfg.d2d_power_mw > 0.0,
          "d2d_power_mw must be > 0");
  require(std::isfinite(cfg.pathloss_exponent) && cfg.pathloss_exponent > 2.0,
          "pathloss_exponent must be > 2");
  require(std::isfinite(cfg.guard_ring_factor) && cfg.guard_ring_factor >= 1.0,
          "guard_ring_factor must be >= 1");
}

double sinc_normalized(double x) {
  if (x == 0.0) return 1.0;
  const double px = M_PI * x;
  return std::sin(px) / px;
}

double mean_disk_pair_distance(double radius_m) {
  return 128.0 * radius_m / (45.0 * M_PI);
}

DerivedConstants derive_constants(const NetworkConfig& cfg) {
  validate(cfg);
  const double alpha = cfg.pathloss_exponent;
  const double d = cfg.d2d_link_distance_m;
  const double mean_dist = mean_disk_pair_distance(cfg.cell_radius_m);

  DerivedConstants out{};
  out.k_alpha = std::pow(cfg.cellular_power_mw / cfg.d2d_power_mw, 2.0 / alpha) *
                (d * d) / (mean_dist * mean_dist);
  out.c_alpha = M_PI * d * d / sinc_normalized(2.0 / alpha);
  out.beta_activation =
      std::pow(cfg.d2d_density_per_m2 * out.c_alpha, -alpha / 2.0);
  return out;
}

}  // namespace d2d
