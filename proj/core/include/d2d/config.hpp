#pragma once

#include <cmath>

namespace d2d {

// Scenario constants for a single-cell D2D underlay.
// Units at the boundary: distances in m, densities per m^2, powers in mW.
struct NetworkConfig {
  double cell_radius_m = 500.0;
  double d2d_density_per_m2 = 2e-5;
  double d2d_link_distance_m = 50.0;
  double cellular_power_mw = 10.0;
  double d2d_power_mw = 0.1;
  double pathloss_exponent = 4.0;  // must exceed 2 for the interference field to converge
  // Enlarges the D2D transmitter sampling disk to guard_ring_factor * cell_radius_m.
  // Metrics are always pooled over links whose transmitter lies inside the cell;
  // factors > 1 remove the finite-window edge bias when comparing against the
  // infinite-plane closed forms. 1 keeps the sampling window equal to the cell.
  double guard_ring_factor = 1.0;

  bool operator==(const NetworkConfig&) const = default;
};

// Scenario-derived scalars used throughout the closed forms.
struct DerivedConstants {
  double k_alpha;          // cellular-interference shape constant K(alpha)
  double c_alpha;          // effective interference area C(alpha), m^2
  double beta_activation;  // linear target SIR below which the unconditional scheme stays off
};

// Throws std::invalid_argument naming the violated invariant.
void validate(const NetworkConfig& cfg);

// Normalized sinc: sin(pi x)/(pi x), sinc(0) = 1.
double sinc_normalized(double x);

// Mean distance between two independent uniform points in a disk: 128 R / (45 pi).
double mean_disk_pair_distance(double radius_m);

DerivedConstants derive_constants(const NetworkConfig& cfg);

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

}  // namespace d2d
