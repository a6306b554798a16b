#include "d2d/snapshot.hpp"

namespace d2d {

namespace {

// Polar inversion keeps the draw order fixed: radius variate, then angle.
Vec2 point_in_disk(double radius, RandomStream& rng) {
  const double r = radius * std::sqrt(rng.uniform01());
  const double theta = 2.0 * M_PI * rng.uniform01();
  return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace

Snapshot sample_snapshot(const NetworkConfig& cfg, RandomStream& rng) {
  const double sampling_radius = cfg.guard_ring_factor * cfg.cell_radius_m;
  const double mean_pairs =
      cfg.d2d_density_per_m2 * M_PI * sampling_radius * sampling_radius;

  Snapshot snap;
  const std::size_t n = static_cast<std::size_t>(rng.poisson(mean_pairs));
  snap.uplink_position = point_in_disk(cfg.cell_radius_m, rng);
  snap.d2d_tx_positions.reserve(n);
  snap.d2d_rx_positions.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Vec2 tx = point_in_disk(sampling_radius, rng);
    const double phi = 2.0 * M_PI * rng.uniform01();
    snap.d2d_tx_positions.push_back(tx);
    snap.d2d_rx_positions.push_back({tx.x + cfg.d2d_link_distance_m * std::cos(phi),
                                     tx.y + cfg.d2d_link_distance_m * std::sin(phi)});
  }
  snap.fading_to_rx.resize(n * (n + 1));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t src = 0; src <= n; ++src)
      snap.fading(k, src) = rng.unit_exponential();
  return snap;
}

bool link_in_cell(const Snapshot& snap, const NetworkConfig& cfg, std::size_t k) {
  const Vec2 tx = snap.d2d_tx_positions[k];
  return tx.x * tx.x + tx.y * tx.y <= cfg.cell_radius_m * cfg.cell_radius_m;
}

}  // namespace d2d
