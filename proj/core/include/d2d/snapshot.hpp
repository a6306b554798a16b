#pragma once

#include <cstddef>
#include <vector>

#include "d2d/config.hpp"
#include "d2d/random.hpp"

namespace d2d {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double squared_distance(Vec2 a, Vec2 b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double distance(Vec2 a, Vec2 b) { return std::sqrt(squared_distance(a, b)); }

// One network realization: uplink user position, D2D pair geometry, and the
// slot fading state. Fading entries are unit-mean exponential power gains,
// stored row-major per receiver; column 0 is the cellular uplink, column
// l + 1 is D2D transmitter l.
struct Snapshot {
  Vec2 uplink_position;
  std::vector<Vec2> d2d_tx_positions;
  std::vector<Vec2> d2d_rx_positions;
  std::vector<double> fading_to_rx;  // size pair_count() * (pair_count() + 1)

  std::size_t pair_count() const { return d2d_tx_positions.size(); }

  double fading(std::size_t rx, std::size_t source) const {
    return fading_to_rx[rx * (pair_count() + 1) + source];
  }
  double& fading(std::size_t rx, std::size_t source) {
    return fading_to_rx[rx * (pair_count() + 1) + source];
  }
};

// Draws one realization: pair count Poisson(lambda * pi * (g R)^2), transmitters
// uniform on the sampling disk of radius g R, receivers at the fixed link
// distance in a uniform direction (kept even if they land outside the cell),
// uplink user uniform on the cell disk, fading i.i.d. Exp(1).
Snapshot sample_snapshot(const NetworkConfig& cfg, RandomStream& rng);

// Whether pair k's transmitter lies inside the cell disk. Only such links
// enter reported metrics when a guard ring is configured.
bool link_in_cell(const Snapshot& snap, const NetworkConfig& cfg, std::size_t k);

}  // namespace d2d
