#pragma once

#include <cstdint>
#include <vector>

#include "d2d/config.hpp"
#include "d2d/snapshot.hpp"

namespace d2d {

// Activation decisions per D2D pair index.
struct ActiveSet {
  std::vector<std::uint8_t> active_flags;

  std::size_t size() const { return active_flags.size(); }
  bool active(std::size_t k) const { return active_flags[k] != 0; }
  std::size_t count() const;

  static ActiveSet all_active(std::size_t n) { return {std::vector<std::uint8_t>(n, 1)}; }
};

enum class SirKind { estimated, realized };

struct LinkSirs {
  std::vector<double> values;  // linear SIR per pair index
  SirKind kind = SirKind::estimated;
};

// SIR of every potential link assuming all D2D transmitters active (the value
// each receiver estimates during the sensing phase). Noise is zero by model.
LinkSirs estimated_sirs(const Snapshot& snap, const NetworkConfig& cfg);

// SIR with D2D interference restricted to the active set; the cellular uplink
// always interferes. Entries for inactive pairs are computed the same way and
// it is up to callers to ignore them.
LinkSirs realized_sirs(const Snapshot& snap, const NetworkConfig& cfg,
                       const ActiveSet& active);

struct SnapshotMetrics {
  long covered_active_count = 0;  // active links with realized SIR strictly above beta
  long active_count = 0;
  double sum_log_rate = 0.0;  // sum of log2(1 + realized SIR) over active links
};

SnapshotMetrics snapshot_metrics(const Snapshot& snap, const NetworkConfig& cfg,
                                 const ActiveSet& active, double beta_linear);

namespace detail {

// Neumaier-compensated accumulator; keeps interference sums reproducible at
// the 1e-12 tolerances the tests pin.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

inline double attenuation(double squared_dist, double alpha) {
  if (alpha == 4.0) return 1.0 / (squared_dist * squared_dist);
  return std::pow(squared_dist, -0.5 * alpha);
}

// Per-receiver decomposition of the estimated-SIR computation, retained for
// callers that need the pairwise interference terms (threshold search).
struct SirWorkspace {
  std::vector<double> signal;             // desired received power per link
  std::vector<double> cellular;           // uplink interference per link
  std::vector<double> d2d_contribution;   // row-major [rx][tx], self entries 0
  std::vector<double> estimated;          // estimated SIR per link

  std::size_t n = 0;
  double d2d(std::size_t rx, std::size_t tx) const { return d2d_contribution[rx * n + tx]; }
};

SirWorkspace compute_sir_workspace(const Snapshot& snap, const NetworkConfig& cfg);

}  // namespace detail

}  // namespace d2d
