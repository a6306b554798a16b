#include "d2d/sir.hpp"

#include <limits>
#include <stdexcept>

namespace d2d {

namespace {

using detail::CompensatedSum;
using detail::attenuation;

double checked_attenuation(double squared_dist, double alpha) {
  if (squared_dist == 0.0)
    throw std::invalid_argument("Snapshot: coincident nodes (zero distance)");
  return attenuation(squared_dist, alpha);
}

double signal_term(const Snapshot& snap, const NetworkConfig& cfg, std::size_t k) {
  const double d2 = squared_distance(snap.d2d_tx_positions[k], snap.d2d_rx_positions[k]);
  return snap.fading(k, k + 1) * cfg.d2d_power_mw *
         checked_attenuation(d2, cfg.pathloss_exponent);
}

double cellular_term(const Snapshot& snap, const NetworkConfig& cfg, std::size_t k) {
  const double d2 = squared_distance(snap.uplink_position, snap.d2d_rx_positions[k]);
  return snap.fading(k, 0) * cfg.cellular_power_mw *
         checked_attenuation(d2, cfg.pathloss_exponent);
}

double d2d_term(const Snapshot& snap, const NetworkConfig& cfg, std::size_t k,
                std::size_t l) {
  const double d2 = squared_distance(snap.d2d_tx_positions[l], snap.d2d_rx_positions[k]);
  return snap.fading(k, l + 1) * cfg.d2d_power_mw *
         checked_attenuation(d2, cfg.pathloss_exponent);
}

double ratio(double num, double den) {
  if (den > 0.0) return num / den;
  return num > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

}  // namespace

std::size_t ActiveSet::count() const {
  std::size_t c = 0;
  for (const auto f : active_flags) c += (f != 0);
  return c;
}

LinkSirs estimated_sirs(const Snapshot& snap, const NetworkConfig& cfg) {
  const std::size_t n = snap.pair_count();
  LinkSirs out{std::vector<double>(n), SirKind::estimated};
  // Summation order is fixed: cellular term first, then D2D terms in index order.
  for (std::size_t k = 0; k < n; ++k) {
    CompensatedSum den;
    den.add(cellular_term(snap, cfg, k));
    for (std::size_t l = 0; l < n; ++l)
      if (l != k) den.add(d2d_term(snap, cfg, k, l));
    out.values[k] = ratio(signal_term(snap, cfg, k), den.value());
  }
  return out;
}

LinkSirs realized_sirs(const Snapshot& snap, const NetworkConfig& cfg,
                       const ActiveSet& active) {
  const std::size_t n = snap.pair_count();
  if (active.size() != n)
    throw std::invalid_argument("realized_sirs: active set size mismatch");
  LinkSirs out{std::vector<double>(n), SirKind::realized};
  for (std::size_t k = 0; k < n; ++k) {
    CompensatedSum den;
    den.add(cellular_term(snap, cfg, k));
    for (std::size_t l = 0; l < n; ++l)
      if (l != k && active.active(l)) den.add(d2d_term(snap, cfg, k, l));
    out.values[k] = ratio(signal_term(snap, cfg, k), den.value());
  }
  return out;
}

SnapshotMetrics snapshot_metrics(const Snapshot& snap, const NetworkConfig& cfg,
                                 const ActiveSet& active, double beta_linear) {
  if (!(beta_linear > 0.0))
    throw std::invalid_argument("snapshot_metrics: beta must be > 0");
  const LinkSirs realized = realized_sirs(snap, cfg, active);
  SnapshotMetrics m;
  for (std::size_t k = 0; k < snap.pair_count(); ++k) {
    if (!active.active(k)) continue;
    ++m.active_count;
    const double sir = realized.values[k];
    if (sir > beta_linear) ++m.covered_active_count;  // strict inequality
    m.sum_log_rate += std::log2(1.0 + sir);
  }
  return m;
}

namespace detail {

SirWorkspace compute_sir_workspace(const Snapshot& snap, const NetworkConfig& cfg) {
  const std::size_t n = snap.pair_count();
  SirWorkspace ws;
  ws.n = n;
  ws.signal.resize(n);
  ws.cellular.resize(n);
  ws.d2d_contribution.assign(n * n, 0.0);
  ws.estimated.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    ws.signal[k] = signal_term(snap, cfg, k);
    ws.cellular[k] = cellular_term(snap, cfg, k);
    CompensatedSum den;
    den.add(ws.cellular[k]);
    for (std::size_t l = 0; l < n; ++l) {
      if (l == k) continue;
      const double c = d2d_term(snap, cfg, k, l);
      ws.d2d_contribution[k * n + l] = c;
      den.add(c);
    }
    ws.estimated[k] = ratio(ws.signal[k], den.value());
  }
  return ws;
}

}  // namespace detail

}  // namespace d2d
