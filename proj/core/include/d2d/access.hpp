#pragma once

#include <cstdint>
#include <vector>

#include "d2d/config.hpp"
#include "d2d/sir.hpp"
#include "d2d/snapshot.hpp"

namespace d2d {

enum class SchemeKind { no_ac, channel_aware, sir_threshold, exhaustive };

// Concrete access-control rule mapping a snapshot to an activation set.
// The exhaustive kind is a search descriptor; it cannot be applied directly.
struct AccessScheme {
  SchemeKind kind = SchemeKind::no_ac;
  double sir_threshold_linear = 0.0;    // sir_threshold
  double channel_gain_threshold = 0.0;  // channel_aware, threshold on |h_kk|^2
  std::vector<double> search_grid;      // exhaustive, strictly increasing

  static AccessScheme no_access_control() { return {SchemeKind::no_ac, 0.0, 0.0, {}}; }
  static AccessScheme sir(double g_linear) {
    return {SchemeKind::sir_threshold, g_linear, 0.0, {}};
  }
  static AccessScheme channel(double gain_threshold) {
    return {SchemeKind::channel_aware, 0.0, gain_threshold, {}};
  }
  static AccessScheme exhaustive_search(std::vector<double> grid) {
    return {SchemeKind::exhaustive, 0.0, 0.0, std::move(grid)};
  }
};

ActiveSet apply(const AccessScheme& scheme, const Snapshot& snap, const NetworkConfig& cfg);

// Same as apply but reuses precomputed estimated SIRs (required for
// sir_threshold; ignored by the other kinds).
ActiveSet apply_with_estimates(const AccessScheme& scheme, const Snapshot& snap,
                               const LinkSirs& estimated);

// Exp(1) upper-quantile threshold: P(|h|^2 > threshold) = ps.
double channel_threshold_for_ps(double ps);

// 40 geometrically spaced candidates over [beta/100, 10 beta] plus G = 0.
std::vector<double> default_search_grid(double beta_linear);

struct SearchCandidate {
  double g_linear = 0.0;
  double ase = 0.0;
  double ase_stderr = 0.0;
};

struct SearchResult {
  double g_best = 0.0;
  double ase_best = 0.0;
  std::vector<SearchCandidate> curve;  // one entry per grid candidate, ascending
};

// Empirical optimum over the candidate grid: Monte Carlo ASE of the
// sir_threshold scheme per candidate on common random numbers (one shared seed
// base), argmax with ties broken toward the smaller threshold. Defined with
// the Monte Carlo engine in harness.cpp.
SearchResult search_threshold(const std::vector<double>& grid, const NetworkConfig& cfg,
                              double density, double beta_linear, int n_realizations,
                              std::uint64_t seed, int n_threads = 0);

}  // namespace d2d
