#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "d2d/access.hpp"
#include "d2d/config.hpp"

namespace d2d {

enum class ThresholdSource { fixed, unconditional_optimal, conditional_optimal };

// Scheme descriptor inside an experiment plan; resolved to a concrete
// AccessScheme per (lambda, beta) point before the realization loop.
struct SchemeSpec {
  SchemeKind kind = SchemeKind::no_ac;
  ThresholdSource source = ThresholdSource::fixed;
  double fixed_g_linear = 0.0;               // sir_threshold with a fixed value
  std::vector<double> search_grid_override;  // exhaustive; empty selects the default grid

  bool operator==(const SchemeSpec&) const = default;

  std::string id() const;

  static SchemeSpec no_ac() { return {SchemeKind::no_ac, ThresholdSource::fixed, 0.0, {}}; }
  static SchemeSpec channel_aware() {
    return {SchemeKind::channel_aware, ThresholdSource::fixed, 0.0, {}};
  }
  static SchemeSpec sir_fixed(double g_linear) {
    return {SchemeKind::sir_threshold, ThresholdSource::fixed, g_linear, {}};
  }
  static SchemeSpec sir_unconditional() {
    return {SchemeKind::sir_threshold, ThresholdSource::unconditional_optimal, 0.0, {}};
  }
  static SchemeSpec sir_conditional() {
    return {SchemeKind::sir_threshold, ThresholdSource::conditional_optimal, 0.0, {}};
  }
  static SchemeSpec exhaustive() {
    return {SchemeKind::exhaustive, ThresholdSource::fixed, 0.0, {}};
  }
};

struct ExperimentPlan {
  NetworkConfig cfg;
  std::vector<SchemeSpec> schemes;
  std::vector<double> density_sweep;   // lambda values, per m^2
  std::vector<double> beta_sweep_db;   // target SIR values, dB
  int n_realizations = 20000;
  std::uint64_t master_seed = 1;
  int n_threads = 0;  // 0 selects hardware concurrency

  bool operator==(const ExperimentPlan&) const = default;
};

// Aggregates for one (scheme, lambda, beta) point. Coverage is conditional on
// being active (pooled over realizations); for no_ac that coincides with the
// coverage of all links.
struct MetricsReport {
  std::string scheme_id;
  double lambda = 0.0;
  double beta_db = 0.0;
  double g_used_linear = 0.0;  // 0 when the scheme applies no SIR threshold
  double ps_analytic = 1.0;    // model access probability at the threshold used
  double empirical_ps = 1.0;
  double coverage_prob = 0.0;
  double ase = 0.0;           // bits/s/Hz/m^2
  double avg_sum_rate = 0.0;  // bits/s/Hz
  double coverage_stderr = 0.0;
  double ase_stderr = 0.0;
  double rate_stderr = 0.0;
  double ps_stderr = 0.0;
  int n_realizations = 0;
  std::uint64_t seed = 0;

  bool operator==(const MetricsReport&) const = default;
};

// A point where every realization produced zero active links; carries the
// access-probability estimate observed before giving up.
class DegeneratePointError : public std::runtime_error {
 public:
  DegeneratePointError(const std::string& what, double empirical_ps)
      : std::runtime_error(what), empirical_ps_(empirical_ps) {}
  double empirical_ps() const { return empirical_ps_; }

 private:
  double empirical_ps_;
};

struct PointFailure {
  std::string scheme_id;
  double lambda = 0.0;
  double beta_db = 0.0;
  std::string message;
};

struct SweepResult {
  std::vector<MetricsReport> reports;
  std::vector<PointFailure> failures;
};

struct ResolvedScheme {
  AccessScheme scheme;
  double g_used_linear = 0.0;
  double ps_analytic = 1.0;
};

// Turns a descriptor into a concrete scheme at a sweep point, computing
// optimal thresholds where the source asks for them. The channel-aware
// threshold targets the unconditional optimal access probability so that the
// comparison runs at equal average active density.
ResolvedScheme resolve_scheme(const SchemeSpec& spec, const NetworkConfig& cfg,
                              double lambda, double beta_linear);

// Monte Carlo estimate over n_realizations independent snapshots. Realization
// streams derive from (seed, realization index); metrics pool links whose
// transmitter lies inside the cell. Deterministic for fixed inputs regardless
// of n_threads.
MetricsReport run_point(const NetworkConfig& cfg, const SchemeSpec& spec, double lambda,
                        double beta_linear, int n_realizations, std::uint64_t seed,
                        int n_threads = 0);

// Cartesian product of (lambda, beta) x schemes. Schemes at the same point
// share the point seed (common random numbers); per-point errors are collected
// without aborting the rest of the sweep.
SweepResult run_sweep(const ExperimentPlan& plan);

}  // namespace d2d
