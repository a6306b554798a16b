#include "d2d/harness.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "d2d/analytic.hpp"
#include "d2d/random.hpp"
#include "d2d/sir.hpp"

namespace d2d {

namespace {

// Pairwise tree reduction in index order; the aggregate is bit-identical no
// matter how the realizations were distributed over threads.
double tree_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return tree_sum(v, lo, mid) + tree_sum(v, mid, hi);
}

double tree_sum(const std::vector<double>& v) { return tree_sum(v, 0, v.size()); }

int effective_threads(int n_threads, int n_work) {
  int t = n_threads > 0 ? n_threads
                        : static_cast<int>(std::thread::hardware_concurrency());
  if (t < 1) t = 1;
  return std::min(t, std::max(1, n_work));
}

// Runs body(i) for i in [0, n) split into contiguous chunks, one async task
// per chunk. Worker exceptions propagate through the futures.
template <typename Body>
void parallel_realizations(int n, int n_threads, const Body& body) {
  const int threads = effective_threads(n_threads, n);
  if (threads == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  const int chunk = (n + threads - 1) / threads;
  std::vector<std::future<void>> futures;
  futures.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    const int begin = t * chunk;
    const int end = std::min(n, begin + chunk);
    if (begin >= end) break;
    futures.push_back(std::async(std::launch::async, [&body, begin, end] {
      for (int i = begin; i < end; ++i) body(i);
    }));
  }
  for (auto& f : futures) f.get();
}

struct PerRealization {
  std::vector<double> pairs;
  std::vector<double> active;
  std::vector<double> covered;
  std::vector<double> ase;
  std::vector<double> rate;

  explicit PerRealization(int n)
      : pairs(n), active(n), covered(n), ase(n), rate(n) {}
};

double sample_stddev(const std::vector<double>& v, double mean) {
  if (v.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  std::vector<double> sq(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double d = v[i] - mean;
    sq[i] = d * d;
  }
  return std::sqrt(tree_sum(sq) / static_cast<double>(v.size() - 1));
}

// Standard error of a pooled ratio sum(num)/sum(den) via the linearized
// residuals d_i = num_i - ratio * den_i.
double ratio_stderr(const std::vector<double>& num, const std::vector<double>& den,
                    double ratio_value, double den_total) {
  const std::size_t n = num.size();
  if (n < 2 || den_total <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = num[i] - ratio_value * den[i];
    sq[i] = d * d;
  }
  const double sd = std::sqrt(tree_sum(sq) / static_cast<double>(n - 1));
  return sd * std::sqrt(static_cast<double>(n)) / den_total;
}

void check_point_args(const NetworkConfig& cfg, double lambda, double beta_linear,
                      int n_realizations) {
  validate(cfg);
  if (!(lambda > 0.0)) throw std::invalid_argument("run_point: lambda must be > 0");
  if (!(beta_linear > 0.0)) throw std::invalid_argument("run_point: beta must be > 0");
  if (n_realizations < 1)
    throw std::invalid_argument("run_point: n_realizations must be >= 1");
}

}  // namespace

std::string SchemeSpec::id() const {
  switch (kind) {
    case SchemeKind::no_ac:
      return "no_ac";
    case SchemeKind::channel_aware:
      return "channel_aware";
    case SchemeKind::sir_threshold:
      switch (source) {
        case ThresholdSource::fixed:
          return "sir_fixed";
        case ThresholdSource::unconditional_optimal:
          return "sir_unconditional";
        case ThresholdSource::conditional_optimal:
          return "sir_conditional";
      }
      return "sir_fixed";
    case SchemeKind::exhaustive:
      return "exhaustive";
  }
  return "unknown";
}

ResolvedScheme resolve_scheme(const SchemeSpec& spec, const NetworkConfig& cfg,
                              double lambda, double beta_linear) {
  NetworkConfig cfg_l = cfg;
  cfg_l.d2d_density_per_m2 = lambda;
  switch (spec.kind) {
    case SchemeKind::no_ac:
      return {AccessScheme::no_access_control(), 0.0, 1.0};
    case SchemeKind::channel_aware: {
      const double ps = optimal_unconditional(beta_linear, cfg_l, lambda).ps_star;
      return {AccessScheme::channel(channel_threshold_for_ps(ps)), 0.0, ps};
    }
    case SchemeKind::sir_threshold: {
      double g = 0.0;
      double ps = 1.0;
      switch (spec.source) {
        case ThresholdSource::fixed:
          g = spec.fixed_g_linear;
          ps = access_probability(g, cfg_l, lambda);
          break;
        case ThresholdSource::unconditional_optimal: {
          const ThresholdSolution sol = optimal_unconditional(beta_linear, cfg_l, lambda);
          g = sol.g_star;
          ps = sol.ps_star;
          break;
        }
        case ThresholdSource::conditional_optimal: {
          const ThresholdSolution sol = optimal_conditional(beta_linear, cfg_l, lambda);
          g = sol.g_star;
          ps = sol.ps_star;
          break;
        }
      }
      return {AccessScheme::sir(g), g, ps};
    }
    case SchemeKind::exhaustive:
      throw std::invalid_argument(
          "resolve_scheme: exhaustive scheme is resolved by search_threshold");
  }
  throw std::invalid_argument("resolve_scheme: unknown scheme kind");
}

MetricsReport run_point(const NetworkConfig& cfg, const SchemeSpec& spec, double lambda,
                        double beta_linear, int n_realizations, std::uint64_t seed,
                        int n_threads) {
  check_point_args(cfg, lambda, beta_linear, n_realizations);
  if (spec.kind == SchemeKind::exhaustive)
    throw std::invalid_argument("run_point: exhaustive scheme requires search_threshold");

  NetworkConfig cfg_l = cfg;
  cfg_l.d2d_density_per_m2 = lambda;
  const ResolvedScheme resolved = resolve_scheme(spec, cfg, lambda, beta_linear);
  const double cell_area = M_PI * cfg.cell_radius_m * cfg.cell_radius_m;
  const double log_rate_at_beta = std::log2(1.0 + beta_linear);

  PerRealization acc(n_realizations);
  parallel_realizations(n_realizations, n_threads, [&](int i) {
    RandomStream rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    const Snapshot snap = sample_snapshot(cfg_l, rng);
    const LinkSirs est = estimated_sirs(snap, cfg_l);
    const ActiveSet act = apply_with_estimates(resolved.scheme, snap, est);
    const LinkSirs real = realized_sirs(snap, cfg_l, act);
    long pairs = 0, active = 0, covered = 0;
    double rate = 0.0;
    for (std::size_t k = 0; k < snap.pair_count(); ++k) {
      if (!link_in_cell(snap, cfg_l, k)) continue;
      ++pairs;
      if (!act.active(k)) continue;
      ++active;
      const double sir = real.values[k];
      if (sir > beta_linear) ++covered;
      rate += std::log2(1.0 + sir);
    }
    acc.pairs[i] = static_cast<double>(pairs);
    acc.active[i] = static_cast<double>(active);
    acc.covered[i] = static_cast<double>(covered);
    acc.ase[i] = static_cast<double>(covered) * log_rate_at_beta / cell_area;
    acc.rate[i] = rate;
  });

  const double n = static_cast<double>(n_realizations);
  const double pairs_total = tree_sum(acc.pairs);
  const double active_total = tree_sum(acc.active);
  const double covered_total = tree_sum(acc.covered);
  const double empirical_ps = pairs_total > 0.0 ? active_total / pairs_total : 0.0;
  if (active_total <= 0.0)
    throw DegeneratePointError(
        "run_point: no active link in any realization (scheme " + spec.id() + ")",
        empirical_ps);

  MetricsReport rep;
  rep.scheme_id = spec.id();
  rep.lambda = lambda;
  rep.beta_db = linear_to_db(beta_linear);
  rep.g_used_linear = resolved.g_used_linear;
  rep.ps_analytic = resolved.ps_analytic;
  rep.empirical_ps = empirical_ps;
  rep.coverage_prob = covered_total / active_total;
  rep.ase = tree_sum(acc.ase) / n;
  rep.avg_sum_rate = tree_sum(acc.rate) / n;
  rep.ase_stderr = sample_stddev(acc.ase, rep.ase) / std::sqrt(n);
  rep.rate_stderr = sample_stddev(acc.rate, rep.avg_sum_rate) / std::sqrt(n);
  rep.coverage_stderr = ratio_stderr(acc.covered, acc.active, rep.coverage_prob, active_total);
  rep.ps_stderr = ratio_stderr(acc.active, acc.pairs, empirical_ps, pairs_total);
  rep.n_realizations = n_realizations;
  rep.seed = seed;
  return rep;
}

SweepResult run_sweep(const ExperimentPlan& plan) {
  validate(plan.cfg);
  if (plan.schemes.empty()) throw std::invalid_argument("run_sweep: no schemes");
  if (plan.density_sweep.empty()) throw std::invalid_argument("run_sweep: empty density sweep");
  if (plan.beta_sweep_db.empty()) throw std::invalid_argument("run_sweep: empty beta sweep");
  if (plan.n_realizations < 1)
    throw std::invalid_argument("run_sweep: n_realizations must be >= 1");

  SweepResult result;
  std::uint64_t point_index = 0;
  for (const double lambda : plan.density_sweep) {
    for (const double beta_db : plan.beta_sweep_db) {
      const double beta = db_to_linear(beta_db);
      // The point seed is shared by every scheme at this (lambda, beta):
      // common random numbers across the compared schemes.
      const std::uint64_t point_seed = mix_seed(plan.master_seed, point_index);
      for (const SchemeSpec& spec : plan.schemes) {
        try {
          MetricsReport rep;
          if (spec.kind == SchemeKind::exhaustive) {
            const std::vector<double> grid = spec.search_grid_override.empty()
                                                 ? default_search_grid(beta)
                                                 : spec.search_grid_override;
            const SearchResult search = search_threshold(
                grid, plan.cfg, lambda, beta, plan.n_realizations, point_seed,
                plan.n_threads);
            rep = run_point(plan.cfg, SchemeSpec::sir_fixed(search.g_best), lambda, beta,
                            plan.n_realizations, point_seed, plan.n_threads);
            rep.scheme_id = spec.id();
          } else {
            rep = run_point(plan.cfg, spec, lambda, beta, plan.n_realizations, point_seed,
                            plan.n_threads);
          }
          result.reports.push_back(std::move(rep));
        } catch (const std::exception& e) {
          result.failures.push_back({spec.id(), lambda, beta_db, e.what()});
        }
      }
      ++point_index;
    }
  }
  return result;
}

SearchResult search_threshold(const std::vector<double>& grid, const NetworkConfig& cfg,
                              double density, double beta_linear, int n_realizations,
                              std::uint64_t seed, int n_threads) {
  check_point_args(cfg, density, beta_linear, n_realizations);
  if (grid.empty()) throw std::invalid_argument("search_threshold: empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 0.0) throw std::invalid_argument("search_threshold: negative threshold");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw std::invalid_argument("search_threshold: grid must be strictly increasing");
  }

  NetworkConfig cfg_l = cfg;
  cfg_l.d2d_density_per_m2 = density;
  const std::size_t m = grid.size();
  const double cell_area = M_PI * cfg.cell_radius_m * cfg.cell_radius_m;
  const double log_rate_at_beta = std::log2(1.0 + beta_linear);

  // ase[c * n + i]: per-candidate, per-realization ASE terms.
  std::vector<double> ase(m * static_cast<std::size_t>(n_realizations), 0.0);

  parallel_realizations(n_realizations, n_threads, [&](int i) {
    RandomStream rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    const Snapshot snap = sample_snapshot(cfg_l, rng);
    const std::size_t n_pairs = snap.pair_count();
    if (n_pairs == 0) return;  // zero ASE for every candidate
    const detail::SirWorkspace ws = detail::compute_sir_workspace(snap, cfg_l);

    // Candidate activation index: link k is active at candidate c iff
    // grid[c] < estimated SIR (strict), i.e. for all c below t_k.
    std::vector<std::vector<std::uint32_t>> bucket(m);
    std::vector<std::uint8_t> measured(n_pairs);
    for (std::size_t k = 0; k < n_pairs; ++k) {
      measured[k] = link_in_cell(snap, cfg_l, k) ? 1 : 0;
      const auto it = std::lower_bound(grid.begin(), grid.end(), ws.estimated[k]);
      const std::size_t t_k = static_cast<std::size_t>(it - grid.begin());
      if (t_k > 0) bucket[t_k - 1].push_back(static_cast<std::uint32_t>(k));
    }

    // Sweep candidates from the largest threshold down, growing the active set
    // and folding each newly active transmitter into the interference tallies.
    std::vector<double> interference(n_pairs, 0.0);
    std::vector<std::uint32_t> active_links;
    active_links.reserve(n_pairs);
    for (std::size_t c = m; c-- > 0;) {
      for (const std::uint32_t l : bucket[c]) {
        for (std::size_t k = 0; k < n_pairs; ++k)
          if (k != l) interference[k] += ws.d2d(k, l);
        active_links.push_back(l);
      }
      long covered = 0;
      for (const std::uint32_t k : active_links) {
        if (!measured[k]) continue;
        const double sir = ws.signal[k] / (ws.cellular[k] + interference[k]);
        if (sir > beta_linear) ++covered;
      }
      ase[c * static_cast<std::size_t>(n_realizations) + static_cast<std::size_t>(i)] =
          static_cast<double>(covered) * log_rate_at_beta / cell_area;
    }
  });

  SearchResult result;
  result.curve.resize(m);
  const double n = static_cast<double>(n_realizations);
  for (std::size_t c = 0; c < m; ++c) {
    std::vector<double> column(ase.begin() + c * n_realizations,
                               ase.begin() + (c + 1) * n_realizations);
    const double mean = tree_sum(column) / n;
    result.curve[c] = {grid[c], mean, sample_stddev(column, mean) / std::sqrt(n)};
  }
  std::size_t best = 0;
  for (std::size_t c = 1; c < m; ++c)
    if (result.curve[c].ase > result.curve[best].ase) best = c;  // ties keep the smaller G
  result.g_best = result.curve[best].g_linear;
  result.ase_best = result.curve[best].ase;
  return result;
}

}  // namespace d2d
