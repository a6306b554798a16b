#include <benchmark/benchmark.h>

#include "d2d/access.hpp"
#include "d2d/analytic.hpp"
#include "d2d/harness.hpp"
#include "d2d/lambert.hpp"
#include "d2d/random.hpp"
#include "d2d/sir.hpp"
#include "d2d/snapshot.hpp"

namespace {

using namespace d2d;

NetworkConfig config_with_density(double lambda) {
  NetworkConfig cfg;
  cfg.d2d_density_per_m2 = lambda;
  return cfg;
}

void BM_SampleSnapshot(benchmark::State& state) {
  const NetworkConfig cfg = config_with_density(1e-5 * state.range(0));
  RandomStream rng(1);
  for (auto _ : state) {
    Snapshot snap = sample_snapshot(cfg, rng);
    benchmark::DoNotOptimize(snap);
  }
}
BENCHMARK(BM_SampleSnapshot)->Arg(2)->Arg(6)->Arg(10);

void BM_EstimatedSirs(benchmark::State& state) {
  const NetworkConfig cfg = config_with_density(1e-5 * state.range(0));
  RandomStream rng(2);
  const Snapshot snap = sample_snapshot(cfg, rng);
  for (auto _ : state) {
    LinkSirs est = estimated_sirs(snap, cfg);
    benchmark::DoNotOptimize(est);
  }
  state.SetComplexityN(static_cast<long>(snap.pair_count()));
}
BENCHMARK(BM_EstimatedSirs)->Arg(2)->Arg(6)->Arg(10);

void BM_LambertW0(benchmark::State& state) {
  double x = 1e-3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambert_w0(x));
    x = x < 1e8 ? x * 1.0001 : 1e-3;
  }
}
BENCHMARK(BM_LambertW0);

void BM_CoverageExact(benchmark::State& state) {
  const NetworkConfig cfg = config_with_density(6e-5);
  for (auto _ : state)
    benchmark::DoNotOptimize(coverage_prob_exact(db_to_linear(5.0), cfg, 6e-5));
}
BENCHMARK(BM_CoverageExact);

void BM_OptimalConditional(benchmark::State& state) {
  const NetworkConfig cfg = config_with_density(6e-5);
  for (auto _ : state)
    benchmark::DoNotOptimize(optimal_conditional(db_to_linear(5.0), cfg, 6e-5));
}
BENCHMARK(BM_OptimalConditional);

void BM_RunPoint(benchmark::State& state) {
  const NetworkConfig cfg = config_with_density(6e-5);
  for (auto _ : state) {
    MetricsReport rep = run_point(cfg, SchemeSpec::sir_conditional(), 6e-5,
                                  db_to_linear(5.0), 50, 9, 1);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_RunPoint)->Unit(benchmark::kMillisecond);

void BM_SearchThreshold(benchmark::State& state) {
  const NetworkConfig cfg = config_with_density(6e-5);
  const std::vector<double> grid = default_search_grid(db_to_linear(5.0));
  for (auto _ : state) {
    SearchResult sr = search_threshold(grid, cfg, 6e-5, db_to_linear(5.0), 50, 9, 1);
    benchmark::DoNotOptimize(sr);
  }
}
BENCHMARK(BM_SearchThreshold)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
