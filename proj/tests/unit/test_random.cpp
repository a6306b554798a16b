#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "d2d/random.hpp"
#include "test_util.hpp"

using namespace d2d;

TEST_CASE("uniform01 stays in [0,1) and streams are reproducible") {
  RandomStream a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 10000; ++i) {
    const double u = a.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(u == b.uniform01());
    if (u != c.uniform01()) differs = true;
  }
  CHECK(differs);
}

TEST_CASE("mix_seed separates nearby tuples") {
  CHECK(mix_seed(1, 0) != mix_seed(0, 1));
  CHECK(mix_seed(1, 2, 3) != mix_seed(1, 3, 2));
  CHECK(mix_seed(0, 0) != mix_seed(0, 1));
}

TEST_CASE("unit exponential: mean within 1% and KS against Exp(1)") {
  RandomStream rng(777);
  const std::size_t n = 100000;
  std::vector<double> x(n);
  double sum = 0.0;
  for (auto& v : x) {
    v = rng.unit_exponential();
    CHECK(v >= 0.0);
    sum += v;
  }
  CHECK(std::abs(sum / n - 1.0) < 0.01);

  std::sort(x.begin(), x.end());
  double d_stat = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double cdf = 1.0 - std::exp(-x[i]);
    d_stat = std::max(d_stat, std::abs(cdf - (i + 1.0) / n));
    d_stat = std::max(d_stat, std::abs(cdf - static_cast<double>(i) / n));
  }
  CHECK(d_stat < test_util::ks_critical_001(n));
}

TEST_CASE("poisson: mean and chi-square goodness of fit") {
  const double mean = 2e-5 * M_PI * 500.0 * 500.0;  // 15.707...
  RandomStream rng(2024);
  const int n = 10000;
  std::map<long, long> hist;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const long k = rng.poisson(mean);
    ++hist[k];
    sum += static_cast<double>(k);
  }
  CHECK(std::abs(sum / n - mean) < 3.0 * std::sqrt(mean / n));

  // Bin the support, merging the tails so every expected count is >= 5.
  std::vector<double> expected;
  std::vector<double> observed;
  double p = std::exp(-mean);
  double exp_acc = 0.0, obs_acc = 0.0;
  for (long k = 0; k <= 60; ++k) {
    if (k > 0) p *= mean / static_cast<double>(k);
    exp_acc += n * p;
    const auto it = hist.find(k);
    obs_acc += it == hist.end() ? 0.0 : static_cast<double>(it->second);
    if (exp_acc >= 5.0) {
      expected.push_back(exp_acc);
      observed.push_back(obs_acc);
      exp_acc = obs_acc = 0.0;
    }
  }
  // Remaining tail mass.
  double tail_obs = obs_acc;
  for (const auto& [k, c] : hist)
    if (k > 60) tail_obs += static_cast<double>(c);
  expected.back() += n - [&] {
    double s = 0.0;
    for (const double e : expected) s += e;
    return s;
  }();
  observed.back() += tail_obs;

  double chi2 = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const double d = observed[i] - expected[i];
    chi2 += d * d / expected[i];
  }
  const double df = static_cast<double>(expected.size()) - 1.0;
  CHECK(chi2 < test_util::chi2_quantile(df, 0.99));
}

TEST_CASE("poisson large mean uses additive splitting correctly") {
  RandomStream rng(5);
  const double mean = 700.0;
  const int n = 4000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double k = static_cast<double>(rng.poisson(mean));
    sum += k;
    sum_sq += k * k;
  }
  const double m = sum / n;
  const double var = sum_sq / n - m * m;
  CHECK(std::abs(m - mean) < 3.0 * std::sqrt(mean / n));
  CHECK(var == doctest::Approx(mean).epsilon(0.1));
}
