#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "d2d/access.hpp"
#include "d2d/random.hpp"
#include "d2d/sir.hpp"

using namespace d2d;

namespace {

NetworkConfig reference_config(double lambda = 1e-4) {
  NetworkConfig cfg;
  cfg.d2d_density_per_m2 = lambda;
  return cfg;
}

Snapshot make_snapshot(Vec2 uplink, std::vector<Vec2> tx, std::vector<Vec2> rx,
                       std::vector<double> fading) {
  Snapshot snap;
  snap.uplink_position = uplink;
  snap.d2d_tx_positions = std::move(tx);
  snap.d2d_rx_positions = std::move(rx);
  snap.fading_to_rx = std::move(fading);
  return snap;
}

// Straight-line SIR restatement used as the oracle: no compensation tricks.
double oracle_sir(const Snapshot& snap, const NetworkConfig& cfg, std::size_t k,
                  const std::vector<bool>& active) {
  const double alpha = cfg.pathloss_exponent;
  const auto pl = [&](Vec2 a, Vec2 b) { return std::pow(distance(a, b), -alpha); };
  const double num = snap.fading(k, k + 1) * cfg.d2d_power_mw *
                     pl(snap.d2d_tx_positions[k], snap.d2d_rx_positions[k]);
  double den = snap.fading(k, 0) * cfg.cellular_power_mw *
               pl(snap.uplink_position, snap.d2d_rx_positions[k]);
  for (std::size_t l = 0; l < snap.pair_count(); ++l)
    if (l != k && active[l])
      den += snap.fading(k, l + 1) * cfg.d2d_power_mw *
             pl(snap.d2d_tx_positions[l], snap.d2d_rx_positions[k]);
  return num / den;
}

}  // namespace

TEST_CASE("single-pair estimated SIR reduces to the two-term ratio") {
  const NetworkConfig cfg = reference_config();
  // Receiver at the origin, its transmitter 50 m away, uplink user 500 m away.
  const Snapshot snap = make_snapshot({500.0, 0.0}, {{50.0, 0.0}}, {{0.0, 0.0}}, {1.0, 1.0});
  const LinkSirs est = estimated_sirs(snap, cfg);
  REQUIRE(est.values.size() == 1);
  CHECK(est.kind == SirKind::estimated);
  CHECK(est.values[0] == doctest::Approx(100.0).epsilon(1e-12));
}

TEST_CASE("zero direct-link fading gives zero SIR") {
  const NetworkConfig cfg = reference_config();
  const Snapshot snap = make_snapshot({500.0, 0.0}, {{50.0, 0.0}}, {{0.0, 0.0}}, {1.0, 0.0});
  CHECK(estimated_sirs(snap, cfg).values[0] == 0.0);
}

TEST_CASE("three-pair snapshot matches the direct-summation oracle") {
  const NetworkConfig cfg = reference_config();
  const Snapshot snap = make_snapshot(
      {120.0, -40.0},
      {{0.0, 0.0}, {200.0, 100.0}, {-150.0, 300.0}},
      {{50.0, 0.0}, {200.0, 150.0}, {-150.0, 250.0}},
      {0.7, 1.3, 0.2, 0.9,
       1.1, 0.4, 2.0, 0.6,
       0.5, 1.7, 0.8, 1.2});
  const LinkSirs est = estimated_sirs(snap, cfg);
  const std::vector<bool> all{true, true, true};
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(est.values[k] ==
          doctest::Approx(oracle_sir(snap, cfg, k, all)).epsilon(1e-12));
}

TEST_CASE("realized equals estimated when everyone is active") {
  const NetworkConfig cfg = reference_config();
  RandomStream rng(17);
  for (int i = 0; i < 20; ++i) {
    const Snapshot snap = sample_snapshot(cfg, rng);
    const LinkSirs est = estimated_sirs(snap, cfg);
    const LinkSirs real = realized_sirs(snap, cfg, ActiveSet::all_active(snap.pair_count()));
    REQUIRE(real.values.size() == est.values.size());
    CHECK(real.kind == SirKind::realized);
    for (std::size_t k = 0; k < est.values.size(); ++k)
      CHECK(real.values[k] == est.values[k]);  // identical summation path
  }
}

TEST_CASE("single active pair sees only the cellular interferer") {
  const NetworkConfig cfg = reference_config();
  RandomStream rng(23);
  Snapshot snap = sample_snapshot(cfg, rng);
  while (snap.pair_count() < 2) snap = sample_snapshot(cfg, rng);
  ActiveSet only{std::vector<std::uint8_t>(snap.pair_count(), 0)};
  only.active_flags[0] = 1;
  const LinkSirs real = realized_sirs(snap, cfg, only);
  const double alpha = cfg.pathloss_exponent;
  const double num = snap.fading(0, 1) * cfg.d2d_power_mw *
                     std::pow(distance(snap.d2d_tx_positions[0], snap.d2d_rx_positions[0]), -alpha);
  const double den = snap.fading(0, 0) * cfg.cellular_power_mw *
                     std::pow(distance(snap.uplink_position, snap.d2d_rx_positions[0]), -alpha);
  CHECK(real.values[0] == doctest::Approx(num / den).epsilon(1e-12));
}

TEST_CASE("thinning the interferer set never lowers a realized SIR") {
  const NetworkConfig cfg = reference_config(6e-5);
  RandomStream rng(29);
  for (int i = 0; i < 1000; ++i) {
    const Snapshot snap = sample_snapshot(cfg, rng);
    const std::size_t n = snap.pair_count();
    if (n < 2) continue;
    const LinkSirs est = estimated_sirs(snap, cfg);
    ActiveSet some{std::vector<std::uint8_t>(n, 0)};
    for (std::size_t k = 0; k < n; ++k) some.active_flags[k] = (rng.uniform01() < 0.5);
    const LinkSirs real = realized_sirs(snap, cfg, some);
    for (std::size_t k = 0; k < n; ++k) CHECK(real.values[k] >= est.values[k]);

    // Deactivate one more interferer; nobody's SIR may drop.
    ActiveSet fewer = some;
    bool flipped = false;
    for (std::size_t k = 0; k < n && !flipped; ++k)
      if (fewer.active_flags[k]) {
        fewer.active_flags[k] = 0;
        flipped = true;
      }
    if (!flipped) continue;
    const LinkSirs real_fewer = realized_sirs(snap, cfg, fewer);
    for (std::size_t k = 0; k < n; ++k) CHECK(real_fewer.values[k] >= real.values[k]);
  }
}

TEST_CASE("SIR depends on powers only through their ratio") {
  NetworkConfig cfg = reference_config();
  RandomStream rng(31);
  const Snapshot snap = sample_snapshot(cfg, rng);
  const LinkSirs base = estimated_sirs(snap, cfg);
  NetworkConfig scaled = cfg;
  scaled.cellular_power_mw *= 7.0;
  scaled.d2d_power_mw *= 7.0;
  const LinkSirs after = estimated_sirs(snap, scaled);
  for (std::size_t k = 0; k < base.values.size(); ++k)
    CHECK(after.values[k] == doctest::Approx(base.values[k]).epsilon(1e-12));
}

TEST_CASE("estimated SIR is invariant under rotation about the origin") {
  const NetworkConfig cfg = reference_config();
  RandomStream rng(37);
  Snapshot snap = sample_snapshot(cfg, rng);
  const LinkSirs base = estimated_sirs(snap, cfg);
  const double phi = 1.234;
  const double c = std::cos(phi), s = std::sin(phi);
  auto rotate = [&](Vec2 v) { return Vec2{c * v.x - s * v.y, s * v.x + c * v.y}; };
  Snapshot rotated = snap;
  rotated.uplink_position = rotate(snap.uplink_position);
  for (std::size_t k = 0; k < snap.pair_count(); ++k) {
    rotated.d2d_tx_positions[k] = rotate(snap.d2d_tx_positions[k]);
    rotated.d2d_rx_positions[k] = rotate(snap.d2d_rx_positions[k]);
  }
  const LinkSirs after = estimated_sirs(rotated, cfg);
  for (std::size_t k = 0; k < base.values.size(); ++k)
    CHECK(after.values[k] == doctest::Approx(base.values[k]).epsilon(1e-9));
}

TEST_CASE("coincident nodes are rejected") {
  const NetworkConfig cfg = reference_config();
  const Snapshot snap = make_snapshot({0.0, 0.0}, {{50.0, 0.0}}, {{0.0, 0.0}},
                                      {1.0, 1.0});  // uplink on top of the receiver
  CHECK_THROWS_AS(estimated_sirs(snap, cfg), std::invalid_argument);
}

TEST_CASE("workspace decomposition reproduces estimated SIRs bit for bit") {
  const NetworkConfig cfg = reference_config();
  RandomStream rng(41);
  for (int i = 0; i < 10; ++i) {
    const Snapshot snap = sample_snapshot(cfg, rng);
    const LinkSirs est = estimated_sirs(snap, cfg);
    const detail::SirWorkspace ws = detail::compute_sir_workspace(snap, cfg);
    REQUIRE(ws.estimated.size() == est.values.size());
    for (std::size_t k = 0; k < est.values.size(); ++k)
      CHECK(ws.estimated[k] == est.values[k]);
  }
}

TEST_CASE("snapshot metrics: empty set, strict coverage, exact rate") {
  const NetworkConfig cfg = reference_config();
  // SIR of exactly 100 against beta = 100 must not count as covered.
  const Snapshot snap = make_snapshot({500.0, 0.0}, {{50.0, 0.0}}, {{0.0, 0.0}}, {1.0, 1.0});
  ActiveSet none{std::vector<std::uint8_t>{0}};
  const SnapshotMetrics empty = snapshot_metrics(snap, cfg, none, 100.0);
  CHECK(empty.covered_active_count == 0);
  CHECK(empty.active_count == 0);
  CHECK(empty.sum_log_rate == 0.0);

  // Coverage uses strict inequality: a link sitting exactly at beta is out.
  const double sir = realized_sirs(snap, cfg, ActiveSet::all_active(1)).values[0];
  CHECK(sir == doctest::Approx(100.0).epsilon(1e-12));
  const SnapshotMetrics at_boundary =
      snapshot_metrics(snap, cfg, ActiveSet::all_active(1), sir);
  CHECK(at_boundary.active_count == 1);
  CHECK(at_boundary.covered_active_count == 0);
  const SnapshotMetrics below =
      snapshot_metrics(snap, cfg, ActiveSet::all_active(1), sir * (1.0 - 1e-12));
  CHECK(below.covered_active_count == 1);

  // One active link with realized SIR 3: rate is exactly log2(4) = 2.
  const Snapshot three = make_snapshot({500.0, 0.0}, {{50.0, 0.0}}, {{0.0, 0.0}},
                                       {100.0 / 3.0, 1.0});
  const SnapshotMetrics m = snapshot_metrics(three, cfg, ActiveSet::all_active(1), 1.0);
  CHECK(m.sum_log_rate == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(m.covered_active_count == 1);
}
