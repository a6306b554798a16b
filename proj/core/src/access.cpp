#include "d2d/access.hpp"

#include <cmath>
#include <stdexcept>

namespace d2d {

ActiveSet apply_with_estimates(const AccessScheme& scheme, const Snapshot& snap,
                               const LinkSirs& estimated) {
  const std::size_t n = snap.pair_count();
  ActiveSet out{std::vector<std::uint8_t>(n, 0)};
  switch (scheme.kind) {
    case SchemeKind::no_ac:
      for (std::size_t k = 0; k < n; ++k) out.active_flags[k] = 1;
      break;
    case SchemeKind::sir_threshold:
      if (estimated.values.size() != n)
        throw std::invalid_argument("apply: estimated SIRs missing or mismatched");
      for (std::size_t k = 0; k < n; ++k)
        out.active_flags[k] = estimated.values[k] > scheme.sir_threshold_linear ? 1 : 0;
      break;
    case SchemeKind::channel_aware:
      for (std::size_t k = 0; k < n; ++k)
        out.active_flags[k] = snap.fading(k, k + 1) > scheme.channel_gain_threshold ? 1 : 0;
      break;
    case SchemeKind::exhaustive:
      throw std::invalid_argument(
          "apply: exhaustive scheme requires search_threshold, not direct application");
  }
  return out;
}

ActiveSet apply(const AccessScheme& scheme, const Snapshot& snap, const NetworkConfig& cfg) {
  if (scheme.kind == SchemeKind::sir_threshold) {
    const LinkSirs est = estimated_sirs(snap, cfg);
    return apply_with_estimates(scheme, snap, est);
  }
  return apply_with_estimates(scheme, snap, LinkSirs{});
}

double channel_threshold_for_ps(double ps) {
  if (!(ps > 0.0 && ps <= 1.0))
    throw std::invalid_argument("channel_threshold_for_ps: ps must be in (0, 1]");
  return -std::log(ps);
}

std::vector<double> default_search_grid(double beta_linear) {
  if (!(beta_linear > 0.0))
    throw std::invalid_argument("default_search_grid: beta must be > 0");
  std::vector<double> grid;
  grid.reserve(41);
  grid.push_back(0.0);
  const double lo = beta_linear * 1e-2;
  const double ratio = std::pow(1e3, 1.0 / 39.0);
  double g = lo;
  for (int i = 0; i < 40; ++i) {
    grid.push_back(g);
    g *= ratio;
  }
  return grid;
}

}  // namespace d2d
