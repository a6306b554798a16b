#include "d2d/random.hpp"

#include <cmath>
#include <stdexcept>

namespace d2d {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t avalanche(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t h = avalanche(a + kGolden);
  h = avalanche(h ^ (b + kGolden + (h << 6) + (h >> 2)));
  return h;
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix_seed(mix_seed(a, b), c);
}

std::uint64_t RandomStream::next_u64() {
  state_ += kGolden;
  return avalanche(state_);
}

double RandomStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::unit_exponential() {
  // u in [0,1) so the argument of log1p stays in (-1, 0].
  return -std::log1p(-uniform01());
}

long RandomStream::poisson_inversion(double mean) {
  double p = std::exp(-mean);
  double cum = p;
  const double u = uniform01();
  long k = 0;
  while (u > cum && k < 100000) {
    ++k;
    p *= mean / static_cast<double>(k);
    cum += p;
  }
  return k;
}

long RandomStream::poisson(double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean))
    throw std::invalid_argument("RandomStream::poisson: mean must be finite and >= 0");
  long total = 0;
  // Poisson(a + b) = Poisson(a) + Poisson(b) with independent draws.
  while (mean > 50.0) {
    total += poisson_inversion(50.0);
    mean -= 50.0;
  }
  return total + poisson_inversion(mean);
}

}  // namespace d2d
