#pragma once

#include <cstdint>

namespace d2d {

// Mixes seed components into a decorrelated stream seed. Streams derived from
// distinct (seed, index) tuples are independent for Monte Carlo purposes.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c);

// splitmix64 stream with inversion samplers. All sampling is fully specified
// here (no std:: distributions) so that seeded runs are bit-reproducible
// across platforms.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01();

  // Unit-mean exponential by inversion.
  double unit_exponential();

  // Exact Poisson sampling: plain inversion for small means, additive
  // splitting into blocks for large means.
  long poisson(double mean);

 private:
  long poisson_inversion(double mean);

  std::uint64_t state_;
};

}  // namespace d2d
