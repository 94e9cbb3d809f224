#pragma once

// Deterministic, platform-independent random streams. Monte-Carlo estimators
// partition work into chunks; each chunk derives its own stream from
// (seed, chunk index), so results are bit-identical regardless of how chunks
// are scheduled across threads.

#include <cmath>
#include <cstdint>

namespace lctlab {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1]; safe inside logs.
  double next_open() { return 1.0 - next_double(); }

  // Uniform integer in [0, bound) without modulo bias.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
  }

  // Standard complex-normal pair via Box-Muller.
  void next_gaussian_pair(double& re, double& im) {
    const double u = next_open();
    const double v = next_double();
    const double radius = std::sqrt(-2.0 * std::log(u));
    re = radius * std::cos(6.283185307179586477 * v);
    im = radius * std::sin(6.283185307179586477 * v);
  }
};

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 mix(seed ^ (0x51ed270b9f0c5e4dULL + stream * 0x9e3779b97f4a7c15ULL));
  mix.next();
  return mix.next();
}

}  // namespace lctlab
