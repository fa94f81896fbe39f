#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "entroplex/matrix.hpp"

namespace entroplex {

// Deterministic variate stream built on splitmix64. Normals use Box-Muller,
// so the distribution (not just the bitstream) is pinned down by this file.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), state_(seed) {}

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal, pairs cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    spare_ = mag * std::sin(2.0 * std::numbers::pi * u2);
    has_spare_ = true;
    return mag * std::cos(2.0 * std::numbers::pi * u2);
  }

  Complex complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

  // Independent child stream for sweeps: (seed, index) mixing keeps
  // per-instance results order-independent.
  RandomSource child(std::uint64_t index) const {
    return RandomSource(mix(seed_ ^ (0x9e3779b97f4a7c15ULL * (index + 1))));
  }

  std::uint64_t seed() const { return seed_; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() {
    state_ = mix(state_);
    return state_;
  }

  std::uint64_t seed_;
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline ComplexMatrix ginibre_matrix(int rows, int cols, RandomSource& rng) {
  ComplexMatrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = rng.complex_normal();
  return g;
}

}  // namespace entroplex
