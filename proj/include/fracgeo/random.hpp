#pragma once

#include "fracgeo/core.hpp"

#include <cstdint>
#include <random>

namespace fracgeo {

/// Seeded generator. Identical (seed, stream) pairs give bit-identical
/// sequences: the engine and seed_seq are fully specified by the standard and
/// the floating-point conversions below do not go through <random>
/// distributions (whose algorithms are implementation-defined).
class RandomSource {
 public:
  RandomSource(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32), 0x9e3779b9u};
    engine_.seed(seq);
  }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  /// Derived source for a sub-stream; used to keep Monte-Carlo blocks
  /// independent of the thread layout.
  RandomSource substream(std::uint64_t index) const {
    return RandomSource(seed_, stream_ * 0x100000001b3ull + index + 1);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  template <int N>
  Vec<N> unit_vector() {
    if constexpr (N == 2) {
      const double phi = 2.0 * std::numbers::pi * uniform();
      return Vec<2>(std::cos(phi), std::sin(phi));
    } else {
      const double z = 2.0 * uniform() - 1.0;
      const double phi = 2.0 * std::numbers::pi * uniform();
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      return Vec<3>(r * std::cos(phi), r * std::sin(phi), z);
    }
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace fracgeo
