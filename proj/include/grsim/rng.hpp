#pragma once

#include <cstdint>

namespace grsim {

/// SplitMix64. Chosen as the repo-wide PRNG because the whole stream is
/// three lines of integer arithmetic, trivially reproducible in any
/// language (see README "Determinism").
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 mantissa bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). Derived from next_double so the stream
  /// consumption is one draw per call regardless of n.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(next_double() * static_cast<double>(n));
  }

 private:
  std::uint64_t state_;
};

/// Salt applied to a topology seed to derive the pair-sampling stream,
/// so pair choices are independent of node placement draws.
inline constexpr std::uint64_t kPairStreamSalt = 0xC2B2AE3D27D4EB4FULL;

}  // namespace grsim
