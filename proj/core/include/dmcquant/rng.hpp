#pragma once

#include <cstdint>

namespace dmcquant {

/// Small self-contained PRNG (xoshiro256**), seeded through splitmix64.
/// Used instead of <random> engines so that sampled values are identical
/// across standard libraries and so per-frame streams can be derived cheaply.
class Rng {
 public:
  explicit Rng(uint64_t seed) { reseed(seed); }

  /// Independent stream derived from (seed, stream): used for per-frame RNG.
  Rng(uint64_t seed, uint64_t stream) { reseed(splitmix(seed) ^ splitmix(stream * 0x9E3779B97F4A7C15ull + 1)); }

  void reseed(uint64_t seed) {
    uint64_t x = seed;
    for (auto& w : s_) {
      x += 0x9E3779B97F4A7C15ull;
      w = splitmix(x);
    }
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n), n > 0.
  uint64_t next_below(uint64_t n) {
    // rejection sampling on the top bits; unbiased
    const uint64_t threshold = (0ull - n) % n;
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

 private:
  static uint64_t splitmix(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  uint64_t s_[4];
};

inline constexpr uint64_t kDefaultSeed = 1729;

}  // namespace dmcquant
