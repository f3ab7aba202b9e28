#pragma once

#include <cstdint>

namespace treestat {

// pcg32 (O'Neill's PCG XSH-RR 64/32). The algorithm is pinned here, not
// delegated to <random>, so that seeded runs produce identical draws on every
// platform and standard library.
class Pcg32 {
 public:
  Pcg32(std::uint64_t init_state, std::uint64_t init_seq) {
    inc_ = (init_seq << 1u) | 1u;
    state_ = 0;
    next_u32();
    state_ += init_state;
    next_u32();
  }

  std::uint32_t next_u32() {
    const std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    const auto rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
  }

  std::uint64_t next_u64() {
    const std::uint64_t hi = next_u32();
    const std::uint64_t lo = next_u32();
    return (hi << 32) | lo;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Unbiased uniform integer in [0, bound), bound >= 1.
  std::uint32_t next_below(std::uint32_t bound) {
    const std::uint32_t threshold = (-bound) % bound;
    for (;;) {
      const std::uint32_t r = next_u32();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
  std::uint64_t inc_;
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// A master seed plus the stream-derivation rule. stream(i) is a pure function
// of (seed, i); Monte-Carlo loops assign stream(i) to replicate i, so results
// do not depend on evaluation order or thread schedule.
struct RngSpec {
  std::uint64_t seed = 0;

  Pcg32 stream(std::uint64_t i) const {
    std::uint64_t s = seed ^ (0xD1B54A32D192ED03ULL * (i + 1));
    const std::uint64_t init_state = splitmix64(s);
    const std::uint64_t init_seq = splitmix64(s);
    return Pcg32(init_state, init_seq);
  }
};

}  // namespace treestat
