#pragma once

#include <array>
#include <cstdint>

namespace rainbow {

// All randomness in this project flows through one fixed, portable scheme:
//
//   * splitmix64 is the mixing/seeding primitive;
//   * xoshiro256** is the stream generator, seeded from four successive
//     splitmix64 outputs;
//   * substreams are split with derive_seed, e.g. the trial seed is
//     derive_seed(derive_seed(master_seed, r), trial_index) and coloring k
//     of a trial draws from derive_seed(trial_seed, k).
//
// Identical seeds therefore produce identical streams on every platform.

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic substream derivation.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t key) {
  std::uint64_t s = seed;
  std::uint64_t mixed = splitmix64_next(s);
  s = mixed ^ (key + 0x9e3779b97f4a7c15ULL);
  return splitmix64_next(s);
}

class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64_next(s);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Unbiased uniform draw from {0,...,bound-1} by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (-bound) % bound;
    for (;;) {
      const std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace rainbow
