#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace skig::util {

// splitmix64 step; used for seeding and for deriving independent stream seeds.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Order-sensitive combination of a seed with substream indices. Gives each
// (run, cell, trial)-style tuple its own reproducible stream.
inline uint64_t derive_seed(uint64_t seed, std::initializer_list<uint64_t> path) {
  uint64_t state = seed;
  uint64_t out = splitmix64(state);
  for (uint64_t part : path) {
    state = out ^ (part + 0x9e3779b97f4a7c15ULL);
    out = splitmix64(state);
  }
  return out;
}

// xoshiro256++ — small, fast, portable across platforms (unlike the std
// distributions, whose outputs are implementation-defined).
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0,1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Unbiased integer in [0, bound) via rejection.
  uint64_t below(uint64_t bound) {
    const uint64_t threshold = -bound % bound;
    while (true) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t state_[4];
};

// k distinct indices from [0, n), returned in ascending order (partial
// Fisher-Yates then sort, so the selection is uniform and replayable).
std::vector<size_t> sample_indices(size_t n, size_t k, Rng& rng);

}  // namespace skig::util
