#pragma once

#include <cstdint>

#include "adisc/rational.hpp"

namespace adisc {

// splitmix64: platform-independent deterministic stream for all seeded sweeps.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  uint64_t next_below(uint64_t n) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return v % n;
  }

  int64_t next_int(int64_t lo, int64_t hi) {  // inclusive range
    return lo + static_cast<int64_t>(next_below(static_cast<uint64_t>(hi - lo + 1)));
  }

  // rational with denominator 10^6 in [0, 1)
  Rat next_rat_millionth() { return Rat(static_cast<int64_t>(next_below(1000000)), 1000000); }

  // rational in [lo, hi] on a grid of (hi-lo)/10^6 steps
  Rat next_rat(const Rat& lo, const Rat& hi) {
    return lo + (hi - lo) * next_rat_millionth();
  }

  double next_double01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

}  // namespace adisc
