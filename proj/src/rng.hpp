#pragma once

#include <cstdint>
#include <vector>

namespace xtruct {

// splitmix64: tiny, seedable, identical output on every platform. All model
// randomness (reservoirs, generation, sampling) flows through this so a seed
// pins byte-identical runs.
struct Rng {
  uint64_t state = 0x9e3779b97f4a7c15ULL;

  explicit Rng(uint64_t seed = 0) : state(seed + 0x9e3779b97f4a7c15ULL) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Unbiased draw in [0, n) via rejection.
  uint64_t below(uint64_t n) {
    if (n <= 1) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  double unit() { return double(next() >> 11) * (1.0 / 9007199254740992.0); }

  // Index drawn proportionally to weights (must be nonempty, sum > 0).
  std::size_t weighted(const std::vector<double>& w) {
    double total = 0;
    for (double x : w) total += x;
    double r = unit() * total;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (r < w[i]) return i;
      r -= w[i];
    }
    return w.size() - 1;
  }
};

inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

} // namespace xtruct
