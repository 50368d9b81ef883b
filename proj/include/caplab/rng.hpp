#pragma once

#include <cstdint>

namespace caplab::rng {

// splitmix64. Hand-rolled so tables and sweeps are reproducible across
// standard libraries and across OpenMP thread counts (per-item streams are
// derived by index, independent of scheduling).
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n)
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  bool coin(double p_true) { return uniform() < p_true; }
};

// Derive a child seed for substream i of a master seed.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t i) {
  SplitMix64 s(seed ^ (0x632be59bd9b4e019ULL * (i + 1)));
  return s.next();
}

}  // namespace caplab::rng
