#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

namespace fejer {

/// Counter-based deterministic generator (SplitMix64 mixing over a stream id
/// and a running counter). Every random draw in the library flows from one
/// experiment seed through named substreams, so reports are reproducible
/// regardless of evaluation order across checks.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::string_view stream)
      : base_(mix(seed ^ fnv1a(stream))), counter_(0) {}

  std::uint64_t next_u64() { return mix(base_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  /// Uniform double in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  /// Uniform integer in [0, n); n must be positive.
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  /// Standard normal via Box-Muller (two draws per call, no state carried).
  double next_gaussian() {
    double u1 = next_unit(), u2 = next_unit();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

 private:
  static std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) { h ^= c; h *= 1099511628211ULL; }
    return h;
  }
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t base_;
  std::uint64_t counter_;
};

}  // namespace fejer
