#pragma once

#include <cmath>
#include <cstdint>

namespace pfse {

/// Seedable, splittable pseudo-random generator (splitmix64 core).
///
/// Substreams derived with derive() are statistically independent of the
/// parent and of each other, so Monte-Carlo trials keyed by (seed, trial
/// index) can run in any order or in parallel and still reproduce bit-for-bit.
/// Uniform and normal sampling are implemented here rather than with
/// <random> distributions so results do not depend on the standard library.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : state_(mix(seed ^ 0x9E3779B97F4A7C15ull)) {}

  /// Independent substream for the given stream index.
  SplitRng derive(std::uint64_t stream) const {
    return SplitRng(mix(state_ + 0xA0761D6478BD642Full * (stream + 1)));
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  /// Uniform double in [0, 1) with 53 bits of randomness.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Box-Muller normal deviate (the spare value is cached).
  double normal(double mean, double stddev) {
    if (has_spare_) {
      has_spare_ = false;
      return mean + stddev * spare_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return mean + stddev * r * std::cos(a);
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
  }

  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace pfse
