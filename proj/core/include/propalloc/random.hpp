#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace propalloc {

/// Seeded generator with distribution helpers whose output depends only on
/// the seed (std:: distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % n;
  }

  /// exp of a uniform draw in [log lo, log hi).
  double log_uniform(double lo, double hi) {
    const double a = std::log(lo);
    const double b = std::log(hi);
    return std::exp(a + (b - a) * uniform01());
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace propalloc
