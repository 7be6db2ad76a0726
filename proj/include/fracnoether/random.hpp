#pragma once

// Platform-stable random inputs. std::uniform_real_distribution is
// implementation-defined, so uniforms are built from raw mt19937_64 output.

#include <cstdint>
#include <random>

#include "fracnoether/circle_function.hpp"

namespace fracnoether {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

/// Random real trig polynomial with coefficients uniform in the unit square,
/// damped by (1+|k|)^{-decay}.
inline CircleFunction random_trig_polynomial(Rng& rng, int bandwidth, int components = 1,
                                             double decay = 0.0, bool zero_mean = false) {
  CircleFunction u(bandwidth, components);
  for (int j = 0; j < components; ++j) {
    if (!zero_mean) u.set_mode(j, 0, rng.uniform(-1.0, 1.0));
    for (int k = 1; k <= bandwidth; ++k) {
      const double w = std::pow(1.0 + k, -decay);
      const double re = rng.uniform(-1.0, 1.0);
      const double im = rng.uniform(-1.0, 1.0);
      u.set_mode(j, k, w * Complex(re, im));
    }
  }
  return u;
}

}  // namespace fracnoether
