#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "lorsim/minkowski.hpp"

namespace testutil {

using lorsim::Vec3;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Vec3 random_vec(std::mt19937_64& gen, double scale = 2.0) {
  std::uniform_real_distribution<double> d(-scale, scale);
  return {d(gen), d(gen), d(gen)};
}

// Future-pointing timelike vector: time component dominates the space part.
inline Vec3 random_timelike(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::uniform_real_distribution<double> pad(0.1, 1.5);
  const double a = d(gen), b = d(gen);
  return {std::sqrt(a * a + b * b) + pad(gen), a, b};
}

inline Vec3 random_spacelike(std::mt19937_64& gen) {
  for (;;) {
    const Vec3 v = random_vec(gen);
    if (lorsim::inner(v, v) > 0.1) return v;
  }
}

}  // namespace testutil
