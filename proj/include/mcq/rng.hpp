#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace mcq {

// All randomized code in the library draws from std::mt19937_64 through the
// helpers below; the raw 64-bit stream is specified, so a fixed seed gives
// identical output everywhere.
using Rng = std::mt19937_64;

// Uniform double in [0, 1), built from the top 53 bits of the stream.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

// Uniform point on the probability simplex (normalized exponentials).
inline std::vector<double> random_simplex(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  double total = 0.0;
  for (auto& x : v) {
    double u;
    do {
      u = uniform_unit(rng);
    } while (u == 0.0);
    x = -std::log(u);
    total += x;
  }
  for (auto& x : v) x /= total;
  return v;
}

}  // namespace mcq
