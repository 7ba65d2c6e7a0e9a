#pragma once

// Hand-rolled generators for property tests. Seeds are fixed so failures
// reproduce.

#include <cmath>
#include <cstdint>
#include <random>

#include "mainprob/angles.hpp"
#include "mainprob/elements.hpp"

namespace testing {

using namespace mainprob;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double angle() { return uniform(-kPi, kPi); }

  /// Inclination in [1, 179] degrees, at least `guard_deg` away from the
  /// critical values.
  double inclination(double guard_deg = 1.0) {
    for (;;) {
      const double deg = uniform(1.0, 179.0);
      if (std::abs(deg - 63.4349488) > guard_deg && std::abs(deg - 116.5650512) > guard_deg) {
        return deg * kDeg;
      }
    }
  }

  /// Elliptic elements with perigee above 6500 km.
  KeplerianElements elements(double e_lo = 1e-6, double e_hi = 0.9) {
    KeplerianElements k;
    k.e = e_lo < 1e-3 && uniform(0.0, 1.0) < 0.5 ? log_uniform(e_lo, 1e-2)
                                                  : uniform(std::max(e_lo, 1e-3), e_hi);
    const double rp = uniform(6500.0, 12000.0);
    k.a = std::min(rp / (1.0 - k.e), 60000.0);
    k.inc = inclination();
    k.raan = uniform(0.0, kTwoPi);
    k.argp = uniform(0.0, kTwoPi);
    k.anomaly = uniform(0.0, kTwoPi);
    k.kind = AnomalyKind::Mean;
    return k;
  }

 private:
  std::mt19937_64 rng_;
};

inline double rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

}  // namespace testing
