#pragma once

#include <cmath>
#include <numbers>

#include "mainprob/errors.hpp"

namespace mainprob {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kDeg = std::numbers::pi / 180.0;
inline constexpr double kSecondsPerDay = 86400.0;

/// Zonal J2 gravity model. Units: km, s.
struct GravityField {
  double mu = 398600.4415;   // km^3/s^2
  double Re = 6378.1363;     // km
  double J2 = 1.08262617e-3;

  void validate() const {
    if (!(mu > 0.0) || !(Re > 0.0) || !(J2 >= 0.0 && J2 < 0.1) ||
        !std::isfinite(mu) || !std::isfinite(Re)) {
      throw UsageError("gravity field requires mu > 0, Re > 0, 0 <= J2 < 0.1");
    }
  }
};

}  // namespace mainprob
