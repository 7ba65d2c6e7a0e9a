#pragma once

#include <cmath>

#include "mainprob/gravity.hpp"

namespace mainprob {

/// Wraps an angle to (-pi, pi].
inline double wrap_pi(double angle) {
  double w = std::remainder(angle, kTwoPi);
  if (w <= -kPi) w += kTwoPi;
  return w;
}

/// Wraps an angle to [0, 2 pi).
inline double wrap_two_pi(double angle) {
  double w = std::fmod(angle, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w -= kTwoPi;
  return w;
}

/// Returns the representative of `angle` closest to `reference`, so that a
/// sampled angle series can be made continuous.
inline double unwrap_near(double angle, double reference) {
  return reference + wrap_pi(angle - reference);
}

/// Signed smallest difference a - b of two angles.
inline double angle_difference(double a, double b) { return wrap_pi(a - b); }

}  // namespace mainprob
