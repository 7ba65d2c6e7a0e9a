#pragma once

#include <cmath>

#include "mainprob/angles.hpp"
#include "mainprob/errors.hpp"
#include "mainprob/jet.hpp"

namespace mainprob {

inline constexpr double kKeplerTolerance = 1e-14;
inline constexpr int kKeplerMaxIterations = 50;

/// Solves E - e sin E = ell for elliptic e in [0, 1). The result lies in the
/// same revolution as ell: E - ell is the correction of the wrapped problem.
double solve_kepler(double ell, double e);

/// Residual E - e sin E - ell reduced to (-pi, pi].
inline double kepler_residual(double E, double e, double ell) {
  return wrap_pi(E - e * std::sin(E) - ell);
}

/// f - E for eccentric anomaly E, continuous in E: 2 atan(beta sinE / (1 - beta cosE))
/// with beta = e / (1 + sqrt(1 - e^2)).
inline double true_minus_eccentric(double E, double e) {
  const double beta = e / (1.0 + std::sqrt((1.0 - e) * (1.0 + e)));
  return 2.0 * std::atan2(beta * std::sin(E), 1.0 - beta * std::cos(E));
}

/// True anomaly in the same revolution as E.
inline double true_from_eccentric(double E, double e) {
  return E + true_minus_eccentric(E, e);
}

/// Eccentric anomaly from the true anomaly, same revolution.
inline double eccentric_from_true(double f, double e) {
  const double beta = e / (1.0 + std::sqrt((1.0 - e) * (1.0 + e)));
  return f - 2.0 * std::atan2(beta * std::sin(f), 1.0 + beta * std::cos(f));
}

/// Kepler's equation lifted to jets: the double solution is refined by
/// Newton steps on the full Taylor expansion (implicit differentiation).
inline Jet solve_kepler(const Jet& ell, const Jet& e) {
  Jet E(solve_kepler(ell.value(), e.value()), ell.degree());
  for (int it = 0; it < 3; ++it) {
    const Jet s = sin(E);
    const Jet c = cos(E);
    Jet res = E - e * s - ell;
    // The value-level residual is already converged; only the higher
    // coefficients are updated.
    res.coefficient(0) = 0.0;
    E -= res / (1.0 - e * c);
  }
  return E;
}

}  // namespace mainprob
