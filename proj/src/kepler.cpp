#include "mainprob/kepler.hpp"

#include <string>

namespace mainprob {

double solve_kepler(double ell, double e) {
  if (!(e >= 0.0 && e < 1.0) || !std::isfinite(ell)) {
    throw UsageError("solve_kepler requires 0 <= e < 1 and finite ell");
  }
  const double M = wrap_pi(ell);
  const double shift = ell - M;
  if (e == 0.0) return ell;

  // The root of E - e sin E - M lies in [M - e, M + e].
  double lo = M - e;
  double hi = M + e;
  double E = M + e * std::sin(M) / (1.0 - std::sin(M + e) + std::sin(M));
  if (!(E > lo && E < hi)) E = M;
  for (int it = 0; it < kKeplerMaxIterations; ++it) {
    const double s = std::sin(E);
    const double res = E - e * s - M;
    if (std::abs(res) <= kKeplerTolerance) return E + shift;
    if (res > 0.0) {
      hi = E;
    } else {
      lo = E;
    }
    const double step = res / (1.0 - e * std::cos(E));
    double next = E - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == E) return E + shift;
    E = next;
  }
  throw NumericalFailure("Kepler solver did not converge for e = " +
                         std::to_string(e));
}

}  // namespace mainprob
