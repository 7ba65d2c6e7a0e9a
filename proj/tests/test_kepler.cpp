#include <cmath>

#include "doctest.h"
#include "mainprob/kepler.hpp"
#include "support.hpp"

using namespace mainprob;

namespace {

// Bisection on E - e sin E - M over [M - e, M + e] (independent oracle).
double bisect_kepler(double M, double e) {
  double lo = M - e, hi = M + e;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (mid - e * std::sin(mid) - M > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("kepler examples") {
  CHECK(solve_kepler(0.7, 0.0) == 0.7);
  CHECK(solve_kepler(0.0, 0.73) == 0.0);
  const double E = solve_kepler(1.0, 0.1);
  CHECK(E == doctest::Approx(1.08860).epsilon(1e-5));
  CHECK(std::abs(E - bisect_kepler(1.0, 0.1)) <= 1e-12);
}

TEST_CASE("kepler residual property") {
  testing::Gen gen(2);
  double worst = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double e = i % 4 == 0 ? gen.uniform(0.9, 0.99) : gen.uniform(0.0, 0.99);
    const double ell = gen.uniform(-kPi, kPi);
    const double E = solve_kepler(ell, e);
    worst = std::max(worst, std::abs(E - e * std::sin(E) - ell));
    // Same revolution as ell.
    const double far = ell + kTwoPi * gen.integer(-8, 8);
    CHECK(std::abs(solve_kepler(far, e) - far) <= e + 1e-12);
  }
  CHECK(worst <= 1e-14);
}

TEST_CASE("anomaly relations") {
  CHECK(true_from_eccentric(2.1, 0.0) == doctest::Approx(2.1).epsilon(1e-15));
  CHECK(true_from_eccentric(kPi, 0.5) == doctest::Approx(kPi).epsilon(1e-15));
  const double a = 24460.0, e = 0.73;
  CHECK(a * (1.0 - e * std::cos(0.0)) == doctest::Approx(6604.2).epsilon(1e-12));

  testing::Gen gen(3);
  for (int i = 0; i < 2000; ++i) {
    const double ecc = gen.uniform(0.0, 0.95);
    const double E = gen.uniform(-20.0, 20.0);
    const double f = true_from_eccentric(E, ecc);
    CHECK(std::abs(eccentric_from_true(f, ecc) - E) <= 1e-12);
    // r from the conic and from the eccentric anomaly.
    const double p = 1.0 - ecc * ecc;
    CHECK(testing::rel(p / (1.0 + ecc * std::cos(f)), 1.0 - ecc * std::cos(E)) <= 1e-12);
    CHECK(std::abs(f - E) < kPi);  // continuous, no revolution jumps
  }
}

TEST_CASE("kepler on jets gives implicit derivatives") {
  const double ell = 0.8, e = 0.4;
  const Jet E = solve_kepler(Jet::variable(ell, 0, 3), Jet::variable(e, 1, 3));
  const double Ev = solve_kepler(ell, e);
  const double den = 1.0 - e * std::cos(Ev);
  CHECK(E.value() == doctest::Approx(Ev).epsilon(1e-15));
  CHECK(E.partial(0) == doctest::Approx(1.0 / den).epsilon(1e-13));
  CHECK(E.partial(1) == doctest::Approx(std::sin(Ev) / den).epsilon(1e-13));
}

TEST_CASE("kepler rejects invalid eccentricity") {
  CHECK_THROWS(solve_kepler(0.3, 1.0));
  CHECK_THROWS(solve_kepler(0.3, -0.1));
  CHECK_THROWS(solve_kepler(NAN, 0.1));
}
