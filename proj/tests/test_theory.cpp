#include <cmath>

#include "doctest.h"
#include "mainprob/lie.hpp"
#include "mainprob/theory.hpp"
#include "support.hpp"

using namespace mainprob;
using testing::rel;

namespace {

const GravityField kField{};

DelaunayState state_of(double a, double e, double inc_deg, double raan_deg, double argp_deg,
                       double ell_deg) {
  return to_delaunay(KeplerianElements{a, e, inc_deg * kDeg, raan_deg * kDeg, argp_deg * kDeg,
                                       ell_deg * kDeg},
                     kField);
}

}  // namespace

TEST_CASE("triangle reproduces the printed Hamiltonian terms") {
  // Solving the homological equation with the printed generators must give
  // back the printed new Hamiltonian, in either canonical chart.
  testing::Gen gen(21);
  for (int trial = 0; trial < 60; ++trial) {
    KeplerianElements k = gen.elements(trial % 3 == 0 ? 1e-6 : 1e-3, 0.8);
    k.inc = gen.inclination(3.0);
    for (CanonicalChart chart : {CanonicalChart::Delaunay, CanonicalChart::PolarNodal}) {
      // Delaunay-chart expansions lose digits as 1/e; only the polar-nodal
      // chart is used near circular orbits.
      if (chart == CanonicalChart::Delaunay && k.e < 0.05) continue;
      const std::array<double, 6> pt = chart == CanonicalChart::Delaunay
                                           ? delaunay_coordinates(to_delaunay(k, kField))
                                           : polar_nodal_coordinates(to_polar_nodal(k, kField));
      const OrbitBasis<double> b = chart == CanonicalChart::Delaunay
                                       ? basis_from_delaunay(pt, kField)
                                       : basis_from_polar_nodal(pt, kField);
      for (Normalization st : {Normalization::TotalAngularMomentum, Normalization::Delaunay}) {
        const auto K = transformed_hamiltonian(st, 3, pt, chart, kField);
        const double K00 = std::abs(theory::kepler(b));
        for (int m = 0; m <= 3; ++m) {
          const double ref = theory::output_hamiltonian(st, m, b);
          const double tol = 1e-8 * std::abs(ref) + 1e-13 * std::pow(b.eps, m) * K00;
          CHECK_MESSAGE(std::abs(K[m] - ref) <= tol, "stage ", int(st), " m ", m, " e ", k.e,
                        " chart ", int(chart));
        }
      }
    }
  }
}

TEST_CASE("critical-inclination guard") {
  const DelaunayState critical = state_of(7000, 0.01, 63.4349, 0, 10, 20);
  CHECK_THROWS_AS(eval_W_gnorm(1, critical, kField), ResonanceError);
  CHECK_THROWS_AS(eval_W_dnorm(2, critical, kField), ResonanceError);
  CHECK_THROWS_AS(eval_K_dnorm(3, critical, kField), ResonanceError);
  try {
    eval_W_gnorm(2, critical, kField);
  } catch (const ResonanceError& err) {
    CHECK(err.divisor() < 1e-5);
  }
  const DelaunayState topex = state_of(7707.270, 0.0001, 66.04, 180.001, 270, 180);
  for (int m = 1; m <= 3; ++m) {
    CHECK_NOTHROW(eval_W_gnorm(m, topex, kField));
    CHECK_NOTHROW(eval_W_dnorm(m, topex, kField));
    CHECK_NOTHROW(eval_K_dnorm(m, topex, kField));
  }
  // The guard is configurable.
  CHECK_NOTHROW(eval_W_gnorm(1, topex, kField, TheoryOptions{0.15}));
  CHECK_THROWS_AS(eval_W_gnorm(1, topex, kField, TheoryOptions{0.2}), ResonanceError);
  CHECK(in_warning_band(0.8 + 0.01, TheoryOptions{}));
  CHECK(!in_warning_band(std::pow(std::sin(66.04 * kDeg), 2), TheoryOptions{}));
}

TEST_CASE("Hamiltonian term examples") {
  const DelaunayState d = state_of(7500, 0.05, 40, 10, 20, 30);
  CHECK(eval_K_dnorm(0, d, kField) == doctest::Approx(-kField.mu * kField.mu / (2 * d.L * d.L)));

  // K_{0,1} of the Delaunay stage vanishes at s^2 = 2/3.
  const double i23 = std::asin(std::sqrt(2.0 / 3.0)) / kDeg;
  CHECK(std::abs(eval_K_dnorm(1, state_of(7500, 0.05, i23, 0, 0, 0), kField)) <= 1e-12);

  // Circular orbit: -(3/4)(mu/p)(lambda20 + lambda21 + lambda22).
  const DelaunayState circ = state_of(7500, 0.0, 40, 10, 20, 30);
  const double s2 = std::pow(std::sin(40 * kDeg), 2);
  const auto& lam = theory_tables().lambda2;
  double sum = 0;
  for (int j = 0; j <= 2; ++j) sum += (*lam.find({j, 0, 0}))(s2);
  CHECK(eval_K_dnorm(2, circ, kField) == doctest::Approx(-0.75 * kField.mu / 7500 * sum).epsilon(1e-13));

  // G-stage K_{0,1} in the equatorial plane: -(mu/r)(Re/r)^2 J2 / 2.
  const DelaunayState eq = state_of(7500, 0.1, 0, 0, 20, 30);
  const double r = to_polar_nodal(eq, kField).r;
  CHECK(eval_K_gnorm(1, eq, kField) ==
        doctest::Approx(-(kField.mu / r) * std::pow(kField.Re / r, 2) * kField.J2 / 2).epsilon(1e-13));

  // K_{0,2} of the G-stage is even under (f, g) -> (-f, -g).
  DelaunayState mirror = d;
  mirror.ell = -d.ell;
  mirror.g = -d.g;
  CHECK(rel(eval_K_gnorm(2, d, kField), eval_K_gnorm(2, mirror, kField)) <= 1e-13);
  DelaunayState turned = d;
  turned.ell += kTwoPi;
  CHECK(rel(eval_K_gnorm(2, d, kField), eval_K_gnorm(2, turned, kField)) <= 1e-12);
}

TEST_CASE("generator examples") {
  // Equatorial orbit: W1 of the G-stage vanishes.
  CHECK(eval_W_gnorm(1, state_of(7500, 0.1, 0, 0, 20, 30), kField) == 0.0);
  // Circular orbit: W1 of the Delaunay stage vanishes.
  CHECK(eval_W_dnorm(1, state_of(7500, 0.0, 50, 0, 20, 30), kField) == 0.0);

  // PRISMA row, W1 of the G-stage summed term by term.
  const double a = 6878.137, e = 0.001, inc = 97.42 * kDeg, w = 20 * kDeg;
  const DelaunayState d = state_of(a, e, 97.42, 168.162, 20, 30);
  const double E = solve_kepler(30 * kDeg, e);
  const double f = 2 * std::atan(std::sqrt((1 + e) / (1 - e)) * std::tan(E / 2));
  const double p = a * (1 - e * e);
  const double eps = kField.J2 * kField.Re * kField.Re / (4 * p * p);
  const double s2 = std::sin(inc) * std::sin(inc);
  double periodic = 0;
  for (int i = 1; i <= 3; ++i) {
    periodic += std::pow(3.0, std::floor(2 - i / 2.0)) * std::pow(e, std::abs(i - 2)) *
                std::sin(i * f + 2 * w);
  }
  const double C1 = eps * d.G * (15 * s2 - 14) / (8 * (5 * s2 - 4)) * s2 * e * e * std::sin(2 * w);
  const double oracle = -eps * d.G * 0.5 * s2 * periodic + C1;
  CHECK(rel(eval_W_gnorm(1, d, kField), oracle) <= 1e-12);
}

TEST_CASE("normalized terms do not depend on the angles") {
  testing::Gen gen(23);
  for (int trial = 0; trial < 100; ++trial) {
    const DelaunayState d = to_delaunay(gen.elements(1e-3, 0.8), kField);
    DelaunayState moved = d;
    moved.ell = gen.angle();
    moved.g = gen.angle();
    moved.h = gen.angle();
    for (int m = 0; m <= 3; ++m) {
      CHECK(rel(eval_K_dnorm(m, d, kField), eval_K_dnorm(m, moved, kField)) <= 1e-12);
    }
    DelaunayState node = d;
    node.h = gen.angle();
    for (int m = 1; m <= 3; ++m) {
      CHECK(eval_W_gnorm(m, d, kField) == eval_W_gnorm(m, node, kField));
      CHECK(eval_W_dnorm(m, d, kField) == eval_W_dnorm(m, node, kField));
      CHECK(eval_K_gnorm(m, d, kField) == eval_K_gnorm(m, node, kField));
    }
  }
}

TEST_CASE("Delaunay-stage K1 is the mean of the G-stage K1") {
  testing::Gen gen(29);
  for (int trial = 0; trial < 20; ++trial) {
    DelaunayState d = to_delaunay(gen.elements(1e-3, 0.8), kField);
    const int n = 4096;
    double sum = 0;
    for (int i = 0; i < n; ++i) {
      d.ell = -kPi + kTwoPi * i / n;
      sum += eval_K_gnorm(1, d, kField);
    }
    const double p = d.G * d.G / kField.mu;
    const double eps = kField.J2 * kField.Re * kField.Re / (4 * p * p);
    CHECK(rel(sum / n, eps * eval_K_dnorm(1, d, kField)) <= 1e-9);
  }
}

TEST_CASE("generators are 2 pi periodic in ell and g") {
  testing::Gen gen(31);
  for (int trial = 0; trial < 50; ++trial) {
    const DelaunayState d = to_delaunay(gen.elements(1e-3, 0.8), kField);
    DelaunayState shifted = d;
    shifted.ell += kTwoPi;
    shifted.g -= kTwoPi;
    for (int m = 1; m <= 3; ++m) {
      const double scale = std::abs(eval_W_gnorm(m, d, kField)) + 1e-30;
      CHECK(std::abs(eval_W_gnorm(m, d, kField) - eval_W_gnorm(m, shifted, kField)) <= 1e-11 * scale);
    }
  }
}
