#pragma once

// Orbit quantities shared by the perturbation theory, evaluated from either
// canonical chart: Delaunay (ell, g, h, L, G, H) or polar-nodal
// (r, theta, nu, R, Theta, N). The scalar type is double or Jet; with jets the
// Taylor expansion is taken in the chart's own variables, so Poisson brackets
// are computed in that chart. Both charts are canonical and give the same
// brackets.
//
// The eccentricity enters only through the regular combinations
// z = e cos f + i e sin f, e^2 and phi = f - ell, so expansions over the
// polar-nodal chart stay finite for circular orbits.

#include <array>
#include <cmath>
#include <type_traits>

#include "mainprob/elements.hpp"
#include "mainprob/gravity.hpp"
#include "mainprob/jet.hpp"
#include "mainprob/kepler.hpp"

namespace mainprob {

enum class CanonicalChart { Delaunay, PolarNodal };

inline constexpr int kMaxAnomalyHarmonic = 7;
inline constexpr int kMaxThetaHarmonic = 6;

template <class T>
struct OrbitBasis {
  CanonicalChart chart = CanonicalChart::Delaunay;
  std::array<T, 6> x{};  // chart coordinates, (q0, q1, q2, p0, p1, p2)
  double mu = 0, Re = 0, J2 = 0;

  T L, G, H;
  T a, n, p, eta, beta, s2, c, eps;
  T r, R, theta, nu;
  T ecosf, esinf, e2, ecosE, esinE, phi;
  // (e cos f + i e sin f)^j and multiples of the argument of latitude.
  std::array<T, kMaxAnomalyHarmonic + 1> zre, zim;
  std::array<T, kMaxThetaHarmonic + 1> cos_jtheta, sin_jtheta;

  template <class F>
  void for_each(F&& f) {
    for (auto& v : x) f(v);
    for (T* v : {&L, &G, &H, &a, &n, &p, &eta, &beta, &s2, &c, &eps, &r, &R,
                 &theta, &nu, &ecosf, &esinf, &e2, &ecosE, &esinE, &phi}) {
      f(*v);
    }
    for (auto& v : zre) f(v);
    for (auto& v : zim) f(v);
    for (auto& v : cos_jtheta) f(v);
    for (auto& v : sin_jtheta) f(v);
  }

  /// Copy with every jet truncated to `degree`.
  OrbitBasis truncated(int degree) const {
    OrbitBasis out(*this);
    if constexpr (!std::is_same_v<T, double>) {
      out.for_each([degree](T& v) { v = v.truncated(degree); });
    }
    return out;
  }

  /// e, recomputed from e^2 (singular derivatives at e = 0).
  T e() const {
    using std::sqrt;
    return sqrt(e2);
  }

  /// Mean anomaly and argument of perigee in the current chart.
  std::array<T, 2> ell_and_g() const {
    using std::atan2;
    using std::atan;
    if (chart == CanonicalChart::Delaunay) return {x[0], x[1]};
    const T E = atan2(esinE, ecosE);
    const T f = E + (phi - esinE);
    return {E - esinE, theta - f};
  }
};

namespace detail {

template <class T>
void finish_basis(OrbitBasis<T>& b, const GravityField& field) {
  using std::cos;
  using std::sin;
  b.mu = field.mu;
  b.Re = field.Re;
  b.J2 = field.J2;
  b.n = b.mu * b.mu / (b.L * b.L * b.L);
  b.eta = b.G / b.L;
  b.beta = 1.0 / (1.0 + b.eta);
  b.p = b.G * b.G / b.mu;
  b.c = b.H / b.G;
  b.s2 = (1.0 - b.c) * (1.0 + b.c);
  b.eps = (field.J2 * field.Re * field.Re / 4.0) / (b.p * b.p);
  b.e2 = b.ecosf * b.ecosf + b.esinf * b.esinf;

  b.zre[0] = T(1.0);
  b.zim[0] = T(0.0);
  for (int j = 1; j <= kMaxAnomalyHarmonic; ++j) {
    b.zre[j] = b.zre[j - 1] * b.ecosf - b.zim[j - 1] * b.esinf;
    b.zim[j] = b.zre[j - 1] * b.esinf + b.zim[j - 1] * b.ecosf;
  }
  b.cos_jtheta[0] = T(1.0);
  b.sin_jtheta[0] = T(0.0);
  b.cos_jtheta[1] = cos(b.theta);
  b.sin_jtheta[1] = sin(b.theta);
  for (int j = 2; j <= kMaxThetaHarmonic; ++j) {
    b.cos_jtheta[j] = b.cos_jtheta[j - 1] * b.cos_jtheta[1] -
                      b.sin_jtheta[j - 1] * b.sin_jtheta[1];
    b.sin_jtheta[j] = b.sin_jtheta[j - 1] * b.cos_jtheta[1] +
                      b.cos_jtheta[j - 1] * b.sin_jtheta[1];
  }
}

}  // namespace detail

/// Basis from Delaunay coordinates (ell, g, h, L, G, H). Requires e > 0 when
/// T is a jet.
template <class T>
OrbitBasis<T> basis_from_delaunay(const std::array<T, 6>& x, const GravityField& field) {
  using std::atan;
  using std::cos;
  using std::sin;
  using std::sqrt;
  OrbitBasis<T> b;
  b.chart = CanonicalChart::Delaunay;
  b.x = x;
  const T& ell = x[0];
  b.L = x[3];
  b.G = x[4];
  b.H = x[5];
  b.a = b.L * b.L / field.mu;
  const T eta = b.G / b.L;
  const T e = sqrt((1.0 - eta) * (1.0 + eta));
  const T E = solve_kepler(ell, e);
  const T sE = sin(E);
  const T cE = cos(E);
  const T denom = 1.0 - e * cE;
  b.r = b.a * denom;
  b.ecosE = e * cE;
  b.esinE = e * sE;
  b.ecosf = e * (cE - e) / denom;
  b.esinf = e * eta * sE / denom;
  const T f_minus_E = 2.0 * atan(b.esinE / (1.0 + eta - b.ecosE));
  b.phi = f_minus_E + b.esinE;
  b.theta = ell + x[1] + b.phi;
  b.nu = x[2];
  b.R = b.L * b.esinE / b.r;
  detail::finish_basis(b, field);
  return b;
}

/// Basis from polar-nodal coordinates (r, theta, nu, R, Theta, N).
template <class T>
OrbitBasis<T> basis_from_polar_nodal(const std::array<T, 6>& x,
                                     const GravityField& field) {
  using std::atan;
  using std::sqrt;
  OrbitBasis<T> b;
  b.chart = CanonicalChart::PolarNodal;
  b.x = x;
  b.r = x[0];
  b.theta = x[1];
  b.nu = x[2];
  b.R = x[3];
  b.G = x[4];
  b.H = x[5];
  const T inv_a = 2.0 / b.r - (b.R * b.R + b.G * b.G / (b.r * b.r)) / field.mu;
  b.a = 1.0 / inv_a;
  b.L = sqrt(field.mu * b.a);
  const T eta = b.G / b.L;
  const T p = b.G * b.G / field.mu;
  b.ecosf = p / b.r - 1.0;
  b.esinf = p * b.R / b.G;
  b.ecosE = 1.0 - b.r * inv_a;
  b.esinE = b.r * b.R / b.L;
  const T f_minus_E = 2.0 * atan(b.esinE / (1.0 + eta - b.ecosE));
  b.phi = f_minus_E + b.esinE;
  detail::finish_basis(b, field);
  return b;
}

inline std::array<double, 6> delaunay_coordinates(const DelaunayState& d) {
  return {d.ell, d.g, d.h, d.L, d.G, d.H};
}

inline std::array<double, 6> polar_nodal_coordinates(const PolarNodalState& s) {
  return {s.r, s.theta, s.nu, s.R, s.Theta, s.N};
}

/// Coordinate jets of degree `degree` centred at `values`.
inline std::array<Jet, 6> coordinate_jets(const std::array<double, 6>& values,
                                          int degree) {
  std::array<Jet, 6> out;
  for (int i = 0; i < 6; ++i) out[i] = Jet::variable(values[i], i, degree);
  return out;
}

}  // namespace mainprob
