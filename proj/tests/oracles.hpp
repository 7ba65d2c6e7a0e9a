#pragma once

// Independent reference computations shared by the unit suites and the
// acceptance report.

#include <algorithm>
#include <array>
#include <cmath>

#include "mainprob/secular.hpp"
#include "mainprob/theory.hpp"
#include "support.hpp"

namespace testing {

// Maximum coordinate error between two states of the same chart. Actions
// and lengths are relative, angles absolute. The perigee and anomaly angles
// are weighted by e, the conditioning of their definition.
inline double chart_error(const OrbitState& a, const OrbitState& b) {
  using std::abs;
  const auto ang = [](double x, double y) { return abs(angle_difference(x, y)); };
  if (const auto* x = std::get_if<DelaunayState>(&a)) {
    const auto& y = std::get<DelaunayState>(b);
    const double e = std::sqrt(std::max(0.0, 1 - (x->G / x->L) * (x->G / x->L)));
    return std::max({e * ang(x->ell, y.ell), e * ang(x->g, y.g), ang(x->ell + x->g, y.ell + y.g),
                     ang(x->h, y.h), rel(x->L, y.L), rel(x->G, y.G), abs(x->H - y.H) / x->G});
  }
  if (const auto* x = std::get_if<KeplerianElements>(&a)) {
    const auto& y = std::get<KeplerianElements>(b);
    return std::max({rel(x->a, y.a), abs(x->e - y.e), abs(x->inc - y.inc), ang(x->raan, y.raan),
                     x->e * ang(x->argp, y.argp), x->e * ang(x->anomaly, y.anomaly),
                     ang(x->argp + x->anomaly, y.argp + y.anomaly)});
  }
  if (const auto* x = std::get_if<PolarNodalState>(&a)) {
    const auto& y = std::get<PolarNodalState>(b);
    return std::max({rel(x->r, y.r), ang(x->theta, y.theta), ang(x->nu, y.nu),
                     abs(x->R - y.R) * x->r / x->Theta, rel(x->Theta, y.Theta),
                     abs(x->N - y.N) / x->Theta});
  }
  if (const auto* x = std::get_if<SemiEquinoctialState>(&a)) {
    const auto& y = std::get<SemiEquinoctialState>(b);
    return std::max({ang(x->F, y.F), abs(x->C - y.C), abs(x->S - y.S), rel(x->L, y.L),
                     ang(x->h, y.h), abs(x->H - y.H) / x->L});
  }
  const auto& x = std::get<CartesianState>(a);
  const auto& y = std::get<CartesianState>(b);
  double rn = 0, vn = 0, dr = 0, dv = 0;
  for (int i = 0; i < 3; ++i) {
    rn = std::max(rn, abs(x.position[i]));
    vn = std::max(vn, abs(x.velocity[i]));
    dr = std::max(dr, abs(x.position[i] - y.position[i]));
    dv = std::max(dv, abs(x.velocity[i] - y.velocity[i]));
  }
  return std::max(dr / rn, dv / vn);
}

inline constexpr std::array<Chart, 5> kCharts{Chart::Delaunay, Chart::Keplerian,
                                              Chart::PolarNodal, Chart::SemiEquinoctial,
                                              Chart::Cartesian};

// A Delaunay state carries e only through G = L sqrt(1 - e^2), which fixes
// e to about 1e-16 / e absolute.
inline bool delaunay_limited(Chart from, Chart via, double e) {
  return via == Chart::Delaunay && from != Chart::Delaunay && e < 1e-4;
}

// Largest relative coordinate difference; angles absolute.
inline double pn_error(const PolarNodalState& a, const PolarNodalState& b) {
  return std::max({rel(a.r, b.r), std::abs(angle_difference(a.theta, b.theta)),
                   std::abs(angle_difference(a.nu, b.nu)), std::abs(a.R - b.R) * a.r / a.Theta,
                   rel(a.Theta, b.Theta), std::abs(a.N - b.N) / a.Theta});
}

// Basis values straight from their definitions, in long double so that
// central differences are limited by truncation and not by round-off.
inline std::array<long double, kBasisCount> basis_values(const std::array<long double, 6>& x,
                                                         long double mu) {
  const long double ell = x[0], L = x[3], G = x[4], H = x[5];
  const long double a = L * L / mu;
  const long double eta = G / L;
  const long double e = std::sqrt((L - G) * (L + G)) / L;
  const long double c = H / G;
  const long double s = std::sqrt((1 - c) * (1 + c));
  long double E = ell;
  for (int i = 0; i < 100; ++i) {
    const long double dE = (E - e * std::sin(E) - ell) / (1 - e * std::cos(E));
    E -= dE;
    if (std::abs(dE) < 1e-19L) break;
  }
  const long double f = 2 * std::atan(std::sqrt((1 + e) / (1 - e)) * std::tan(E / 2));
  const long double twopi = 2 * std::acos(-1.0L);
  const long double fw = f + twopi * std::round((E - f) / twopi);
  std::array<long double, kBasisCount> v{};
  v[int(BasisFunction::a)] = a;
  v[int(BasisFunction::e)] = e;
  v[int(BasisFunction::eta)] = eta;
  v[int(BasisFunction::p)] = G * G / mu;
  v[int(BasisFunction::s)] = s;
  v[int(BasisFunction::c)] = c;
  v[int(BasisFunction::r)] = a * (1 - e * std::cos(E));
  v[int(BasisFunction::f)] = fw;
  v[int(BasisFunction::E)] = E;
  v[int(BasisFunction::phi)] = fw - ell;
  v[int(BasisFunction::beta)] = 1 / (1 + eta);
  v[int(BasisFunction::n)] = mu * mu / (L * L * L);
  return v;
}

struct PartialCheck {
  int basis;
  int variable;
  double analytic;
  double fd;
  double error;  // relative to the typical size of the partial
};

// Central differences of every basis function against partials_at. The
// angles g and h are not differentiated: their partials must vanish, which
// is reported with fd = 0.
template <class Visit>
void check_partials(const DelaunayState& d, const GravityField& field, Visit visit) {
  const PartialsTable t = partials_at(d, field);
  const std::array<long double, 6> x{d.ell, d.g, d.h, d.L, d.G, d.H};
  const double e = std::sqrt((d.L - d.G) * (d.L + d.G)) / d.L;
  const double s2 = 1 - (d.H / d.G) * (d.H / d.G);
  // Steps sized by the local conditioning of e(L, G), s(G, H) and E(ell).
  const std::array<long double, 6> step{1e-5 * std::pow(1 - e, 1.5), 1e-6, 1e-6,
                                        1e-5 * d.L * e * e, 1e-5 * std::min(d.L * e * e, d.G * s2),
                                        1e-5 * d.G * s2};
  const auto base = basis_values(x, field.mu);
  for (int j = 0; j < 6; ++j) {
    auto xp = x, xm = x;
    xp[j] += step[j];
    xm[j] -= step[j];
    const auto vp = basis_values(xp, field.mu);
    const auto vm = basis_values(xm, field.mu);
    for (int b = 0; b < kBasisCount; ++b) {
      const double an = t.rows[b].gradient[j];
      if (j == 1 || j == 2) {
        visit(PartialCheck{b, j, an, 0.0, an == 0.0 ? 0.0 : INFINITY});
        continue;
      }
      const double fd = static_cast<double>((vp[b] - vm[b]) / (2 * step[j]));
      // Typical size of the partial: value over the variable's scale.
      const double typical =
          static_cast<double>(std::abs(base[b]) / (j == 0 ? 1.0L : x[j])) + std::abs(an);
      const double err = std::abs(fd - an) / std::max({std::abs(an), 1e-3 * typical, 1e-300});
      visit(PartialCheck{b, j, an, fd, err});
    }
  }
}

// Perturbation part of sum_{m <= S} eps^m / m! K_{0,m} at the momenta.
inline double normalized_perturbation(double L, double G, double H, int order,
                                      const GravityField& field) {
  DelaunayState d{Stage::DoublePrime, 0.3, 0.7, 0.0, L, G, H};
  const double p = G * G / field.mu;
  const double eps = field.J2 * field.Re * field.Re / (4 * p * p);
  double sum = 0, w = 1;
  for (int m = 1; m <= order; ++m) {
    w *= eps / m;
    sum += w * eval_K_dnorm(m, d, field);
  }
  return sum;
}

template <class F>
double five_point(F f, double x, double h) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

// Relative disagreement of (nF - n, ng, nh) with five-point derivatives of
// the normalized Hamiltonian.
inline std::array<double, 3> rate_fd_errors(double L, double G, double H, int order,
                                            const GravityField& field) {
  const double n = field.mu * field.mu / (L * L * L);
  const SecularRates r = frequencies(L, G, H, order, field);
  const double h = 1e-3;
  const auto K = [&](double l, double g, double hh) {
    return normalized_perturbation(l, g, hh, order, field);
  };
  const double dL = five_point([&](double x) { return K(x, G, H); }, L,
                               std::min(h * L, 0.25 * (L - G)));
  const double dG = five_point([&](double x) { return K(L, x, H); }, G,
                               std::min(h * G, 0.25 * (L - G)));
  const double dH = five_point([&](double x) { return K(L, G, x); }, H,
                               h * std::min(G - std::abs(H), G));
  return {rel(r.nF - n, dL + dG), rel(r.ng, dG), rel(r.nh, dH)};
}

// Classical first-order rates: relative errors of nF - ng, ng and nh.
inline std::array<double, 3> classical_rate_errors(double L, double G, double H,
                                                   const GravityField& field) {
  const double n = field.mu * field.mu / std::pow(L, 3);
  const double p = G * G / field.mu;
  const double eta = G / L, c = H / G;
  const double k = field.J2 * std::pow(field.Re / p, 2);
  const SecularRates r = frequencies(L, G, H, 1, field);
  return {rel(r.nF - r.ng, n * (1 + 0.75 * k * eta * (3 * c * c - 1))),
          rel(r.ng, 0.75 * n * k * (5 * c * c - 1)), rel(r.nh, -1.5 * n * k * c)};
}

}  // namespace testing
