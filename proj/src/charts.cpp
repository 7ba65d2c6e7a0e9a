#include <algorithm>
#include <cmath>

#include "mainprob/angles.hpp"
#include "mainprob/elements.hpp"
#include "mainprob/kepler.hpp"

namespace mainprob {

namespace {

constexpr double kCircularThreshold = 1e-9;

void check_elliptic(double a, double e) {
  if (!(a > 0.0) || !(e >= 0.0 && e < 1.0)) {
    throw SingularChart("orbit is not elliptic (a <= 0 or e >= 1)");
  }
}

KeplerianElements delaunay_to_keplerian(const DelaunayState& d,
                                        const GravityField& field) {
  if (!(d.L > 0.0) || !(d.G > 0.0) || d.G > d.L * (1.0 + 1e-15) ||
      std::abs(d.H) > d.G * (1.0 + 1e-15)) {
    throw SingularChart("Delaunay actions violate L > 0, |H| <= G <= L");
  }
  KeplerianElements k;
  k.a = d.L * d.L / field.mu;
  const double e2 = std::max(0.0, (d.L - d.G) * (d.L + d.G)) / (d.L * d.L);
  k.e = std::sqrt(e2);
  k.inc = std::acos(std::clamp(d.H / d.G, -1.0, 1.0));
  k.raan = d.h;
  k.argp = d.g;
  k.anomaly = d.ell;
  k.kind = AnomalyKind::Mean;
  return k;
}

double mean_anomaly_of(const KeplerianElements& k) {
  switch (k.kind) {
    case AnomalyKind::Mean:
      return k.anomaly;
    case AnomalyKind::Eccentric:
      return k.anomaly - k.e * std::sin(k.anomaly);
    case AnomalyKind::True: {
      const double E = eccentric_from_true(k.anomaly, k.e);
      return E - k.e * std::sin(E);
    }
  }
  return k.anomaly;
}

KeplerianElements with_anomaly_kind(KeplerianElements k, AnomalyKind kind) {
  if (k.kind == kind) return k;
  check_elliptic(k.a, k.e);
  const double M = mean_anomaly_of(k);
  double value = M;
  if (kind != AnomalyKind::Mean) {
    const double E = solve_kepler(M, k.e);
    value = kind == AnomalyKind::Eccentric ? E : true_from_eccentric(E, k.e);
  }
  k.anomaly = value;
  k.kind = kind;
  return k;
}

DelaunayState keplerian_to_delaunay(const KeplerianElements& k,
                                    const GravityField& field, Stage stage) {
  check_elliptic(k.a, k.e);
  DelaunayState d;
  d.stage = stage;
  d.L = std::sqrt(field.mu * k.a);
  d.G = d.L * std::sqrt((1.0 - k.e) * (1.0 + k.e));
  d.H = d.G * std::cos(k.inc);
  d.ell = wrap_pi(mean_anomaly_of(k));
  d.g = wrap_pi(k.argp);
  d.h = wrap_pi(k.raan);
  return d;
}

PolarNodalState keplerian_to_polar_nodal(const KeplerianElements& k,
                                         const GravityField& field) {
  check_elliptic(k.a, k.e);
  const double M = mean_anomaly_of(k);
  const double E = solve_kepler(M, k.e);
  const double eta = std::sqrt((1.0 - k.e) * (1.0 + k.e));
  const double p = k.a * eta * eta;
  const double f = true_from_eccentric(E, k.e);
  PolarNodalState pn;
  pn.r = k.a * (1.0 - k.e * std::cos(E));
  pn.theta = wrap_pi(k.argp + f);
  pn.nu = wrap_pi(k.raan);
  pn.Theta = std::sqrt(field.mu * p);
  pn.R = pn.Theta / p * k.e * std::sin(f);
  pn.N = pn.Theta * std::cos(k.inc);
  return pn;
}

// Eccentricity-regular quantities of a polar-nodal state.
struct PolarShape {
  double a, L, eta, ecosf, esinf, phi;
};

PolarShape polar_shape(const PolarNodalState& pn, const GravityField& field) {
  if (!(pn.r > 0.0) || !(pn.Theta > 0.0)) {
    throw SingularChart("polar-nodal state needs r > 0 and Theta > 0");
  }
  const double inv_a =
      2.0 / pn.r - (pn.R * pn.R + pn.Theta * pn.Theta / (pn.r * pn.r)) / field.mu;
  if (!(inv_a > 0.0)) throw SingularChart("orbit is not elliptic");
  PolarShape s;
  s.a = 1.0 / inv_a;
  s.L = std::sqrt(field.mu * s.a);
  s.eta = pn.Theta / s.L;
  if (s.eta > 1.0) s.eta = 1.0;
  const double p = pn.Theta * pn.Theta / field.mu;
  s.ecosf = p / pn.r - 1.0;
  s.esinf = p * pn.R / pn.Theta;
  const double ecosE = 1.0 - pn.r * inv_a;
  const double esinE = pn.r * pn.R / s.L;
  const double f_minus_E = 2.0 * std::atan2(esinE, 1.0 + s.eta - ecosE);
  s.phi = f_minus_E + esinE;
  return s;
}

KeplerianElements polar_nodal_to_keplerian(const PolarNodalState& pn,
                                           const GravityField& field) {
  const PolarShape s = polar_shape(pn, field);
  KeplerianElements k;
  k.a = s.a;
  k.e = std::hypot(s.ecosf, s.esinf);
  k.inc = std::acos(std::clamp(pn.N / pn.Theta, -1.0, 1.0));
  k.raan = wrap_two_pi(pn.nu);
  double f = pn.theta;
  double argp = 0.0;
  if (k.e >= kCircularThreshold) {
    f = std::atan2(s.esinf, s.ecosf);
    argp = wrap_two_pi(pn.theta - f);
  }
  k.argp = argp;
  k.anomaly = wrap_two_pi(f);
  k.kind = AnomalyKind::True;
  return k;
}

PolarNodalState semi_to_polar_nodal(const SemiEquinoctialState& q,
                                    const GravityField& field) {
  const double e = std::hypot(q.C, q.S);
  check_elliptic(q.L * q.L / field.mu, e);
  const double g = e >= kCircularThreshold ? std::atan2(q.S, q.C) : 0.0;
  const double a = q.L * q.L / field.mu;
  const double eta = std::sqrt((1.0 - e) * (1.0 + e));
  const double E = solve_kepler(q.F - g, e);
  const double esinE = e * std::sin(E);
  const double ecosE = e * std::cos(E);
  const double phi = 2.0 * std::atan2(esinE, 1.0 + eta - ecosE) + esinE;
  PolarNodalState pn;
  pn.r = a * (1.0 - ecosE);
  pn.theta = wrap_pi(q.F + phi);
  pn.nu = wrap_pi(q.h);
  pn.Theta = q.L * eta;
  pn.R = q.L * esinE / pn.r;
  pn.N = q.H;
  return pn;
}

SemiEquinoctialState polar_nodal_to_semi(const PolarNodalState& pn,
                                         const GravityField& field) {
  const PolarShape s = polar_shape(pn, field);
  const double ct = std::cos(pn.theta), st = std::sin(pn.theta);
  SemiEquinoctialState q;
  q.L = s.L;
  q.C = s.ecosf * ct + s.esinf * st;
  q.S = s.ecosf * st - s.esinf * ct;
  q.F = wrap_pi(pn.theta - s.phi);
  q.h = wrap_pi(pn.nu);
  q.H = pn.N;
  return q;
}

SemiEquinoctialState delaunay_to_semi(const DelaunayState& d,
                                      const GravityField& field) {
  const KeplerianElements k = delaunay_to_keplerian(d, field);
  SemiEquinoctialState q;
  q.F = wrap_pi(d.ell + d.g);
  q.C = k.e * std::cos(d.g);
  q.S = k.e * std::sin(d.g);
  q.L = d.L;
  q.h = d.h;
  q.H = d.H;
  return q;
}

DelaunayState semi_to_delaunay(const SemiEquinoctialState& q,
                               const GravityField& field, Stage stage) {
  const double e = std::hypot(q.C, q.S);
  check_elliptic(q.L * q.L / field.mu, e);
  DelaunayState d;
  d.stage = stage;
  d.g = e >= kCircularThreshold ? std::atan2(q.S, q.C) : 0.0;
  d.ell = wrap_pi(q.F - d.g);
  d.h = wrap_pi(q.h);
  d.L = q.L;
  d.G = q.L * std::sqrt((1.0 - e) * (1.0 + e));
  d.H = q.H;
  return d;
}

SemiEquinoctialState keplerian_to_semi(const KeplerianElements& k,
                                       const GravityField& field) {
  check_elliptic(k.a, k.e);
  SemiEquinoctialState q;
  q.L = std::sqrt(field.mu * k.a);
  q.F = wrap_pi(mean_anomaly_of(k) + k.argp);
  q.C = k.e * std::cos(k.argp);
  q.S = k.e * std::sin(k.argp);
  q.h = wrap_pi(k.raan);
  q.H = q.L * std::sqrt((1.0 - k.e) * (1.0 + k.e)) * std::cos(k.inc);
  return q;
}

KeplerianElements semi_to_keplerian(const SemiEquinoctialState& q,
                                    const GravityField& field) {
  KeplerianElements k;
  k.a = q.L * q.L / field.mu;
  k.e = std::hypot(q.C, q.S);
  check_elliptic(k.a, k.e);
  const double G = q.L * std::sqrt((1.0 - k.e) * (1.0 + k.e));
  k.inc = std::acos(std::clamp(q.H / G, -1.0, 1.0));
  k.raan = q.h;
  k.argp = k.e >= kCircularThreshold ? std::atan2(q.S, q.C) : 0.0;
  k.anomaly = wrap_pi(q.F - k.argp);
  k.kind = AnomalyKind::Mean;
  return k;
}

CartesianState polar_nodal_to_cartesian(const PolarNodalState& pn) {
  const double c = std::clamp(pn.N / pn.Theta, -1.0, 1.0);
  const double s = std::sqrt((1.0 - c) * (1.0 + c));
  const double cn = std::cos(pn.nu), sn = std::sin(pn.nu);
  const double ct = std::cos(pn.theta), st = std::sin(pn.theta);
  const std::array<double, 3> rhat{cn * ct - sn * st * c, sn * ct + cn * st * c,
                                   st * s};
  const std::array<double, 3> that{-cn * st - sn * ct * c, -sn * st + cn * ct * c,
                                   ct * s};
  const double vt = pn.Theta / pn.r;
  CartesianState x;
  for (int i = 0; i < 3; ++i) {
    x.position[i] = pn.r * rhat[i];
    x.velocity[i] = pn.R * rhat[i] + vt * that[i];
  }
  return x;
}

PolarNodalState cartesian_to_polar_nodal(const CartesianState& x) {
  const auto& p = x.position;
  const auto& v = x.velocity;
  const double hx = p[1] * v[2] - p[2] * v[1];
  const double hy = p[2] * v[0] - p[0] * v[2];
  const double hz = p[0] * v[1] - p[1] * v[0];
  const double hxy = std::hypot(hx, hy);
  PolarNodalState pn;
  pn.r = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  if (!(pn.r > 0.0)) throw SingularChart("position at the origin");
  pn.R = (p[0] * v[0] + p[1] * v[1] + p[2] * v[2]) / pn.r;
  pn.Theta = std::hypot(hxy, hz);
  if (!(pn.Theta > 0.0)) throw SingularChart("rectilinear motion");
  pn.N = hz;
  if (hxy == 0.0) throw SingularChart("equatorial orbit: node undefined");
  pn.nu = std::atan2(hx, -hy);
  const double cn = std::cos(pn.nu), sn = std::sin(pn.nu);
  pn.theta = std::atan2(p[2] * pn.Theta / hxy, p[0] * cn + p[1] * sn);
  return pn;
}

}  // namespace

Chart chart_of(const OrbitState& state) {
  return static_cast<Chart>(state.index());
}

KeplerianElements to_keplerian(const OrbitState& state, const GravityField& field,
                               AnomalyKind kind) {
  KeplerianElements k;
  if (const auto* d = std::get_if<DelaunayState>(&state)) {
    k = delaunay_to_keplerian(*d, field);
  } else if (const auto* kk = std::get_if<KeplerianElements>(&state)) {
    k = *kk;
  } else if (const auto* pn = std::get_if<PolarNodalState>(&state)) {
    k = polar_nodal_to_keplerian(*pn, field);
  } else if (const auto* q = std::get_if<SemiEquinoctialState>(&state)) {
    k = semi_to_keplerian(*q, field);
  } else {
    k = polar_nodal_to_keplerian(
        cartesian_to_polar_nodal(std::get<CartesianState>(state)), field);
  }
  return with_anomaly_kind(k, kind);
}

DelaunayState to_delaunay(const OrbitState& state, const GravityField& field,
                          Stage stage) {
  if (const auto* d = std::get_if<DelaunayState>(&state)) return *d;
  if (const auto* pn = std::get_if<PolarNodalState>(&state)) {
    // The momenta carry over exactly: G = Theta, H = N.
    DelaunayState d = keplerian_to_delaunay(to_keplerian(state, field), field, stage);
    d.G = std::min(pn->Theta, d.L);
    d.H = pn->N;
    return d;
  }
  if (const auto* q = std::get_if<SemiEquinoctialState>(&state)) {
    return semi_to_delaunay(*q, field, stage);
  }
  return keplerian_to_delaunay(to_keplerian(state, field), field, stage);
}

PolarNodalState to_polar_nodal(const OrbitState& state, const GravityField& field) {
  if (const auto* pn = std::get_if<PolarNodalState>(&state)) return *pn;
  if (const auto* x = std::get_if<CartesianState>(&state)) {
    return cartesian_to_polar_nodal(*x);
  }
  if (const auto* q = std::get_if<SemiEquinoctialState>(&state)) {
    return semi_to_polar_nodal(*q, field);
  }
  if (const auto* d = std::get_if<DelaunayState>(&state)) {
    PolarNodalState pn = keplerian_to_polar_nodal(delaunay_to_keplerian(*d, field), field);
    pn.R *= d->G / pn.Theta;
    pn.Theta = d->G;
    pn.N = d->H;
    return pn;
  }
  return keplerian_to_polar_nodal(to_keplerian(state, field), field);
}

SemiEquinoctialState to_semi_equinoctial(const OrbitState& state,
                                         const GravityField& field) {
  if (const auto* q = std::get_if<SemiEquinoctialState>(&state)) return *q;
  if (const auto* d = std::get_if<DelaunayState>(&state)) {
    return delaunay_to_semi(*d, field);
  }
  if (const auto* k = std::get_if<KeplerianElements>(&state)) {
    return keplerian_to_semi(*k, field);
  }
  return polar_nodal_to_semi(to_polar_nodal(state, field), field);
}

CartesianState to_cartesian(const OrbitState& state, const GravityField& field) {
  if (const auto* x = std::get_if<CartesianState>(&state)) return *x;
  return polar_nodal_to_cartesian(to_polar_nodal(state, field));
}

OrbitState convert(const OrbitState& state, Chart target, const GravityField& field) {
  switch (target) {
    case Chart::Delaunay:
      return to_delaunay(state, field);
    case Chart::Keplerian: {
      AnomalyKind kind = AnomalyKind::Mean;
      if (const auto* k = std::get_if<KeplerianElements>(&state)) kind = k->kind;
      return to_keplerian(state, field, kind);
    }
    case Chart::PolarNodal:
      return to_polar_nodal(state, field);
    case Chart::SemiEquinoctial:
      return to_semi_equinoctial(state, field);
    case Chart::Cartesian:
      return to_cartesian(state, field);
  }
  throw UsageError("unknown chart");
}

double main_problem_energy(const CartesianState& x, const GravityField& field) {
  const auto& p = x.position;
  const auto& v = x.velocity;
  const double r2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
  const double r = std::sqrt(r2);
  const double sin2_lat = p[2] * p[2] / r2;
  const double v2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  const double zonal = -(field.mu / r) * (field.Re * field.Re / r2) * field.J2 *
                       0.5 * (1.0 - 3.0 * sin2_lat);
  return 0.5 * v2 - field.mu / r + zonal;
}

}  // namespace mainprob
