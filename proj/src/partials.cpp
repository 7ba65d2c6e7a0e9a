#include <algorithm>
#include <cmath>

#include "mainprob/elements.hpp"
#include "mainprob/kepler.hpp"

namespace mainprob {

namespace {

constexpr double kDegenerateEccentricity = 1e-9;

// Gradient indices in (ell, g, h, L, G, H) order.
enum : int { iell = 0, ig = 1, ih = 2, iL = 3, iG = 4, iH = 5 };

}  // namespace

const PartialsRow& PartialsTable::row(BasisFunction which) const {
  const PartialsRow& out = rows[static_cast<int>(which)];
  if (!out.valid) {
    throw DegeneratePartials("partials undefined at this state (e or sin I too small)");
  }
  return out;
}

PartialsTable partials_at(const DelaunayState& d, const GravityField& field) {
  const double mu = field.mu;
  if (!(d.L > 0.0) || !(d.G > 0.0) || d.G > d.L || std::abs(d.H) > d.G) {
    throw SingularChart("Delaunay actions violate L > 0, |H| <= G <= L");
  }
  PartialsTable t;
  auto set = [&t](BasisFunction b) -> PartialsRow& {
    return t.rows[static_cast<int>(b)];
  };

  const double L = d.L, G = d.G, H = d.H;
  const double a = L * L / mu;
  const double eta = G / L;
  const double e = std::sqrt(std::max(0.0, (L - G) * (L + G))) / L;
  const double p = G * G / mu;
  const double c = H / G;
  const double s = std::sqrt(std::max(0.0, (1.0 - c) * (1.0 + c)));
  const double n = mu * mu / (L * L * L);
  const double beta = 1.0 / (1.0 + eta);
  const double E = solve_kepler(d.ell, e);
  const double f = true_from_eccentric(E, e);
  const double r = a * (1.0 - e * std::cos(E));
  const bool circular = e < kDegenerateEccentricity;

  auto& ra = set(BasisFunction::a);
  ra.value = a;
  ra.gradient[iL] = 2.0 * L / mu;

  auto& reta = set(BasisFunction::eta);
  reta.value = eta;
  reta.gradient[iL] = -G / (L * L);
  reta.gradient[iG] = 1.0 / L;

  auto& re = set(BasisFunction::e);
  re.value = e;
  re.valid = !circular;
  if (!circular) {
    re.gradient[iL] = eta * eta / (e * L);
    re.gradient[iG] = -eta / (e * L);
  }

  auto& rp = set(BasisFunction::p);
  rp.value = p;
  rp.gradient[iG] = 2.0 * G / mu;

  auto& rc = set(BasisFunction::c);
  rc.value = c;
  rc.gradient[iG] = -H / (G * G);
  rc.gradient[iH] = 1.0 / G;

  auto& rs = set(BasisFunction::s);
  rs.value = s;
  rs.valid = s > 0.0;
  if (rs.valid) {
    rs.gradient[iG] = c * c / (s * G);
    rs.gradient[iH] = -c / (s * G);
  }

  auto& rn = set(BasisFunction::n);
  rn.value = n;
  rn.gradient[iL] = -3.0 * n / L;

  auto& rb = set(BasisFunction::beta);
  rb.value = beta;
  rb.gradient[iL] = -beta * beta * reta.gradient[iL];
  rb.gradient[iG] = -beta * beta * reta.gradient[iG];

  // Eccentric anomaly: dE (1 - e cos E) = d ell + sin E de.
  auto& rE = set(BasisFunction::E);
  rE.value = E;
  rE.gradient[iell] = a / r;
  rE.valid = !circular;
  const double dE_de = std::sin(E) * a / r;

  // r = a (1 - e cos E) at fixed ell: dr/de = -a cos E + a e sin E dE/de.
  auto& rr = set(BasisFunction::r);
  rr.value = r;
  rr.gradient[iell] = a * e * std::sin(E) * a / r;
  rr.valid = !circular;
  const double dr_de = -a * std::cos(E) + a * e * std::sin(E) * dE_de;

  // True anomaly: df = (a/r)^2 eta d ell + sin f (2 + e cos f) / eta^2 de.
  auto& rf = set(BasisFunction::f);
  rf.value = f;
  rf.gradient[iell] = (a / r) * (a / r) * eta;
  rf.valid = !circular;
  const double df_de = std::sin(f) * (2.0 + e * std::cos(f)) / (eta * eta);

  auto& rphi = set(BasisFunction::phi);
  rphi.value = f - d.ell;
  rphi.gradient[iell] = rf.gradient[iell] - 1.0;
  rphi.valid = !circular;

  if (!circular) {
    for (int k : {iL, iG}) {
      const double de = re.gradient[k];
      rE.gradient[k] = dE_de * de;
      rr.gradient[k] = dr_de * de + (r / a) * ra.gradient[k];
      rf.gradient[k] = df_de * de;
      rphi.gradient[k] = rf.gradient[k];
    }
  }
  return t;
}

}  // namespace mainprob
