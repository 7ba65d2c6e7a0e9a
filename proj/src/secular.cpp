#include "mainprob/secular.hpp"

#include <cmath>
#include <vector>

#include "mainprob/tables.hpp"

namespace mainprob {

namespace {

// A rate row with its (5 s^2 - 4)^m divisor cancelled as far as the
// polynomial allows; `power` divisors remain.
struct RateTerm {
  int m = 0, i = 0, power = 0;
  InclinationPolynomial poly;
};

std::vector<RateTerm> reduce(const InclinationTable& table) {
  std::vector<RateTerm> out;
  for (const auto& entry : table.entries) {
    RateTerm t{entry.index[0], entry.index[1], 0, entry.poly};
    t.power = t.m - divide_out_critical(t.poly, t.m);
    out.push_back(t);
  }
  return out;
}

struct ReducedRates {
  std::vector<RateTerm> Psi = reduce(theory_tables().Psi);
  std::vector<RateTerm> omega = reduce(theory_tables().omega);
  std::vector<RateTerm> Omega = reduce(theory_tables().Omega);
};

const ReducedRates& reduced_rates() {
  static const ReducedRates rates;
  return rates;
}

// sum over rows of order <= `order`: eps^m d^-power poly(s^2) eta^i
double rate_series(const std::vector<RateTerm>& rows, int order, double eps, double s2,
                   double eta) {
  const double inv_d = 1.0 / (5.0 * s2 - 4.0);
  double sum = 0.0;
  for (const auto& t : rows) {
    if (t.m > order) continue;
    double w = std::pow(eps, t.m) * std::pow(eta, t.i);
    for (int k = 0; k < t.power; ++k) w *= inv_d;
    sum += w * t.poly(s2);
  }
  return sum;
}

}  // namespace

SecularRates frequencies(double L, double G, double H, int order, const GravityField& field,
                         const TheoryOptions& options) {
  if (order < 1 || order > kMaxOrder) throw UsageError("secular order must be 1..3");
  if (!(L > 0.0) || !(G > 0.0) || G > L * (1.0 + 1e-15) || std::abs(H) > G) {
    throw UsageError("secular frequencies need 0 < G <= L and |H| <= G");
  }
  const double c = H / G;
  const double s2 = (1.0 - c) * (1.0 + c);
  if (order == 3) check_resonance(s2, options.guard);

  const auto& tab = reduced_rates();
  const double eta = G / L;
  const double n = field.mu * field.mu / (L * L * L);
  const double p = G * G / field.mu;
  const double eps = field.J2 * field.Re * field.Re / (4.0 * p * p);

  SecularRates out;
  out.near_resonance = in_warning_band(s2, options);
  out.nF = n + n * rate_series(tab.Psi, order, eps, s2, eta);
  out.ng = n * rate_series(tab.omega, order, eps, s2, eta);
  out.nh = n * c * rate_series(tab.Omega, order, eps, s2, eta);
  return out;
}

void SecularState::validate() const {
  if (!(C0 * C0 + S0 * S0 < 1.0) || !(L > 0.0) || !(std::abs(H) < L) ||
      !std::isfinite(rates.nF) || !std::isfinite(rates.ng) || !std::isfinite(rates.nh)) {
    throw UsageError("invalid secular state");
  }
}

SecularState make_secular_state(const PolarNodalState& y, double t0, int order,
                                const GravityField& field, const TheoryOptions& options) {
  const SemiEquinoctialState q = to_semi_equinoctial(y, field);
  SecularState sec;
  sec.t0 = t0;
  sec.F0 = q.F;
  sec.C0 = q.C;
  sec.S0 = q.S;
  sec.L = q.L;
  sec.G = y.Theta;
  sec.h0 = q.h;
  sec.H = q.H;
  sec.order = order;
  sec.rates = frequencies(sec.L, sec.G, sec.H, order, field, options);
  sec.validate();
  return sec;
}

SemiEquinoctialState propagate_secular(const SecularState& sec, double t) {
  const double dt = t - sec.t0;
  const double cg = std::cos(sec.rates.ng * dt);
  const double sg = std::sin(sec.rates.ng * dt);
  SemiEquinoctialState q;
  q.F = sec.F0 + sec.rates.nF * dt;
  q.C = sec.C0 * cg - sec.S0 * sg;
  q.S = sec.S0 * cg + sec.C0 * sg;
  q.L = sec.L;
  q.h = sec.h0 + sec.rates.nh * dt;
  q.H = sec.H;
  return q;
}

PolarNodalState secular_polar_nodal(const SecularState& sec, double t,
                                    const GravityField& field) {
  return to_polar_nodal(propagate_secular(sec, t), field);
}

}  // namespace mainprob
