#pragma once

#include "mainprob/elements.hpp"
#include "mainprob/gravity.hpp"
#include "mainprob/theory.hpp"

namespace mainprob {

struct SecularRates {
  double nF = 0;  // rate of F = ell + g
  double ng = 0;  // perigee
  double nh = 0;  // node
  bool near_resonance = false;  // |5 s^2 - 4| inside the warning band
};

/// Secular frequencies of the double-prime Hamiltonian truncated at `order`
/// (1..3), from the Psi, omega and Omega tables.
SecularRates frequencies(double L, double G, double H, int order, const GravityField& field,
                         const TheoryOptions& options = {});

/// Closed-form secular motion in semi-equinoctial double-prime variables.
struct SecularState {
  double t0 = 0;        // epoch, s
  double F0 = 0;        // mean argument of latitude, rad
  double C0 = 0, S0 = 0;
  double L = 0;
  double G = 0;         // double-prime total angular momentum
  double h0 = 0;
  double H = 0;
  SecularRates rates;
  int order = 1;

  void validate() const;
};

/// Builds the secular state of a double-prime polar-nodal point at t0.
SecularState make_secular_state(const PolarNodalState& double_prime, double t0, int order,
                                const GravityField& field, const TheoryOptions& options = {});

/// Secular point at time t. F and h are not wrapped.
SemiEquinoctialState propagate_secular(const SecularState& sec, double t);

/// Double-prime polar-nodal variables of the secular point at time t.
PolarNodalState secular_polar_nodal(const SecularState& sec, double t, const GravityField& field);

}  // namespace mainprob
