#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mainprob/elements.hpp"
#include "mainprob/gravity.hpp"

namespace mainprob {

struct Conserved {
  double energy = 0;
  double Theta = 0;  // |r x v|
  double N = 0;      // (r x v)_z
};

/// Energy and angular momenta of the main problem at a Cartesian state.
Conserved conserved(const CartesianState& state, const GravityField& field);

/// Acceleration of the J2 main problem.
std::array<double, 3> main_problem_acceleration(const std::array<double, 3>& position,
                                                const GravityField& field);

enum class OraclePrecision { Extended, Double };

struct OracleOptions {
  double tol = 1e-13;            // requested relative accuracy, in [1e-14, 1e-10]
  OraclePrecision precision = OraclePrecision::Extended;
  double max_drift = 1e-12;      // energy and N budget, relative
  bool check_drift = true;
  long max_steps = 50'000'000;
};

struct IntegratorStats {
  long accepted = 0;
  long rejected = 0;
  long evaluations = 0;
};

struct ReferenceTrajectory {
  std::vector<double> times;
  std::vector<CartesianState> states;
  std::vector<double> energy;
  std::vector<double> N;
  double tol = 0;
  IntegratorStats stats;
  double energy_drift = 0;  // max |E - E0| / |E0|
  double N_drift = 0;       // max |N - N0| / |N0|
};

/// Integrates the main problem with an embedded 8(5,3) Runge-Kutta pair and
/// returns dense output at exactly `times` (monotone, starting at or after
/// the initial epoch `t0`). Throws IntegrationFailure on step underflow and
/// AccuracyError when the conserved quantities drift beyond the budget.
ReferenceTrajectory integrate(const CartesianState& initial, double t0,
                              const std::vector<double>& times, const GravityField& field,
                              const OracleOptions& options = {});

/// CSV with columns t,x,y,z,vx,vy,vz,energy,N.
void write_trajectory_csv(std::ostream& out, const ReferenceTrajectory& trajectory);
ReferenceTrajectory read_trajectory_csv(std::istream& in);

}  // namespace mainprob
