#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mainprob/elements.hpp"
#include "mainprob/lie.hpp"
#include "mainprob/oracle.hpp"
#include "mainprob/secular.hpp"

namespace mainprob {

/// (S:P): secular terms and inverse corrections at order S, direct periodic
/// corrections at order P.
struct TruncationSpec {
  int S = 3;
  int P = 2;

  void validate() const;
  std::string label() const;  // "S:P"
  static TruncationSpec parse(std::string_view text);
};

struct AnalyticalEphemeris {
  SecularState secular;
  TruncationSpec spec;
  GravityField field;
  TheoryOptions options;
  InverseMethod inverse_method = InverseMethod::TruncatedSeries;

  TransformPlan direct_plan() const { return TransformPlan::full_direct(spec.P); }
};

/// Initializes the analytical solution from an osculating state at epoch t0.
AnalyticalEphemeris fit(const OrbitState& initial, const TruncationSpec& spec,
                        const GravityField& field, const TheoryOptions& options = {},
                        double t0 = 0.0,
                        InverseMethod method = InverseMethod::TruncatedSeries);

struct EphemerisPoint {
  PolarNodalState mean;        // double-prime secular point
  PolarNodalState osculating;  // after the direct corrections
  CartesianState cartesian;
};

EphemerisPoint ephemeris_point(const AnalyticalEphemeris& eph, double t);
CartesianState ephemeris(const AnalyticalEphemeris& eph, double t);
std::vector<CartesianState> ephemeris(const AnalyticalEphemeris& eph,
                                      const std::vector<double>& times);

/// Double-prime elements recovered from osculating samples by the full
/// inverse transformation at `order`.
struct MeanElementSeries {
  std::vector<double> a;    // L''^2 / mu
  std::vector<double> inc;  // acos(N / G'')
  std::vector<double> G;    // G'' (total angular momentum after both stages)
  std::vector<double> G_prime;  // G' after the inverse G-stage alone
  double mean_a = 0;
  double mean_inc = 0;
};

MeanElementSeries mean_element_series(const std::vector<CartesianState>& samples, int order,
                                      const GravityField& field,
                                      const TheoryOptions& options = {},
                                      InverseMethod method = InverseMethod::TruncatedSeries);

enum class ErrorQuantity {
  SmaRelative,
  InclinationRelative,
  RssPosition,
  RssVelocity,
  EnergyResidual,
};

std::string_view to_string(ErrorQuantity q);

/// Error series of the ephemeris against a reference trajectory sampled on
/// its own time grid. Mean-element quantities use order S of the ephemeris
/// and report (x - mean) / mean with the whole-arc mean; RSS quantities are
/// in km and km/s; the energy residual is relative to the first sample.
std::vector<double> error_series(const AnalyticalEphemeris& eph,
                                 const ReferenceTrajectory& reference, ErrorQuantity quantity);

}  // namespace mainprob
