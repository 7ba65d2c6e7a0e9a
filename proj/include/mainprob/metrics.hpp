#pragma once

// Summary statistics of error series used by the experiment reports.

#include <vector>

#include "mainprob/elements.hpp"
#include "mainprob/oracle.hpp"

namespace mainprob {

/// max |v_i - mean(v)|.
double max_abs_deviation(const std::vector<double>& v);

struct LinearFit {
  double slope = 0;
  double intercept = 0;
};

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

/// Half the peak-to-peak range of y after removing its least-squares line.
double detrended_half_range(const std::vector<double>& x, const std::vector<double>& y);

/// Position error of `model` against `reference` in the radial, along-track
/// and cross-track frame of the reference (km).
std::vector<std::array<double, 3>> rtn_errors(const std::vector<CartesianState>& model,
                                              const std::vector<CartesianState>& reference);

/// Growth rate (km per unit of `times`) of the secular part of an error: the
/// RTN error is averaged over consecutive windows of length `period`, a line
/// is fitted to each averaged component, and the norm of the three slopes is
/// returned.
double secular_drift_rate(const std::vector<double>& times,
                          const std::vector<std::array<double, 3>>& rtn, double period);

/// Times of the local minima of |r| along the reference (perigee passages).
std::vector<double> perigee_passages(const ReferenceTrajectory& reference);

/// For every perigee passage with a full window of +-period/2 inside the
/// series, the offset of the maximum of |v - mean(v)| from that passage;
/// returns the largest |offset| / period, or a negative value when no
/// window fits.
double max_peak_offset(const std::vector<double>& times, const std::vector<double>& v,
                       const std::vector<double>& perigees, double period);

/// Keplerian period of an osculating state.
double orbital_period(const CartesianState& state, const GravityField& field);

}  // namespace mainprob
