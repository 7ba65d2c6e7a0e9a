#pragma once

// End-to-end runs of a test case against the oracle: the data behind the
// CLI artifacts and the acceptance report.

#include <optional>
#include <string>
#include <vector>

#include "mainprob/cases.hpp"
#include "mainprob/metrics.hpp"
#include "mainprob/propagator.hpp"

namespace mainprob {

struct ExperimentConfig {
  std::string case_name = "custom";
  KeplerianElements elements;
  std::vector<TruncationSpec> specs{{3, 2}};
  double days = 30;
  double cadence = 60;          // s, RSS samples
  double residual_hours = 24;   // length of the mean-element residual window
  double residual_cadence = 60; // s
  GravityField field;
  TheoryOptions options;
  OracleOptions oracle;

  void validate() const;
};

struct SpecResult {
  TruncationSpec spec;
  AnalyticalEphemeris ephemeris;

  // mean elements at order S on the residual window
  std::vector<double> sma_relative;
  std::vector<double> inclination_relative;
  double mean_a = 0;
  double mean_inc = 0;

  // on the full arc
  std::vector<double> rss_position;  // km
  std::vector<double> rss_velocity;  // km/s
  std::vector<std::array<double, 3>> rtn;  // km

  double sma_amplitude = 0;           // max |a - mean| (km)
  double sma_relative_amplitude = 0;  // the same over mean
  double rss_start = 0;               // max RSS over the first revolution (km)
  double rss_end = 0;                 // km
  double rss_oscillation = 0;         // detrended half range (km)
  double drift_per_day = 0;           // km/day
  double peak_offset = -1;            // fraction of a period
};

struct ExperimentResult {
  ExperimentConfig config;
  double period = 0;  // s, osculating at epoch
  std::vector<double> times;
  std::vector<double> residual_times;
  ReferenceTrajectory reference;
  std::vector<double> perigees;
  std::vector<SpecResult> specs;
};

/// Fits every spec (so the resonance guard trips before any integration),
/// integrates or adopts the reference, and evaluates every series.
/// A supplied reference must sample exactly the arc and cadence of the
/// configuration.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                std::optional<ReferenceTrajectory> reference = std::nullopt);

/// Sample grids of a configuration.
std::vector<double> arc_times(const ExperimentConfig& config);
std::vector<double> residual_times(const ExperimentConfig& config, double period);

struct Verdict {
  std::string case_name;
  std::string spec;
  std::string quantity;
  std::string unit;
  double value = 0;
  std::optional<double> lo, hi;  // absent bounds are open

  bool has_band() const { return lo.has_value() || hi.has_value(); }
  bool pass() const;
};

/// Built-in acceptance bands for the named cases; other quantities are
/// reported without a band.
std::vector<Verdict> verdicts(const ExperimentResult& result);

}  // namespace mainprob
