#include "mainprob/propagator.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

namespace mainprob {

void TruncationSpec::validate() const {
  if (S < 1 || S > kMaxOrder) throw UsageError("truncation S must be 1..3");
  if (P < 0 || P > S) throw UsageError("truncation P must satisfy 0 <= P <= S");
}

std::string TruncationSpec::label() const {
  return std::to_string(S) + ":" + std::to_string(P);
}

TruncationSpec TruncationSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw UsageError("truncation must read S:P");
  TruncationSpec spec;
  const auto parse_int = [](std::string_view s, int& out) {
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      throw UsageError("truncation must read S:P with integer orders");
    }
  };
  parse_int(text.substr(0, colon), spec.S);
  parse_int(text.substr(colon + 1), spec.P);
  spec.validate();
  return spec;
}

AnalyticalEphemeris fit(const OrbitState& initial, const TruncationSpec& spec,
                        const GravityField& field, const TheoryOptions& options, double t0,
                        InverseMethod method) {
  spec.validate();
  field.validate();
  const PolarNodalState osc = to_polar_nodal(initial, field);
  const PolarNodalState mean =
      correct_state(osc, TransformPlan::full_inverse(spec.S, method), field, options);
  AnalyticalEphemeris eph;
  eph.secular = make_secular_state(mean, t0, spec.S, field, options);
  eph.spec = spec;
  eph.field = field;
  eph.options = options;
  eph.inverse_method = method;
  return eph;
}

EphemerisPoint ephemeris_point(const AnalyticalEphemeris& eph, double t) {
  EphemerisPoint out;
  out.mean = secular_polar_nodal(eph.secular, t, eph.field);
  out.osculating = correct_state(out.mean, eph.direct_plan(), eph.field, eph.options);
  out.cartesian = to_cartesian(out.osculating, eph.field);
  return out;
}

CartesianState ephemeris(const AnalyticalEphemeris& eph, double t) {
  return ephemeris_point(eph, t).cartesian;
}

std::vector<CartesianState> ephemeris(const AnalyticalEphemeris& eph,
                                      const std::vector<double>& times) {
  std::vector<CartesianState> out;
  out.reserve(times.size());
  for (double t : times) out.push_back(ephemeris(eph, t));
  return out;
}

MeanElementSeries mean_element_series(const std::vector<CartesianState>& samples, int order,
                                      const GravityField& field, const TheoryOptions& options,
                                      InverseMethod method) {
  const TransformPlan to_prime{
      {Normalization::TotalAngularMomentum}, order, Direction::Inverse, method};
  const TransformPlan to_dprime = TransformPlan::full_inverse(order, method);
  MeanElementSeries s;
  for (const auto& x : samples) {
    const PolarNodalState osc = to_polar_nodal(x, field);
    const PolarNodalState prime = correct_state(osc, to_prime, field, options);
    const PolarNodalState dprime = correct_state(osc, to_dprime, field, options);
    const SemiEquinoctialState q = to_semi_equinoctial(dprime, field);
    s.a.push_back(q.L * q.L / field.mu);
    s.inc.push_back(std::acos(std::clamp(dprime.N / dprime.Theta, -1.0, 1.0)));
    s.G.push_back(dprime.Theta);
    s.G_prime.push_back(prime.Theta);
  }
  if (!samples.empty()) {
    const double n = static_cast<double>(samples.size());
    s.mean_a = std::accumulate(s.a.begin(), s.a.end(), 0.0) / n;
    s.mean_inc = std::accumulate(s.inc.begin(), s.inc.end(), 0.0) / n;
  }
  return s;
}

std::string_view to_string(ErrorQuantity q) {
  switch (q) {
    case ErrorQuantity::SmaRelative: return "sma_relative";
    case ErrorQuantity::InclinationRelative: return "inclination_relative";
    case ErrorQuantity::RssPosition: return "rss_position";
    case ErrorQuantity::RssVelocity: return "rss_velocity";
    case ErrorQuantity::EnergyResidual: return "energy_residual";
  }
  return "unknown";
}

std::vector<double> error_series(const AnalyticalEphemeris& eph,
                                 const ReferenceTrajectory& ref, ErrorQuantity quantity) {
  if (ref.times.size() != ref.states.size()) {
    throw UsageError("reference trajectory times and states differ in length");
  }
  std::vector<double> out;
  out.reserve(ref.times.size());
  switch (quantity) {
    case ErrorQuantity::SmaRelative:
    case ErrorQuantity::InclinationRelative: {
      const MeanElementSeries m =
          mean_element_series(ref.states, eph.spec.S, eph.field, eph.options, eph.inverse_method);
      const bool sma = quantity == ErrorQuantity::SmaRelative;
      const auto& v = sma ? m.a : m.inc;
      const double mean = sma ? m.mean_a : m.mean_inc;
      for (double x : v) out.push_back((x - mean) / mean);
      break;
    }
    case ErrorQuantity::RssPosition:
    case ErrorQuantity::RssVelocity: {
      const bool pos = quantity == ErrorQuantity::RssPosition;
      for (std::size_t i = 0; i < ref.times.size(); ++i) {
        const CartesianState x = ephemeris(eph, ref.times[i]);
        const auto& a = pos ? x.position : x.velocity;
        const auto& b = pos ? ref.states[i].position : ref.states[i].velocity;
        out.push_back(std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]));
      }
      break;
    }
    case ErrorQuantity::EnergyResidual: {
      double e0 = 0.0;
      for (std::size_t i = 0; i < ref.times.size(); ++i) {
        const double e = main_problem_energy(ephemeris(eph, ref.times[i]), eph.field);
        if (i == 0) e0 = e;
        out.push_back((e - e0) / std::abs(e0));
      }
      break;
    }
  }
  return out;
}

}  // namespace mainprob
