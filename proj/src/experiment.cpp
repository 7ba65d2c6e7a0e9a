#include "mainprob/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>

namespace mainprob {

void ExperimentConfig::validate() const {
  if (!(days > 0) || !std::isfinite(days)) throw UsageError("arc length must be positive");
  if (!(cadence > 0) || !std::isfinite(cadence)) throw UsageError("cadence must be positive");
  if (!(residual_hours > 0) || !(residual_cadence > 0)) {
    throw UsageError("residual window and cadence must be positive");
  }
  if (specs.empty()) throw UsageError("at least one truncation spec is required");
  for (const auto& s : specs) s.validate();
  field.validate();
  if (!(elements.a > 0) || !(elements.e >= 0 && elements.e < 1)) {
    throw UsageError("initial elements must describe an elliptic orbit");
  }
  if (!(options.guard > 0)) throw UsageError("resonance guard must be positive");
  if (!(oracle.tol >= 1e-14 && oracle.tol <= 1e-10)) {
    throw UsageError("oracle tolerance must lie in [1e-14, 1e-10]");
  }
}

namespace {

std::vector<double> uniform_grid(double length, double step) {
  std::vector<double> t;
  const auto n = static_cast<long>(std::floor(length / step * (1 + 1e-12)));
  for (long i = 0; i <= n; ++i) t.push_back(static_cast<double>(i) * step);
  return t;
}

std::vector<double> merged(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<CartesianState> pick(const ReferenceTrajectory& ref, const std::vector<double>& t) {
  std::vector<CartesianState> out;
  out.reserve(t.size());
  std::size_t j = 0;
  for (double x : t) {
    while (ref.times[j] != x) ++j;
    out.push_back(ref.states[j]);
  }
  return out;
}

SpecResult evaluate(const AnalyticalEphemeris& eph, const ExperimentResult& r,
                    const std::vector<CartesianState>& arc,
                    const MeanElementSeries& mean) {
  SpecResult s;
  s.spec = eph.spec;
  s.ephemeris = eph;
  s.mean_a = mean.mean_a;
  s.mean_inc = mean.mean_inc;
  for (std::size_t i = 0; i < mean.a.size(); ++i) {
    s.sma_relative.push_back((mean.a[i] - mean.mean_a) / mean.mean_a);
    s.inclination_relative.push_back((mean.inc[i] - mean.mean_inc) / mean.mean_inc);
  }
  s.sma_relative_amplitude = max_abs_deviation(s.sma_relative);
  s.sma_amplitude = s.sma_relative_amplitude * mean.mean_a;

  const std::vector<CartesianState> model = ephemeris(eph, r.times);
  s.rtn = rtn_errors(model, arc);
  for (std::size_t i = 0; i < model.size(); ++i) {
    const auto& a = model[i];
    const auto& b = arc[i];
    s.rss_position.push_back(std::hypot(a.position[0] - b.position[0],
                                        a.position[1] - b.position[1],
                                        a.position[2] - b.position[2]));
    s.rss_velocity.push_back(std::hypot(a.velocity[0] - b.velocity[0],
                                        a.velocity[1] - b.velocity[1],
                                        a.velocity[2] - b.velocity[2]));
    if (r.times[i] <= r.period) s.rss_start = std::max(s.rss_start, s.rss_position[i]);
  }
  s.rss_end = s.rss_position.back();
  if (r.times.size() >= 2) s.rss_oscillation = detrended_half_range(r.times, s.rss_position);
  if (r.times.back() >= 2 * r.period) {
    s.drift_per_day = secular_drift_rate(r.times, s.rtn, r.period) * kSecondsPerDay;
  }
  s.peak_offset = max_peak_offset(r.residual_times, s.sma_relative, r.perigees, r.period);
  return s;
}

}  // namespace

std::vector<double> arc_times(const ExperimentConfig& config) {
  return uniform_grid(config.days * kSecondsPerDay, config.cadence);
}

std::vector<double> residual_times(const ExperimentConfig& config, double period) {
  const double window = std::min(std::max(config.residual_hours * 3600.0, 3 * period),
                                 config.days * kSecondsPerDay);
  return uniform_grid(window, config.residual_cadence);
}

ExperimentResult run_experiment(const ExperimentConfig& config,
                                std::optional<ReferenceTrajectory> reference) {
  config.validate();
  ExperimentResult r;
  r.config = config;

  std::vector<AnalyticalEphemeris> fits;
  for (const auto& spec : config.specs) {
    fits.push_back(fit(config.elements, spec, config.field, config.options));
  }

  const CartesianState x0 = to_cartesian(config.elements, config.field);
  r.period = orbital_period(x0, config.field);
  r.times = arc_times(config);
  r.residual_times = residual_times(config, r.period);
  const std::vector<double> all = merged(r.times, r.residual_times);
  if (reference) {
    if (reference->times != all || reference->states.size() != all.size()) {
      throw UsageError("reference trajectory does not sample the configured grid");
    }
    r.reference = std::move(*reference);
  } else {
    r.reference = integrate(x0, 0.0, all, config.field, config.oracle);
  }
  r.perigees = perigee_passages(r.reference);

  const std::vector<CartesianState> arc = pick(r.reference, r.times);
  const std::vector<CartesianState> window = pick(r.reference, r.residual_times);

  std::map<int, std::future<MeanElementSeries>> means;
  for (const auto& eph : fits) {
    const int S = eph.spec.S;
    if (means.count(S)) continue;
    means.emplace(S, std::async(std::launch::async, [&, S] {
                    return mean_element_series(window, S, config.field, config.options,
                                               eph.inverse_method);
                  }));
  }
  std::map<int, MeanElementSeries> ready;
  for (auto& [S, f] : means) ready.emplace(S, f.get());

  std::vector<std::future<SpecResult>> jobs;
  for (const auto& eph : fits) {
    jobs.push_back(std::async(std::launch::async, [&] {
      return evaluate(eph, r, arc, ready.at(eph.spec.S));
    }));
  }
  for (auto& j : jobs) r.specs.push_back(j.get());
  return r;
}

bool Verdict::pass() const {
  if (!std::isfinite(value)) return false;
  if (lo && value < *lo) return false;
  if (hi && value > *hi) return false;
  return true;
}

std::vector<Verdict> verdicts(const ExperimentResult& result) {
  const std::string& name = result.config.case_name;
  std::vector<Verdict> out;
  std::vector<int> seen_orders;
  for (const SpecResult& s : result.specs) {
    const std::string label = s.spec.label();
    const int S = s.spec.S;
    const int P = s.spec.P;
    if (std::find(seen_orders.begin(), seen_orders.end(), S) == seen_orders.end()) {
      seen_orders.push_back(S);
      const std::string order = "order " + std::to_string(S);
      Verdict v{name, order, "sma residual amplitude", "m", s.sma_amplitude * 1e3, {}, {}};
      if (name == "prisma" && S == 1) {
        v.lo = 1;
        v.hi = 10;
      } else if (name == "prisma" && S == 2) {
        v.unit = "mm";
        v.value = s.sma_amplitude * 1e6;
        v.lo = 0.3;
        v.hi = 10;
      } else if (S == 3) {
        v.quantity = "relative sma residual";
        v.unit = "";
        v.value = s.sma_relative_amplitude;
        if (name == "prisma") v.hi = 1e-10;
      }
      out.push_back(v);
    }

    Verdict end{name, label, "RSS at end of arc", "m", s.rss_end * 1e3, {}, {}};
    if (name == "prisma" && S == 1 && P == 1) {
      end.unit = "km";
      end.value = s.rss_end;
      end.lo = 3;
      end.hi = 100;
    } else if (name == "prisma" && S == 2 && P == 1) {
      end.lo = 10;
      end.hi = 100;
    } else if (name == "prisma" && S == 3 && P == 2) {
      out.push_back({name, label, "RSS over first revolution", "cm", s.rss_start * 1e5, {}, 3.0});
      end.unit = "cm";
      end.value = s.rss_end * 1e5;
      end.lo = 3;
      end.hi = 30;
    }
    out.push_back(end);

    if (name == "gto" && S == 2 && P == 1) {
      out.push_back({name, label, "RSS oscillation amplitude", "m", s.rss_oscillation * 1e3, 10.0,
                     100.0});
      out.push_back({name, label, "RSS secular trend", "m/day", s.drift_per_day * 1e3, 0.1, 2.5});
      out.push_back({name, label, "residual peak offset from perigee", "period",
                     s.peak_offset, 0.0, 0.05});
    }
  }
  return out;
}

}  // namespace mainprob
