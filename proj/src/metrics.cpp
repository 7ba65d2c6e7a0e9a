#include "mainprob/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mainprob {

namespace {

double mean_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double norm(const std::array<double, 3>& a) { return std::hypot(a[0], a[1], a[2]); }

std::array<double, 3> cross(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace

double max_abs_deviation(const std::vector<double>& v) {
  const double m = mean_of(v);
  double out = 0.0;
  for (double x : v) out = std::max(out, std::abs(x - m));
  return out;
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw UsageError("linear fit needs two or more points");
  const double mx = mean_of(x), my = mean_of(y);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LinearFit f;
  f.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  f.intercept = my - f.slope * mx;
  return f;
}

double detrended_half_range(const std::vector<double>& x, const std::vector<double>& y) {
  const LinearFit f = linear_fit(x, y);
  double lo = INFINITY, hi = -INFINITY;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return 0.5 * (hi - lo);
}

std::vector<std::array<double, 3>> rtn_errors(const std::vector<CartesianState>& model,
                                              const std::vector<CartesianState>& reference) {
  if (model.size() != reference.size()) throw UsageError("error series need equal grids");
  std::vector<std::array<double, 3>> out;
  out.reserve(model.size());
  for (std::size_t i = 0; i < model.size(); ++i) {
    const auto& r = reference[i].position;
    const auto& v = reference[i].velocity;
    const std::array<double, 3> d{model[i].position[0] - r[0], model[i].position[1] - r[1],
                                  model[i].position[2] - r[2]};
    const auto h = cross(r, v);
    const auto t = cross(h, r);
    out.push_back({dot(d, r) / norm(r), dot(d, t) / norm(t), dot(d, h) / norm(h)});
  }
  return out;
}

double secular_drift_rate(const std::vector<double>& times,
                          const std::vector<std::array<double, 3>>& rtn, double period) {
  if (times.size() != rtn.size() || times.empty()) throw UsageError("drift needs matching series");
  std::vector<double> tm;
  std::array<std::vector<double>, 3> comp;
  std::size_t i = 0;
  while (i < times.size()) {
    const double start = times[i];
    if (start + period > times.back()) break;
    std::array<double, 3> sum{};
    double tsum = 0.0;
    std::size_t count = 0;
    for (; i < times.size() && times[i] < start + period; ++i, ++count) {
      for (int k = 0; k < 3; ++k) sum[k] += rtn[i][k];
      tsum += times[i];
    }
    tm.push_back(tsum / count);
    for (int k = 0; k < 3; ++k) comp[k].push_back(sum[k] / count);
  }
  if (tm.size() < 2) throw UsageError("drift needs at least two full periods");
  const double sr = linear_fit(tm, comp[0]).slope;
  const double st = linear_fit(tm, comp[1]).slope;
  const double sn = linear_fit(tm, comp[2]).slope;
  return std::hypot(sr, st, sn);
}

std::vector<double> perigee_passages(const ReferenceTrajectory& ref) {
  std::vector<double> r;
  for (const auto& s : ref.states) r.push_back(norm(s.position));
  std::vector<double> out;
  for (std::size_t i = 1; i + 1 < r.size(); ++i) {
    if (r[i] <= r[i - 1] && r[i] < r[i + 1]) out.push_back(ref.times[i]);
  }
  return out;
}

double max_peak_offset(const std::vector<double>& times, const std::vector<double>& v,
                       const std::vector<double>& perigees, double period) {
  const double m = mean_of(v);
  double worst = -1.0;
  for (double tp : perigees) {
    if (tp - 0.5 * period < times.front() || tp + 0.5 * period > times.back()) continue;
    double best = -1.0, at = tp;
    for (std::size_t i = 0; i < times.size(); ++i) {
      if (times[i] < tp - 0.5 * period || times[i] > tp + 0.5 * period) continue;
      const double d = std::abs(v[i] - m);
      if (d > best) {
        best = d;
        at = times[i];
      }
    }
    worst = std::max(worst, std::abs(at - tp) / period);
  }
  return worst;
}

double orbital_period(const CartesianState& state, const GravityField& field) {
  const double r = norm(state.position);
  const double v2 = dot(state.velocity, state.velocity);
  const double inv_a = 2.0 / r - v2 / field.mu;
  if (!(inv_a > 0.0)) throw SingularChart("orbit is not elliptic");
  const double a = 1.0 / inv_a;
  return kTwoPi * std::sqrt(a * a * a / field.mu);
}

}  // namespace mainprob
