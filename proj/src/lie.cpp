#include "mainprob/lie.hpp"

#include <cmath>

#include "mainprob/angles.hpp"

namespace mainprob {

namespace {

constexpr double kInverseTolerance = 1e-13;
constexpr int kInverseMaxIterations = 20;

OrbitBasis<Jet> jet_basis(const std::array<double, 6>& point, int degree,
                          CanonicalChart chart, const GravityField& field) {
  const auto vars = coordinate_jets(point, degree);
  return chart == CanonicalChart::Delaunay ? basis_from_delaunay(vars, field)
                                           : basis_from_polar_nodal(vars, field);
}

double binomial(int n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

double poisson_bracket(const StateFunction& F, const StateFunction& W,
                       const DelaunayState& state, const GravityField& field,
                       CanonicalChart chart) {
  std::array<double, 6> point = delaunay_coordinates(state);
  if (chart == CanonicalChart::PolarNodal) {
    point = polar_nodal_coordinates(to_polar_nodal(state, field));
  }
  const OrbitBasis<Jet> b = jet_basis(point, 1, chart, field);
  return poisson_bracket(F(b), W(b)).value();
}

std::vector<double> deprit_triangle(std::span<const Jet> f, std::span<const Jet> w,
                                    int order) {
  // rows[q][n] = F_{n,q}; row q has order - q + 1 entries.
  std::vector<std::vector<Jet>> rows(order + 1);
  rows[0].assign(f.begin(), f.begin() + order + 1);
  for (int q = 1; q <= order; ++q) {
    const auto& prev = rows[q - 1];
    auto& row = rows[q];
    for (int n = 0; n + q <= order; ++n) {
      Jet acc = prev[n + 1];
      for (int m = 0; m <= n; ++m) {
        acc += binomial(n, m) * poisson_bracket(prev[n - m], w[m]);
      }
      row.push_back(acc);
    }
  }
  std::vector<double> out(order + 1);
  for (int q = 0; q <= order; ++q) out[q] = rows[q][0].value();
  return out;
}

double deprit_sum(const std::vector<double>& terms) {
  double sum = 0.0;
  double factorial = 1.0;
  for (std::size_t q = 0; q < terms.size(); ++q) {
    if (q > 0) factorial *= static_cast<double>(q);
    sum += terms[q] / factorial;
  }
  return sum;
}

std::vector<Jet> generator_jets(Normalization stage, int order,
                                const std::array<double, 6>& point,
                                CanonicalChart chart, const GravityField& field) {
  std::vector<Jet> w;
  if (order < 1) return w;
  const OrbitBasis<Jet> full = jet_basis(point, order, chart, field);
  for (int k = 1; k <= order; ++k) {
    const OrbitBasis<Jet> b = full.truncated(order - k + 1);
    w.push_back(theory::generator(stage, k, b));
  }
  return w;
}

std::vector<double> transformed_hamiltonian(Normalization stage, int order,
                                            const std::array<double, 6>& point,
                                            CanonicalChart chart,
                                            const GravityField& field) {
  const OrbitBasis<Jet> full = jet_basis(point, order, chart, field);
  std::vector<Jet> f;
  std::vector<Jet> w;
  for (int n = 0; n <= order; ++n) {
    f.push_back(theory::input_hamiltonian(stage, n, full.truncated(order - n)));
  }
  for (int k = 1; k <= order; ++k) {
    w.push_back(theory::generator(stage, k, full.truncated(order - k + 1)));
  }
  return deprit_triangle(f, w, order);
}

PolarNodalState direct_stage(const PolarNodalState& y, Normalization stage, int order,
                             const GravityField& field, const TheoryOptions& options) {
  if (order <= 0) return y;
  if (order > kMaxOrder) throw UsageError("order above 3 is not available");
  const double c = y.N / y.Theta;
  check_resonance((1.0 - c) * (1.0 + c), options.guard);

  const auto point = polar_nodal_coordinates(y);
  const std::vector<Jet> w =
      generator_jets(stage, order, point, CanonicalChart::PolarNodal, field);
  std::array<double, 6> out{};
  std::vector<Jet> f(order + 1, Jet(0.0));
  for (int i = 0; i < 6; ++i) {
    f[0] = Jet::variable(point[i], i, order);
    out[i] = deprit_sum(deprit_triangle(f, w, order));
  }
  return {out[0], out[1], out[2], out[3], out[4], out[5]};
}

PolarNodalState inverse_stage(const PolarNodalState& x, Normalization stage, int order,
                              const GravityField& field, const TheoryOptions& options,
                              InverseStats* stats) {
  if (order <= 0) return x;
  PolarNodalState y = x;
  for (int it = 1; it <= kInverseMaxIterations; ++it) {
    const PolarNodalState z = direct_stage(y, stage, order, field, options);
    PolarNodalState next;
    next.r = x.r - (z.r - y.r);
    next.theta = x.theta - angle_difference(z.theta, y.theta);
    next.nu = x.nu - angle_difference(z.nu, y.nu);
    next.R = x.R - (z.R - y.R);
    next.Theta = x.Theta - (z.Theta - y.Theta);
    next.N = x.N - (z.N - y.N);

    const double vscale = x.Theta / x.r;
    const double step = std::max({std::abs(next.r - y.r) / x.r,
                                  std::abs(angle_difference(next.theta, y.theta)),
                                  std::abs(angle_difference(next.nu, y.nu)),
                                  std::abs(next.R - y.R) / vscale,
                                  std::abs(next.Theta - y.Theta) / x.Theta,
                                  std::abs(next.N - y.N) / x.Theta});
    y = next;
    if (stats) {
      stats->iterations = it;
      stats->last_step = step;
    }
    if (!std::isfinite(step)) break;
    if (step <= kInverseTolerance) {
      y.theta = wrap_pi(y.theta);
      y.nu = wrap_pi(y.nu);
      return y;
    }
  }
  throw InversionError("fixed-point inversion of the Lie transformation did not converge");
}

TransformPlan TransformPlan::full_direct(int order) {
  return {{Normalization::Delaunay, Normalization::TotalAngularMomentum}, order,
          Direction::Direct};
}

TransformPlan TransformPlan::full_inverse(int order, InverseMethod method) {
  return {{Normalization::TotalAngularMomentum, Normalization::Delaunay}, order,
          Direction::Inverse, method};
}

namespace {

PolarNodalState apply_stages(const PolarNodalState& state, const TransformPlan& plan,
                             const GravityField& field, const TheoryOptions& options) {
  PolarNodalState s = state;
  for (Normalization stage : plan.stages) {
    s = plan.direction == Direction::Direct
            ? direct_stage(s, stage, plan.order, field, options)
            : inverse_stage(s, stage, plan.order, field, options);
  }
  return s;
}

// Every term of order m carries J2^m, so the inverse evaluated with J2 scaled
// by lambda is x + sum_k c_k lambda^k. Four samples separate c_1..c_4; the
// remainder c_5 + ... is below double precision for |J2| < 0.01.
PolarNodalState truncated_inverse(const PolarNodalState& x, const TransformPlan& plan,
                                  const GravityField& field, const TheoryOptions& options) {
  std::array<std::array<double, 6>, 4> d{};
  constexpr std::array<double, 4> lambdas{1.0, -1.0, 0.5, -0.5};
  for (int j = 0; j < 4; ++j) {
    GravityField scaled = field;
    scaled.J2 = field.J2 * lambdas[j];
    const PolarNodalState y = apply_stages(x, plan, scaled, options);
    d[j] = {y.r - x.r,
            angle_difference(y.theta, x.theta),
            angle_difference(y.nu, x.nu),
            y.R - x.R,
            y.Theta - x.Theta,
            y.N - x.N};
  }
  std::array<double, 6> out{};
  for (int i = 0; i < 6; ++i) {
    const double odd1 = 0.5 * (d[0][i] - d[1][i]);
    const double oddh = 0.5 * (d[2][i] - d[3][i]);
    const double even1 = 0.5 * (d[0][i] + d[1][i]);
    const double evenh = 0.5 * (d[2][i] + d[3][i]);
    std::array<double, 5> c{};
    c[3] = (odd1 - 2.0 * oddh) / 0.75;
    c[1] = odd1 - c[3];
    c[4] = (even1 - 4.0 * evenh) / 0.75;
    c[2] = even1 - c[4];
    for (int k = 1; k <= plan.order; ++k) out[i] += c[k];
  }
  PolarNodalState y;
  y.r = x.r + out[0];
  y.theta = wrap_pi(x.theta + out[1]);
  y.nu = wrap_pi(x.nu + out[2]);
  y.R = x.R + out[3];
  y.Theta = x.Theta + out[4];
  y.N = x.N;
  return y;
}

}  // namespace

PolarNodalState correct_state(const PolarNodalState& state, const TransformPlan& plan,
                              const GravityField& field, const TheoryOptions& options) {
  if (plan.direction == Direction::Inverse && plan.order > 0 &&
      plan.inverse_method == InverseMethod::TruncatedSeries) {
    return truncated_inverse(state, plan, field, options);
  }
  return apply_stages(state, plan, field, options);
}

DelaunayState correct_state(const DelaunayState& state, const TransformPlan& plan,
                            const GravityField& field, const TheoryOptions& options) {
  const PolarNodalState out =
      correct_state(to_polar_nodal(state, field), plan, field, options);
  Stage stage = state.stage;
  for (Normalization n : plan.stages) {
    const bool g = n == Normalization::TotalAngularMomentum;
    if (plan.direction == Direction::Direct) {
      stage = g ? Stage::Original : Stage::Prime;
    } else {
      stage = g ? Stage::Prime : Stage::DoublePrime;
    }
  }
  return to_delaunay(out, field, stage);
}

}  // namespace mainprob
