#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mainprob/basis.hpp"
#include "mainprob/elements.hpp"
#include "mainprob/jet.hpp"
#include "mainprob/theory.hpp"

namespace mainprob {

/// A scalar function of the canonical state, evaluated on jets.
using StateFunction = std::function<Jet(const OrbitBasis<Jet>&)>;

/// {F;W} at a Delaunay state, with expansions taken in `chart`.
double poisson_bracket(const StateFunction& F, const StateFunction& W,
                       const DelaunayState& state, const GravityField& field,
                       CanonicalChart chart = CanonicalChart::Delaunay);

/// Deprit's triangle. `f[n]` holds F_{n,0} and `w[k - 1]` holds W_k, as jets
/// of degree at least order - n and order - k + 1. Returns F_{0,q} for
/// q = 0..order at the expansion point.
std::vector<double> deprit_triangle(std::span<const Jet> f, std::span<const Jet> w,
                                    int order);

/// sum_q F_{0,q} / q! from the output of deprit_triangle.
double deprit_sum(const std::vector<double>& terms);

/// Jets of the generator terms W_1..W_order of a normalization at a
/// polar-nodal state.
std::vector<Jet> generator_jets(Normalization stage, int order,
                                const std::array<double, 6>& point,
                                CanonicalChart chart, const GravityField& field);

/// The transformed Hamiltonian terms K_{0,q}, q = 0..order, evaluated from
/// the triangle at `point` (coordinates of `chart`).
std::vector<double> transformed_hamiltonian(Normalization stage, int order,
                                            const std::array<double, 6>& point,
                                            CanonicalChart chart,
                                            const GravityField& field);

/// Direct transformation of one normalization truncated at `order`: maps
/// new (prime for the G-stage, double prime for the D-stage) polar-nodal
/// variables to the old ones.
PolarNodalState direct_stage(const PolarNodalState& y, Normalization stage, int order,
                             const GravityField& field, const TheoryOptions& options = {});

struct InverseStats {
  int iterations = 0;
  double last_step = 0.0;
};

/// Inverse of direct_stage by fixed-point iteration y <- x - (direct(y) - y),
/// converged to 1e-13 relative within 20 iterations.
PolarNodalState inverse_stage(const PolarNodalState& x, Normalization stage, int order,
                              const GravityField& field, const TheoryOptions& options = {},
                              InverseStats* stats = nullptr);

enum class Direction { Direct, Inverse };

/// How an inverse plan is evaluated. FixedPoint inverts the truncated direct
/// map exactly. TruncatedSeries keeps only the terms up to J2^order of the
/// inverse series: the fixed-point inverse is evaluated with J2 scaled by
/// +-1 and +-1/2, the coefficients of J2^1..J2^4 are separated, and the
/// series is summed to `order`.
enum class InverseMethod { FixedPoint, TruncatedSeries };

struct TransformPlan {
  std::vector<Normalization> stages;  // applied in order
  int order = 3;
  Direction direction = Direction::Direct;
  InverseMethod inverse_method = InverseMethod::FixedPoint;

  /// Double prime to original: D-stage then G-stage.
  static TransformPlan full_direct(int order);
  /// Original to double prime: inverse G-stage then inverse D-stage.
  static TransformPlan full_inverse(int order,
                                    InverseMethod method = InverseMethod::FixedPoint);
};

/// Applies a plan to a polar-nodal state.
PolarNodalState correct_state(const PolarNodalState& state, const TransformPlan& plan,
                              const GravityField& field, const TheoryOptions& options = {});

/// Applies a plan to a Delaunay state and updates its stage tag.
DelaunayState correct_state(const DelaunayState& state, const TransformPlan& plan,
                            const GravityField& field, const TheoryOptions& options = {});

}  // namespace mainprob
