#include "mainprob/theory.hpp"

namespace mainprob {

namespace {

OrbitBasis<double> basis_at(const DelaunayState& state, const GravityField& field) {
  return basis_from_delaunay(delaunay_coordinates(state), field);
}

}  // namespace

double eval_W_gnorm(int m, const DelaunayState& state, const GravityField& field,
                    const TheoryOptions& options) {
  const auto b = basis_at(state, field);
  check_resonance(b.s2, options.guard);
  return theory::gnorm_W(m, b);
}

double eval_K_gnorm(int m, const DelaunayState& state, const GravityField& field,
                    const TheoryOptions& options) {
  const auto b = basis_at(state, field);
  if (m >= 2) check_resonance(b.s2, options.guard);
  return theory::gnorm_K(m, b);
}

double eval_W_dnorm(int m, const DelaunayState& state, const GravityField& field,
                    const TheoryOptions& options) {
  const auto b = basis_at(state, field);
  if (m >= 2) check_resonance(b.s2, options.guard);
  return theory::dnorm_W(m, b);
}

double eval_K_dnorm(int m, const DelaunayState& state, const GravityField& field,
                    const TheoryOptions& options) {
  const auto b = basis_at(state, field);
  if (m >= 3) check_resonance(b.s2, options.guard);
  return theory::dnorm_K(m, b);
}

}  // namespace mainprob
