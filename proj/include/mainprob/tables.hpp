#pragma once

#include <array>
#include <string>
#include <vector>

#include "mainprob/polynomial.hpp"

namespace mainprob {

/// Inclination polynomial with its printed index tuple.
struct TableEntry {
  std::array<int, 3> index{};  // unused trailing slots are zero
  InclinationPolynomial poly;
};

struct InclinationTable {
  std::string name;
  int arity = 2;  // number of meaningful indices
  std::vector<TableEntry> entries;

  /// Entry with the given index, or nullptr when the coefficient vanishes.
  const InclinationPolynomial* find(std::array<int, 3> index) const;
};

/// Coefficient tables of the third-order theory, in x = s^2.
struct TheoryTables {
  // Normalization of the total angular momentum.
  InclinationTable gamma2;  // K02, (j, k)
  InclinationTable Gamma2;  // W2 and C2, (j, k, l); k = 0 entries feed C2
  InclinationTable gamma3;  // K03, (j, k)
  InclinationTable Gamma3;  // W3 and C3, (j, k, l)
  // Delaunay normalization.
  InclinationTable lambda2;  // K02, (j)
  InclinationTable Phi2;     // phi part of W2, (j)
  InclinationTable Lambda2;  // W2, (j, k)
  InclinationTable lambda3;  // K03, (j)
  InclinationTable Phi3;     // phi part of W3, (j, k), including derived entries
  InclinationTable Lambda3;  // W3, (j, k)
  // Secular frequencies, (m, i).
  InclinationTable Psi;
  InclinationTable omega;
  InclinationTable Omega;

  std::vector<const InclinationTable*> all() const;
};

const TheoryTables& theory_tables();

/// Deterministic JSON listing of every table: numerator coefficients in
/// descending powers of s^2 plus the common denominator.
std::string tables_json();

}  // namespace mainprob
