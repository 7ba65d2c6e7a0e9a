#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "mainprob/jet.hpp"

namespace mainprob {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  Rational() = default;
  Rational(std::int64_t n) : num(n) {}  // NOLINT: integers promote
  Rational(std::int64_t n, std::int64_t d);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Polynomial with integer coefficients, stored in ascending powers.
class IntPoly {
 public:
  IntPoly() = default;
  /// Coefficients in descending powers, as printed: {5, -4} is 5x - 4.
  IntPoly(std::initializer_list<std::int64_t> descending);
  static IntPoly from_ascending(std::vector<std::int64_t> ascending);

  const std::vector<std::int64_t>& ascending() const { return c_; }
  std::vector<std::int64_t> descending() const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(std::int64_t k, const IntPoly& p);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  std::vector<std::int64_t> c_{0};
};

IntPoly pow(const IntPoly& p, int k);

/// Inclination polynomial in x = s^2: an integer polynomial over a positive
/// integer denominator, reduced to lowest terms. Values are exact until the
/// final floating-point evaluation.
class InclinationPolynomial {
 public:
  InclinationPolynomial() : InclinationPolynomial(IntPoly{0}) {}
  InclinationPolynomial(IntPoly numerator, std::int64_t denominator = 1);  // NOLINT

  const IntPoly& numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  double operator()(double x) const;
  Jet operator()(const Jet& x) const;
  /// Value and first three derivatives in x.
  std::array<double, 4> derivatives(double x) const;

 private:
  IntPoly num_;
  std::int64_t den_ = 1;
};

/// Divides out up to `max_power` exact factors of (5x - 4). Returns the
/// number of factors removed.
int divide_out_critical(InclinationPolynomial& p, int max_power);

InclinationPolynomial operator*(Rational k, const IntPoly& p);
InclinationPolynomial operator*(const InclinationPolynomial& a, const IntPoly& p);
InclinationPolynomial operator*(Rational k, const InclinationPolynomial& a);

}  // namespace mainprob
