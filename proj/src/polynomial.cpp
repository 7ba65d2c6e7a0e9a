#include "mainprob/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace mainprob {

namespace {

__extension__ typedef __int128 int128;

std::int64_t checked(int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw std::overflow_error("inclination polynomial overflows int64");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

IntPoly::IntPoly(std::initializer_list<std::int64_t> descending)
    : c_(descending.begin(), descending.end()) {
  if (c_.empty()) c_.push_back(0);
  std::reverse(c_.begin(), c_.end());
}

IntPoly IntPoly::from_ascending(std::vector<std::int64_t> ascending) {
  IntPoly p;
  p.c_ = std::move(ascending);
  while (p.c_.size() > 1 && p.c_.back() == 0) p.c_.pop_back();
  if (p.c_.empty()) p.c_.push_back(0);
  return p;
}

std::vector<std::int64_t> IntPoly::descending() const {
  return {c_.rbegin(), c_.rend()};
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  std::vector<std::int64_t> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      out[i + j] = checked(static_cast<int128>(a.c_[i]) * b.c_[j] + out[i + j]);
    }
  }
  return IntPoly::from_ascending(std::move(out));
}

IntPoly operator*(std::int64_t k, const IntPoly& p) {
  std::vector<std::int64_t> out(p.c_);
  for (auto& c : out) c = checked(static_cast<int128>(c) * k);
  return IntPoly::from_ascending(std::move(out));
}

IntPoly pow(const IntPoly& p, int k) {
  IntPoly out{1};
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

InclinationPolynomial::InclinationPolynomial(IntPoly numerator, std::int64_t denominator)
    : num_(std::move(numerator)), den_(denominator) {
  if (den_ == 0) throw std::invalid_argument("zero denominator");
  if (den_ < 0) {
    num_ = -1 * num_;
    den_ = -den_;
  }
  std::int64_t g = den_;
  for (auto c : num_.ascending()) g = std::gcd(g, c);
  if (g > 1) {
    std::vector<std::int64_t> reduced(num_.ascending());
    for (auto& c : reduced) c /= g;
    num_ = IntPoly::from_ascending(std::move(reduced));
    den_ /= g;
  }
}

int divide_out_critical(InclinationPolynomial& p, int max_power) {
  int removed = 0;
  while (removed < max_power) {
    const auto& c = p.numerator().ascending();
    const int n = static_cast<int>(c.size()) - 1;
    if (n < 1) break;
    // Synthetic division by 5x - 4 on B_k = b_k 5^(n-k), all integers.
    std::vector<int128> B(n);
    B[n - 1] = c[n];
    for (int k = n - 1; k >= 1; --k) {
      int128 scale = 1;
      for (int i = 0; i < n - k; ++i) scale *= 5;
      B[k - 1] = c[k] * scale + 4 * B[k];
    }
    int128 five_n = 1;
    for (int i = 0; i < n; ++i) five_n *= 5;
    if (c[0] * five_n + 4 * B[0] != 0) break;
    // b_k = B_k 5^k / 5^n.
    std::vector<std::int64_t> q(n);
    int128 five_k = 1;
    for (int k = 0; k < n; ++k) {
      q[k] = checked(B[k] * five_k);
      five_k *= 5;
    }
    p = InclinationPolynomial(IntPoly::from_ascending(std::move(q)),
                              checked(five_n * p.denominator()));
    ++removed;
  }
  return removed;
}

InclinationPolynomial operator*(Rational k, const IntPoly& p) {
  return {k.num * p, k.den};
}

InclinationPolynomial operator*(const InclinationPolynomial& a, const IntPoly& p) {
  return {a.numerator() * p, a.denominator()};
}

InclinationPolynomial operator*(Rational k, const InclinationPolynomial& a) {
  return {k.num * a.numerator(), checked(static_cast<int128>(k.den) * a.denominator())};
}

// Horner in long double over the integer numerator: several rows are
// evaluated next to their roots with cancellation of up to ten digits.
double InclinationPolynomial::operator()(double x) const {
  const auto& c = num_.ascending();
  const long double xl = x;
  long double v = 0.0L;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * xl + static_cast<long double>(*it);
  return static_cast<double>(v / static_cast<long double>(den_));
}

std::array<double, 4> InclinationPolynomial::derivatives(double x) const {
  // Horner for the polynomial and its first three derivatives.
  const auto& c = num_.ascending();
  const long double xl = x;
  long double p0 = 0, p1 = 0, p2 = 0, p3 = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    p3 = p3 * xl + p2;
    p2 = p2 * xl + p1;
    p1 = p1 * xl + p0;
    p0 = p0 * xl + static_cast<long double>(*it);
  }
  const long double d = den_;
  return {static_cast<double>(p0 / d), static_cast<double>(p1 / d),
          static_cast<double>(2.0L * p2 / d), static_cast<double>(6.0L * p3 / d)};
}

Jet InclinationPolynomial::operator()(const Jet& x) const {
  const auto d = derivatives(x.value());
  return x.compose(d[0], d[1], d[2], d[3]);
}

}  // namespace mainprob
