#pragma once

// Truncated multivariate Taylor polynomials ("jets") in six variables up to
// total degree three. A jet of degree d stores the Taylor coefficients of a
// function around an expansion point; arithmetic keeps every coefficient of
// total degree <= d exact up to round-off.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace mainprob {

inline constexpr int kJetVariables = 6;
inline constexpr int kJetMaxDegree = 3;
inline constexpr int kJetSize = 84;  // C(6 + 3, 3)

namespace detail {

struct JetTables {
  struct Product {
    std::uint8_t a, b, out;
  };
  struct Shift {
    std::uint8_t from, to;
    double factor;
  };
  // Number of monomials with total degree <= d.
  std::array<int, kJetMaxDegree + 1> count{};
  std::array<std::array<std::uint8_t, kJetVariables>, kJetSize> exponents{};
  std::array<int, kJetSize> degree{};
  // Products sorted by output degree; the first product_count[d] entries
  // produce every coefficient up to degree d.
  std::vector<Product> products;
  std::array<int, kJetMaxDegree + 1> product_count{};
  // d/dx_v maps monomial `from` to factor * monomial `to`.
  std::array<std::vector<Shift>, kJetVariables> shifts;
  std::array<int, kJetVariables> unit{};

  int index_of(const std::array<std::uint8_t, kJetVariables>& e) const {
    for (int i = 0; i < kJetSize; ++i) {
      if (exponents[i] == e) return i;
    }
    return -1;
  }

  JetTables() {
    int n = 0;
    for (int d = 0; d <= kJetMaxDegree; ++d) {
      // Enumerate exponent vectors of total degree d in lexicographic order.
      std::array<std::uint8_t, kJetVariables> e{};
      auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == kJetVariables - 1) {
          e[var] = static_cast<std::uint8_t>(left);
          exponents[n] = e;
          degree[n] = d;
          ++n;
          return;
        }
        for (int k = left; k >= 0; --k) {
          e[var] = static_cast<std::uint8_t>(k);
          self(self, var + 1, left - k);
        }
      };
      rec(rec, 0, d);
      count[d] = n;
    }
    for (int v = 0; v < kJetVariables; ++v) {
      std::array<std::uint8_t, kJetVariables> e{};
      e[v] = 1;
      unit[v] = index_of(e);
    }
    for (int d = 0; d <= kJetMaxDegree; ++d) {
      for (int i = 0; i < kJetSize; ++i) {
        for (int j = 0; j < kJetSize; ++j) {
          if (degree[i] + degree[j] != d) continue;
          std::array<std::uint8_t, kJetVariables> e{};
          for (int v = 0; v < kJetVariables; ++v) {
            e[v] = static_cast<std::uint8_t>(exponents[i][v] + exponents[j][v]);
          }
          products.push_back({static_cast<std::uint8_t>(i),
                              static_cast<std::uint8_t>(j),
                              static_cast<std::uint8_t>(index_of(e))});
        }
      }
      product_count[d] = static_cast<int>(products.size());
    }
    for (int v = 0; v < kJetVariables; ++v) {
      for (int i = 0; i < kJetSize; ++i) {
        if (exponents[i][v] == 0) continue;
        auto e = exponents[i];
        --e[v];
        shifts[v].push_back({static_cast<std::uint8_t>(i),
                             static_cast<std::uint8_t>(index_of(e)),
                             static_cast<double>(exponents[i][v])});
      }
    }
  }
};

inline const JetTables& jet_tables() {
  static const JetTables tables;
  return tables;
}

}  // namespace detail

class Jet {
 public:
  Jet() = default;
  Jet(double value) { c_[0] = value; }  // NOLINT: constants promote freely
  Jet(double value, int degree) : degree_(degree) { c_[0] = value; }

  /// The coordinate function x_index expanded around `value`.
  static Jet variable(double value, int index, int degree) {
    Jet j(value, degree);
    if (degree >= 1) j.c_[detail::jet_tables().unit[index]] = 1.0;
    return j;
  }

  double value() const { return c_[0]; }
  int degree() const { return degree_; }
  double coefficient(int monomial) const { return c_[monomial]; }
  double& coefficient(int monomial) { return c_[monomial]; }

  /// First partial derivative at the expansion point.
  double partial(int var) const {
    return degree_ >= 1 ? c_[detail::jet_tables().unit[var]] : 0.0;
  }

  /// The jet of d/dx_var, one degree lower.
  Jet derivative(int var) const {
    Jet out(0.0, degree_ > 0 ? degree_ - 1 : 0);
    if (degree_ == 0) return out;
    const auto& t = detail::jet_tables();
    const int limit = t.count[degree_ - 1];
    for (const auto& s : t.shifts[var]) {
      if (s.to < limit) out.c_[s.to] += s.factor * c_[s.from];
    }
    return out;
  }

  Jet truncated(int degree) const {
    if (degree >= degree_) return *this;
    Jet out(*this);
    const auto& t = detail::jet_tables();
    for (int i = t.count[degree]; i < t.count[degree_]; ++i) out.c_[i] = 0.0;
    out.degree_ = degree;
    return out;
  }

  Jet& operator+=(const Jet& o) {
    lower_to(o.degree_);
    const int n = size();
    for (int i = 0; i < n; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    lower_to(o.degree_);
    const int n = size();
    for (int i = 0; i < n; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Jet& operator+=(double v) {
    c_[0] += v;
    return *this;
  }
  Jet& operator-=(double v) {
    c_[0] -= v;
    return *this;
  }
  Jet& operator*=(double v) {
    const int n = size();
    for (int i = 0; i < n; ++i) c_[i] *= v;
    return *this;
  }
  Jet& operator/=(double v) { return *this *= (1.0 / v); }
  Jet& operator*=(const Jet& o) {
    *this = *this * o;
    return *this;
  }
  Jet& operator/=(const Jet& o) {
    *this = *this / o;
    return *this;
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    const int d = a.degree_ < b.degree_ ? a.degree_ : b.degree_;
    Jet out(0.0, d);
    const auto& t = detail::jet_tables();
    const int n = t.product_count[d];
    const auto* p = t.products.data();
    for (int i = 0; i < n; ++i) out.c_[p[i].out] += a.c_[p[i].a] * b.c_[p[i].b];
    return out;
  }

  /// Composes a univariate function with this jet, given the function's
  /// value and first three derivatives at value().
  Jet compose(double g0, double g1, double g2, double g3) const {
    Jet out(g0, degree_);
    if (degree_ == 0) return out;
    Jet d(*this);
    d.c_[0] = 0.0;
    Jet acc = d * g1;
    if (degree_ >= 2) {
      Jet d2 = d * d;
      acc += d2 * (0.5 * g2);
      if (degree_ >= 3) acc += (d2 * d) * (g3 / 6.0);
    }
    acc.c_[0] = g0;
    return acc;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator+(Jet a, double b) { return a += b; }
  friend Jet operator+(double a, Jet b) { return b += a; }
  friend Jet operator-(Jet a, double b) { return a -= b; }
  friend Jet operator-(double a, const Jet& b) { return (-b) += a; }
  friend Jet operator*(Jet a, double b) { return a *= b; }
  friend Jet operator*(double a, Jet b) { return b *= a; }
  friend Jet operator/(Jet a, double b) { return a /= b; }
  friend Jet operator/(double a, const Jet& b) { return reciprocal(b) *= a; }
  friend Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }
  friend Jet operator-(Jet a) { return a *= -1.0; }

  friend Jet reciprocal(const Jet& u) {
    const double x = u.value();
    const double r = 1.0 / x;
    return u.compose(r, -r * r, 2.0 * r * r * r, -6.0 * r * r * r * r);
  }
  friend Jet sqrt(const Jet& u) {
    const double s = std::sqrt(u.value());
    const double x = u.value();
    return u.compose(s, 0.5 / s, -0.25 / (s * x), 0.375 / (s * x * x));
  }
  friend Jet sin(const Jet& u) {
    const double s = std::sin(u.value()), c = std::cos(u.value());
    return u.compose(s, c, -s, -c);
  }
  friend Jet cos(const Jet& u) {
    const double s = std::sin(u.value()), c = std::cos(u.value());
    return u.compose(c, -s, -c, s);
  }
  friend Jet atan(const Jet& u) {
    const double x = u.value();
    const double w = 1.0 / (1.0 + x * x);
    return u.compose(std::atan(x), w, -2.0 * x * w * w,
                     (6.0 * x * x - 2.0) * w * w * w);
  }
  /// atan2 on the branch of the expansion point: the offset from the value
  /// is atan((y x0 - x y0) / (x x0 + y y0)).
  friend Jet atan2(const Jet& y, const Jet& x) {
    const double y0 = y.value(), x0 = x.value();
    Jet num = y * x0 - x * y0;
    Jet den = x * x0 + y * y0;
    num.c_[0] = 0.0;
    Jet out = atan(num / den);
    out.c_[0] = std::atan2(y0, x0);
    return out;
  }
  friend Jet pow(const Jet& u, double p) {
    const double x = u.value();
    const double v = std::pow(x, p);
    return u.compose(v, p * v / x, p * (p - 1.0) * v / (x * x),
                     p * (p - 1.0) * (p - 2.0) * v / (x * x * x));
  }

 private:
  int size() const { return detail::jet_tables().count[degree_]; }
  void lower_to(int degree) {
    if (degree < degree_) *this = truncated(degree);
  }

  std::array<double, kJetSize> c_{};
  int degree_ = kJetMaxDegree;
};

/// Value extraction that works for both plain doubles and jets.
inline double value_of(double x) { return x; }
inline double value_of(const Jet& x) { return x.value(); }

/// Poisson bracket {A;B} = sum_i dA/dq_i dB/dp_i - dA/dp_i dB/dq_i for jets
/// whose variables are ordered (q0, q1, q2, p0, p1, p2).
inline Jet poisson_bracket(const Jet& a, const Jet& b) {
  const int d = std::min(a.degree(), b.degree());
  if (d == 0) return Jet(0.0, 0);
  Jet out(0.0, d - 1);
  for (int i = 0; i < 3; ++i) {
    out += a.derivative(i) * b.derivative(i + 3);
    out -= a.derivative(i + 3) * b.derivative(i);
  }
  return out;
}

}  // namespace mainprob
