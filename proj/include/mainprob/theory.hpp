#pragma once

// Terms of the two normalizations of the main problem up to third order.
//
// Normalization of the total angular momentum (G-stage): printed terms carry
// their epsilon^m factor and are functions of the original variables.
// Delaunay normalization (D-stage): printed terms omit epsilon^m; the
// Hamiltonian of the D-stage is sum_m epsilon^m / m! K_{0,m} and its
// generator is sum_m epsilon^m W_m.
//
// Every evaluator is templated on the scalar type (double or Jet) and reads
// the regular quantities of an OrbitBasis, so it works in both charts.

#include <array>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "mainprob/basis.hpp"
#include "mainprob/elements.hpp"
#include "mainprob/errors.hpp"
#include "mainprob/tables.hpp"

namespace mainprob {

enum class Normalization {
  TotalAngularMomentum,  // elimination of the argument of the perigee
  Delaunay,              // elimination of the mean anomaly
};

inline constexpr int kMaxOrder = 3;

struct TheoryOptions {
  double guard = 0.02;         // minimum |5 s^2 - 4|
  double warning_band = 0.1;   // |5 s^2 - 4| below this is reported
};

inline double resonance_divisor(double s2) { return std::abs(5.0 * s2 - 4.0); }

/// Throws ResonanceError when |5 s^2 - 4| < guard.
inline void check_resonance(double s2, double guard) {
  const double d = resonance_divisor(s2);
  if (d < guard) throw ResonanceError(d, guard);
}

inline bool in_warning_band(double s2, const TheoryOptions& options) {
  return resonance_divisor(s2) < options.warning_band;
}

namespace theory {

namespace detail {

template <class T>
struct Powers {
  std::array<T, 5> e2;      // (e^2)^i
  std::array<T, 4> s2;      // (s^2)^i
  std::array<T, 9> eta;     // eta^(i-1), i = 0..8
  std::array<T, 5> p_r;     // (p/r)^i
  T inv_d;                  // 1 / (5 s^2 - 4)
};

template <class T>
Powers<T> powers(const OrbitBasis<T>& b) {
  Powers<T> w;
  w.e2[0] = T(1.0);
  w.s2[0] = T(1.0);
  w.p_r[0] = T(1.0);
  for (int i = 1; i < 5; ++i) w.e2[i] = w.e2[i - 1] * b.e2;
  for (int i = 1; i < 4; ++i) w.s2[i] = w.s2[i - 1] * b.s2;
  const T pr = b.p / b.r;
  for (int i = 1; i < 5; ++i) w.p_r[i] = w.p_r[i - 1] * pr;
  w.eta[0] = 1.0 / b.eta;
  w.eta[1] = T(1.0);
  for (int i = 2; i < 9; ++i) w.eta[i] = w.eta[i - 1] * b.eta;
  w.inv_d = 1.0 / (5.0 * b.s2 - 4.0);
  return w;
}

/// e^|m| sin(m f + 2 l theta) with m = k - 2 l, which equals
/// e^|m| sin(k f + 2 l g), written with z = e cos f + i e sin f.
template <class T>
T harmonic(const OrbitBasis<T>& b, int k, int l) {
  const int m = k - 2 * l;
  const int am = std::abs(m);
  const T& re = b.zre[am];
  const T im = m < 0 ? -b.zim[am] : b.zim[am];
  return b.sin_jtheta[2 * l] * re + b.cos_jtheta[2 * l] * im;
}

/// e^P sin(k f + 2 l g) for an even, non-negative P - |k - 2l|.
template <class T>
T eccentric_harmonic(const OrbitBasis<T>& b, const Powers<T>& w, int P, int k, int l) {
  const int excess = P - std::abs(k - 2 * l);
  if (excess < 0 || excess % 2 != 0) {
    throw std::logic_error("singular eccentricity power in generating function");
  }
  return w.e2[excess / 2] * harmonic(b, k, l);
}

}  // namespace detail

/// Kepler term -mu / (2 a).
template <class T>
T kepler(const OrbitBasis<T>& b) {
  return -0.5 * b.mu / b.a;
}

/// J2 term of the main problem in the original variables.
template <class T>
T main_problem_j2(const OrbitBasis<T>& b) {
  const T rr = b.Re / b.r;
  return -(b.mu / b.r) * rr * rr * (b.J2 / 4.0) *
         (2.0 - 3.0 * b.s2 + 3.0 * b.s2 * b.cos_jtheta[2]);
}

/// Constant C_m of the G-stage generator.
template <class T>
T gnorm_C(int m, const OrbitBasis<T>& b) {
  const auto& tab = theory_tables();
  const auto w = detail::powers(b);
  switch (m) {
    case 1: {
      const T e2sin2g = detail::harmonic(b, 0, 1);
      return b.eps * b.G * (15.0 * b.s2 - 14.0) * w.inv_d / 8.0 * b.s2 * e2sin2g;
    }
    case 2:
    case 3: {
      const auto& table = m == 2 ? tab.Gamma2 : tab.Gamma3;
      T sum(0.0);
      for (const auto& e : table.entries) {
        if (e.index[1] != 0) continue;
        const int j = e.index[0], l = e.index[2];
        sum += e.poly(b.s2) * w.e2[j] * w.s2[l] * detail::harmonic(b, 0, l);
      }
      if (m == 2) {
        return b.eps * b.eps * b.G * w.inv_d * w.inv_d * w.inv_d / 64.0 * sum;
      }
      T id5 = w.inv_d * w.inv_d;
      id5 = id5 * id5 * w.inv_d;
      return b.eps * b.eps * b.eps * b.G * id5 / 1536.0 * sum;
    }
    default:
      throw std::out_of_range("G-stage order must be 1..3");
  }
}

/// Generator term W_m of the G-stage, including C_m.
template <class T>
T gnorm_W(int m, const OrbitBasis<T>& b) {
  const auto& tab = theory_tables();
  const auto w = detail::powers(b);
  switch (m) {
    case 1: {
      const T periodic = 3.0 * detail::harmonic(b, 1, 1) +
                         3.0 * detail::harmonic(b, 2, 1) + detail::harmonic(b, 3, 1);
      return -b.eps * b.G * (0.5 * b.s2) * periodic + gnorm_C(1, b);
    }
    case 2:
    case 3: {
      const auto& table = m == 2 ? tab.Gamma2 : tab.Gamma3;
      T sum(0.0);
      for (const auto& e : table.entries) {
        const int j = e.index[0], k = e.index[1], l = e.index[2];
        if (k == 0) continue;
        const int P = 2 * j + std::abs(k) % 2;
        sum += e.poly(b.s2) * w.s2[l] * detail::eccentric_harmonic(b, w, P, k, l);
      }
      const T id2 = w.inv_d * w.inv_d;
      if (m == 2) return b.eps * b.eps * b.G * id2 / 32.0 * sum + gnorm_C(2, b);
      return b.eps * b.eps * b.eps * b.G * id2 * id2 / 8960.0 * sum + gnorm_C(3, b);
    }
    default:
      throw std::out_of_range("G-stage order must be 1..3");
  }
}

/// New Hamiltonian term K_{0,m} of the G-stage; m = 0 gives the Kepler term.
template <class T>
T gnorm_K(int m, const OrbitBasis<T>& b) {
  if (m == 0) return kepler(b);
  const auto& tab = theory_tables();
  const auto w = detail::powers(b);
  const T front = b.mu / b.r * w.p_r[2];
  switch (m) {
    case 1:
      return b.eps * front * (3.0 * b.s2 - 2.0);
    case 2:
    case 3: {
      const auto& table = m == 2 ? tab.gamma2 : tab.gamma3;
      T sum(0.0);
      for (const auto& e : table.entries) {
        sum += e.poly(b.s2) * w.p_r[e.index[0]] * w.e2[e.index[1]];
      }
      const T id2 = w.inv_d * w.inv_d;
      if (m == 2) return b.eps * b.eps * front * 3.0 * b.s2 * id2 / 8.0 * sum;
      return b.eps * b.eps * b.eps * front * 3.0 * b.s2 * id2 * w.inv_d / 32.0 * sum;
    }
    default:
      throw std::out_of_range("G-stage order must be 0..3");
  }
}

/// Printed D-stage Hamiltonian term K_{0,m}, without epsilon^m.
template <class T>
T dnorm_K(int m, const OrbitBasis<T>& b) {
  if (m == 0) return kepler(b);
  const auto& tab = theory_tables();
  const T eta3 = b.eta * b.eta * b.eta;
  const T mu_p = b.mu / b.p;
  switch (m) {
    case 1:
      return mu_p * eta3 * (3.0 * b.s2 - 2.0);
    case 2: {
      T sum(0.0), ej(1.0);
      for (const auto& e : tab.lambda2.entries) {
        sum += e.poly(b.s2) * ej;
        ej = ej * b.eta;
      }
      return -0.75 * mu_p * eta3 * sum;
    }
    case 3: {
      T sum(0.0), ej(1.0);
      for (const auto& e : tab.lambda3.entries) {
        sum += e.poly(b.s2) * ej;
        ej = ej * b.eta;
      }
      const T id = 1.0 / (5.0 * b.s2 - 4.0);
      return mu_p * 9.0 * eta3 * id * id / 16.0 * sum;
    }
    default:
      throw std::out_of_range("D-stage order must be 0..3");
  }
}

/// Coefficient of phi in the printed D-stage generator W_m.
template <class T>
T dnorm_W_phi(int m, const OrbitBasis<T>& b) {
  const auto& tab = theory_tables();
  switch (m) {
    case 1:
      return b.G * (3.0 * b.s2 - 2.0);
    case 2:
      return -0.75 * b.G *
             (tab.Phi2.entries[0].poly(b.s2) + tab.Phi2.entries[1].poly(b.s2) * b.e2);
    case 3: {
      const auto w = detail::powers(b);
      T sum(0.0);
      for (const auto& e : tab.Phi3.entries) {
        const int j = e.index[0], k = e.index[1];
        sum += e.poly(b.s2) * w.eta[k + 1] * b.zre[j];
      }
      return 3.0 * b.G * w.inv_d * w.inv_d / 16.0 * sum;
    }
    default:
      throw std::out_of_range("D-stage order must be 1..3");
  }
}

/// Printed D-stage generator W_m, without epsilon^m.
template <class T>
T dnorm_W(int m, const OrbitBasis<T>& b) {
  const auto& tab = theory_tables();
  switch (m) {
    case 1:
      return b.G * (3.0 * b.s2 - 2.0) * (b.esinf + b.phi);
    case 2: {
      const auto w = detail::powers(b);
      T sum(0.0);
      for (const auto& e : tab.Lambda2.entries) {
        const int j = e.index[0], k = e.index[1];
        sum += e.poly(b.s2) * w.eta[k + 1] * b.zim[j];
      }
      return -b.G * b.beta * w.inv_d * w.inv_d / 32.0 * sum + dnorm_W_phi(2, b) * b.phi;
    }
    case 3: {
      const auto w = detail::powers(b);
      T sum(0.0);
      for (const auto& e : tab.Lambda3.entries) {
        const int j = e.index[0], k = e.index[1];
        sum += e.poly(b.s2) * w.eta[k] * b.zim[j];
      }
      return b.G * b.beta * b.beta * w.inv_d * w.inv_d * w.inv_d / 128.0 * sum +
             dnorm_W_phi(3, b) * b.phi;
    }
    default:
      throw std::out_of_range("D-stage order must be 1..3");
  }
}

/// Full generator term of a normalization, as used by the Lie transform.
template <class T>
T generator(Normalization stage, int m, const OrbitBasis<T>& b) {
  if (stage == Normalization::TotalAngularMomentum) return gnorm_W(m, b);
  T epsm = b.eps;
  for (int i = 1; i < m; ++i) epsm = epsm * b.eps;
  return epsm * dnorm_W(m, b);
}

/// Term H_{m,0} of the Hamiltonian a normalization starts from.
template <class T>
T input_hamiltonian(Normalization stage, int m, const OrbitBasis<T>& b) {
  if (stage == Normalization::TotalAngularMomentum) {
    if (m == 0) return kepler(b);
    if (m == 1) return main_problem_j2(b);
    return T(0.0);
  }
  return gnorm_K(m, b);
}

/// Term K_{0,m} of the Hamiltonian a normalization produces, with all
/// epsilon factors.
template <class T>
T output_hamiltonian(Normalization stage, int m, const OrbitBasis<T>& b) {
  if (stage == Normalization::TotalAngularMomentum) return gnorm_K(m, b);
  T epsm(1.0);
  for (int i = 0; i < m; ++i) epsm = epsm * b.eps;
  return epsm * dnorm_K(m, b);
}

}  // namespace theory

// Double-precision entry points at a Delaunay state. The resonance guard is
// applied to every evaluator whose expression carries 5 s^2 - 4 divisors.

double eval_W_gnorm(int m, const DelaunayState& state, const GravityField& field,
                    const TheoryOptions& options = {});
double eval_K_gnorm(int m, const DelaunayState& state, const GravityField& field,
                    const TheoryOptions& options = {});
double eval_W_dnorm(int m, const DelaunayState& state, const GravityField& field,
                    const TheoryOptions& options = {});
double eval_K_dnorm(int m, const DelaunayState& state, const GravityField& field,
                    const TheoryOptions& options = {});

}  // namespace mainprob
