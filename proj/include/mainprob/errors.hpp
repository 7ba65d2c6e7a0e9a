#pragma once

#include <stdexcept>
#include <string>

namespace mainprob {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative solver ran out of iterations or produced a non-finite value.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// The requested chart is undefined at the given state (equatorial node,
/// circular perigee, unbound orbit).
class SingularChart : public Error {
 public:
  using Error::Error;
};

/// A partial derivative row is not defined at the state (e below 1e-9).
class DegeneratePartials : public Error {
 public:
  using Error::Error;
};

/// The state is too close to the critical inclination sin^2 I = 4/5.
class ResonanceError : public Error {
 public:
  ResonanceError(double divisor, double guard)
      : Error("critical-inclination guard: |5 s^2 - 4| = " +
              std::to_string(divisor) + " < " + std::to_string(guard)),
        divisor_(divisor) {}
  double divisor() const noexcept { return divisor_; }

 private:
  double divisor_;
};

/// Fixed-point inversion of a truncated direct transformation diverged.
class InversionError : public Error {
 public:
  using Error::Error;
};

/// The numerical integrator could not continue (step-size underflow).
class IntegrationFailure : public Error {
 public:
  using Error::Error;
};

/// The reference integration violated its conserved-quantity budget.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double drift)
      : Error(what), drift_(drift) {}
  double drift() const noexcept { return drift_; }

 private:
  double drift_;
};

/// Caller supplied inconsistent arguments (mismatched grids, bad ranges).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace mainprob
