#pragma once

#include <stdexcept>
#include <string>

namespace lqvac {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid input: bad parameters, violated preconditions, singular or
/// degenerate geometry. The CLI maps these to exit code 2.
class ArgumentError : public Error {
  public:
    using Error::Error;
};

/// Physical regime outside the model's validity (e.g. a transition with no
/// real kinematic solution).
class RegimeError : public ArgumentError {
  public:
    using ArgumentError::ArgumentError;
};

/// Evaluation at a point where the closed form diverges.
class SingularityError : public ArgumentError {
  public:
    using ArgumentError::ArgumentError;
};

/// Geometry for which a construction is undefined (parallel vectors, ...).
class DegeneracyError : public ArgumentError {
  public:
    using ArgumentError::ArgumentError;
};

/// Integral that does not exist for the given parameters.
class DivergenceError : public ArgumentError {
  public:
    using ArgumentError::ArgumentError;
};

/// Numerical failure: solver breakdown, tolerance not reached. Exit code 3.
class NumericalError : public Error {
  public:
    using Error::Error;
};

class ConvergenceError : public NumericalError {
  public:
    ConvergenceError(const std::string& what, double achieved_error)
        : NumericalError(what + " (achieved error estimate " + std::to_string(achieved_error) + ")"),
          achieved_error_(achieved_error) {}

    double achieved_error() const noexcept { return achieved_error_; }

  private:
    double achieved_error_;
};

}  // namespace lqvac
