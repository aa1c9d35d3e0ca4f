#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fuzzyopt {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation
/// (alpha outside [0,1], x outside the function's domain, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operands live on different alpha grids.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A divisor level contains zero.
class SingularError : public Error {
 public:
  SingularError(const std::string& what, double alpha)
      : Error(what), alpha_(alpha) {}

  /// Alpha value of the offending level.
  double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
};

/// A fuzzy-valued function produced crossed or non-nested levels.
class MalformedFunctionError : public Error {
 public:
  MalformedFunctionError(const std::string& what, double x, double alpha)
      : Error(what), x_(x), alpha_(alpha) {}

  double x() const noexcept { return x_; }
  double alpha() const noexcept { return alpha_; }

 private:
  double x_;
  double alpha_;
};

/// A computation produced NaN or infinity.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Not enough usable data points for an estimate.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (config, sweep, serialized values).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fuzzyopt
