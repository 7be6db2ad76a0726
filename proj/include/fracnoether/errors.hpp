#pragma once

#include <stdexcept>
#include <string>

namespace fracnoether {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sampling grid cannot resolve the requested bandwidth.
class GridTooSmall : public Error {
 public:
  using Error::Error;
};

/// A product or pairing needs more Fourier modes than the caller allowed.
class BandwidthOverflow : public Error {
 public:
  BandwidthOverflow(int required, int allowed)
      : Error("bandwidth overflow: result needs N=" + std::to_string(required) +
              " but at most N=" + std::to_string(allowed) + " is allowed"),
        required_(required),
        allowed_(allowed) {}
  int required() const noexcept { return required_; }
  int allowed() const noexcept { return allowed_; }

 private:
  int required_;
  int allowed_;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A quadrature produced a non-finite value or cannot resolve a singularity.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// An iterative solver or extrapolation did not converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A numerical oracle disagreed with a relation the computation relies on.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Input data failed validation (malformed JSON, sphere constraint, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace fracnoether
