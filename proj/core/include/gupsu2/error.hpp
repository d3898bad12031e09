#pragma once

#include <stdexcept>
#include <string>

namespace gupsu2 {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (invalid su(2) label, negative radicand, sample at a polynomial root).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A weighted inner product whose integrand is not absolutely integrable.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// Two functions carrying different deformation parameters were combined.
class BetaMismatchError : public Error {
 public:
  using Error::Error;
};

/// A numeric parameter failed validation (beta <= 0, grid too small, ...).
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

/// A derived quantity exceeds the representable or supported range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace gupsu2
