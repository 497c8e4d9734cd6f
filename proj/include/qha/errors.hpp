#pragma once

#include <stdexcept>
#include <string>

namespace qha {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside its documented range (radius, beta, cutoff, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// An input that should be impossible for valid objects (vanishing Möbius denominator).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// A quadrature sum met a non-finite integrand value.
class IntegrationError : public Error {
 public:
  using Error::Error;
};

/// Dense linear algebra or a runtime numerical assertion failed.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Operands live in truncated spaces of different degree.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace qha
