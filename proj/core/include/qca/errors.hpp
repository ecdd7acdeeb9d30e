#pragma once

#include <stdexcept>
#include <string>

namespace qca {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two objects with incompatible shapes (vector lengths, matrix sizes) were combined.
class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// Two torus elements living over different skew forms were combined.
class FormMismatch : public Error {
public:
  using Error::Error;
};

/// An index was outside its valid range (vertex labels, generator indices, exponents).
class BadIndexError : public Error {
public:
  using Error::Error;
};

/// Exact division in the quantum torus (or in a coefficient ring) failed.
class DivisionError : public Error {
public:
  enum class Reason {
    zero_divisor,      ///< division by the zero element
    non_unit_leading,  ///< divisor's leading coefficient is not of the form +/- v^k
    not_divisible,     ///< no exact quotient exists (detected via the iteration guard)
  };

  DivisionError(Reason r, const std::string& message) : Error(message), reason(r) {}

  Reason reason;
};

/// The compatibility condition between a skew form and an exchange matrix failed.
/// Indices are 0-based positions into the lattice; `value` is the offending entry
/// of B^T * Lambda (expected d_j >= 1 on the diagonal, 0 elsewhere).
class NotCompatibleError : public Error {
public:
  NotCompatibleError(int i_, int j_, long long value_, const std::string& message)
      : Error(message), i(i_), j(j_), value(value_) {}

  int i;
  int j;
  long long value;
};

/// A derived identity failed to re-expand to its expected value.
class IdentityError : public Error {
public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace qca
