#pragma once

#include <stdexcept>
#include <string>

namespace hitp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A precondition on user-supplied arguments does not hold.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// p = 2 was supplied where an odd prime is required.
class EvenPrimeError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// Total degree n and rank h have different parity.
class ParityError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// Operand shapes do not fit together.
class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

/// A square matrix that had to be inverted is singular.
class SingularMatrixError : public Error {
  public:
    using Error::Error;
};

/// Inverse requested for a non-square matrix.
class NotSquareError : public Error {
  public:
    using Error::Error;
};

/// Internal rank bookkeeping disagreed with itself.
class ConsistencyError : public Error {
  public:
    using Error::Error;
};

} // namespace hitp
