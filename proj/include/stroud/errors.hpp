#pragma once

#include <stdexcept>
#include <string>

namespace stroud {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic mixed elements living on different t-branches.
class BranchConflictError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the operation's domain (unknown rule, negative sqrt, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numerical invariant that must always hold did not.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

class NoRealPairError : public Error {
 public:
  using Error::Error;
};

class InvalidBranchError : public Error {
 public:
  using Error::Error;
};

class InvalidPairingError : public Error {
 public:
  using Error::Error;
};

/// Trilinear map has a non-positive Jacobian determinant at a quadrature point.
class InvertedCellError : public Error {
 public:
  using Error::Error;
};

}  // namespace stroud
