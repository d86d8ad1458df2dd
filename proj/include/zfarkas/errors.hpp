#pragma once

#include <stdexcept>
#include <string>

namespace zfarkas {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed or out-of-domain input (zero lattice, non-prime in a prime set, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A documented size cap was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A state that the theory rules out was reached. Always a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// The target is not in the Q_P-span of the vector family.
class NotInQpSpan : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

/// Some box bound lies outside Q_P.
class BoundsNotInQp : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

}  // namespace zfarkas
