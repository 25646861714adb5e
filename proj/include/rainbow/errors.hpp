#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: out-of-range parameters, malformed equations, wrong flag combos.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A construction's mathematical precondition does not hold for the inputs.
class PreconditionError : public UsageError {
 public:
  using UsageError::UsageError;
};

/// Parameters are valid but no suitable set could be generated (e.g. eps too small).
class InfeasibleError : public UsageError {
 public:
  using UsageError::UsageError;
};

/// Malformed vertex/edge/cycle data.
class StructuralError : public UsageError {
 public:
  using UsageError::UsageError;
};

/// Malformed input document.
class FormatError : public UsageError {
 public:
  using UsageError::UsageError;
};

/// A search ran out of its node or time budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// A result contradicts a proven property; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace rainbow
