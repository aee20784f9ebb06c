#pragma once

#include <stdexcept>
#include <string>

namespace conformal {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed caller input: wrong dimensions, bad files, bad flags.
class InputError : public Error {
public:
  using Error::Error;
};

/// A requested catalog algebra name is not recognised.
class UnknownAlgebraError : public InputError {
public:
  using InputError::InputError;
};

/// Structure constants violate the Jacobi identity beyond tolerance.
class InvalidAlgebraError : public Error {
public:
  using Error::Error;
};

/// The negative Killing form is not positive definite.
class NotSemisimpleError : public Error {
public:
  using Error::Error;
};

/// A closure iteration failed to reach a fixed point (numerical failure).
class NoConvergenceError : public Error {
public:
  using Error::Error;
};

/// An argument violates a documented precondition of an operation.
class ContractViolationError : public Error {
public:
  using Error::Error;
};

} // namespace conformal
