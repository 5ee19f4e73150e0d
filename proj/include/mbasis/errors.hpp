#pragma once

#include <stdexcept>
#include <string>

namespace mbasis {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text, inconsistent dimensions, operands from different fields,
/// or any other violation of an operation's precondition.
class InvalidInput : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

/// An enumeration would exceed the configured element limit.
class LimitExceeded : public Error {
public:
  using Error::Error;
};

/// The requested operation needs a finite base field.
class Unsupported : public Error {
public:
  using Error::Error;
};

/// A self-check failed; reaching this indicates a bug in the library.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace mbasis
