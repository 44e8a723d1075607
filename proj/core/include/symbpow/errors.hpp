#pragma once

#include <stdexcept>
#include <string>

namespace symbpow {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands were built over different rings.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// An exponent would exceed the ring's configured cap.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A squarefree (radical) monomial ideal was required.
class NotSquarefree : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace symbpow
