#pragma once

#include <stdexcept>
#include <string>

namespace wbk {

/// Base of every error raised by the library. Verdicts (a relation that
/// fails to hold) are never reported through exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, JSON documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain: a value fails the
/// operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// No multiplier witness exists because U is not compactly contained in V.
class NotCompactlyContained : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace wbk
