#pragma once

#include <stdexcept>
#include <string>

namespace anomcheck {

// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Operands live in different rings / coefficient domains.
class IncompatibleRings : public Error {
 public:
  IncompatibleRings() : Error("incompatible rings") {}
};

// Something that the engine guarantees cannot happen did happen.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace anomcheck
