#pragma once

#include <stdexcept>

namespace cyclokit {

// Raised when an input violates a mathematical precondition (non-coprime
// arguments, characteristic dividing n, non-quadratic input, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an explicit construction would exceed the configured size
// bound (oracle fields, factorization range).
class SizeBoundError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace cyclokit
