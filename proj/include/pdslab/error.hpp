#pragma once

#include <stdexcept>
#include <string>

namespace pdslab {

// Bad parameters or a violated precondition (CLI exit code 2).
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A computed quantity contradicts what the mathematics guarantees; signals
// either a bug or input that silently violates a precondition.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// File or stream failure (CLI exit code 3).
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace pdslab
