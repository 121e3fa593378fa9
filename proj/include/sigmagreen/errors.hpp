#pragma once

#include <stdexcept>
#include <string>

namespace sigmagreen {

// Invalid arguments (wrong sizes, out-of-range orders, malformed input).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A point or parameter outside the domain where an operation is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Floating-point or iterative failure (non-finite data, solver breakdown).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Newton iterate left the admissible cone and damping hit its floor.
class ConeExitError : public NumericError {
 public:
  using NumericError::NumericError;
};

// Birkhoff-von Neumann decomposition could not find a perfect matching.
class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sigmagreen
