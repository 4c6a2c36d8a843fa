#pragma once

#include <stdexcept>
#include <string>

namespace bcmetric {

/// Invalid argument or parameter outside its domain (b < 1, empty sample, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A distance or map produced a non-finite value, or threw, at a sample point.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point lies outside the set an operation is defined on (off S, off T, outside the box).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Quadrature or minimization failed to reach its tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bcmetric
