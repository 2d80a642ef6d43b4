#pragma once

#include <stdexcept>
#include <string>

namespace hypertrace {

// Argument outside the mathematical domain of an operation (r > n, d > 4, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input hypergraph does not have the shape an engine requires.
class UnsupportedShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact identity that must hold did not (wrong trace input, bad division).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hypertrace
