#pragma once

#include <stdexcept>

namespace loglambert {

/// Argument lies outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation at a branch point, where dW_L/dx is unbounded.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Deformation-parameter region with no defined branch rule.
class UncoveredRegionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An intermediate quantity left the binary64 range.
class OverflowError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// An iterative solver exhausted its iteration budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace loglambert
