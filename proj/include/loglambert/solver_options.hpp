#pragma once

#include "loglambert/errors.hpp"

namespace loglambert {

/// Tolerances shared by the iterative solvers. abs_tol bounds the accepted
/// residual scaled by 1+|x|; rel_tol bounds the last step relative to 1+|y|;
/// max_iter caps both refinement steps and bracket growing/shrinking.
struct SolverOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  int max_iter = 100;

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
      throw DomainError("SolverOptions: tolerances must be positive");
    if (max_iter < 1) throw DomainError("SolverOptions: max_iter must be >= 1");
  }
};

}  // namespace loglambert
