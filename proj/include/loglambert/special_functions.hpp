#pragma once

#include "loglambert/solver_options.hpp"

namespace loglambert {

/// Principal branch of the classical Lambert W function: the solution
/// w >= -1 of w*e^w = x, defined for x >= -1/e.
double lambert_w0(double x, const SolverOptions& opts = {});

/// Real exponential integral Ei(x): principal value of the integral of
/// e^t/t up to x. For x < 0 this equals -E1(-x). x = 0 is a logarithmic
/// singularity and is rejected.
double exp_integral_ei(double x);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

}  // namespace loglambert
