#pragma once

#include <array>
#include <string_view>

#include "loglambert/solver_options.hpp"

namespace loglambert {

/// Branches of the logarithmic Lambert function, the inverse of
/// f(y) = y*ln(B*y)*e^y for a fixed constant B. Each branch is the
/// restriction of the inverse to one monotone piece of f, split at the
/// branch points delta where (y+1)*ln(B*y) = -1 and f'(delta) = 0.
///
/// B > 0 (y > 0, single branch point delta in (0, 1/B)):
///   Pos0: x in [f(delta), inf)  -> y in [delta, inf), increasing
///   Pos1: x in [f(delta), 0)    -> y in (0, delta],   decreasing
/// B < 0 (y < 0, branch points delta1 < 1/B < delta2 < 0):
///   Neg0: x in (0, f(delta2)]         -> y in [delta2, 0), decreasing
///   Neg1: x in [f(delta1), f(delta2)] -> y in [delta1, delta2], increasing
///   Neg2: x in [f(delta1), 0)         -> y in (-inf, delta1], decreasing
///
/// Domains are closed at branch-point images (y = delta is attained, with
/// an unbounded derivative) and open at the limiting endpoint x = 0 of
/// Pos1, Neg0 and Neg2, which is approached but never reached.
enum class BranchId { Pos0, Pos1, Neg0, Neg1, Neg2 };

bool branch_requires_positive_b(BranchId branch);
bool branch_is_increasing(BranchId branch);
std::string_view branch_name(BranchId branch);            // "pos0", ...
BranchId branch_from_name(std::string_view name);         // throws DomainError

struct EvalDiagnostics {
  int iterations = 0;
  double residual = 0.0;       // |f(y) - x| at the returned y
  double bracket_width = 0.0;  // width of the final enclosing bracket
  bool derivative_singular = false;  // x hit a branch-point image exactly
};

struct EvalResult {
  double y = 0.0;
  EvalDiagnostics diag;
};

/// The constant B together with its precomputed branch points and their
/// images under f. Immutable after construction; construction solves the
/// singular equation (y+1)*ln(B*y) = -1 by bisection.
class LogLambertContext {
 public:
  double b() const { return b_; }
  const SolverOptions& options() const { return opts_; }

  // B > 0 accessors.
  double delta() const;
  double f_delta() const;

  // B < 0 accessors, delta1 < 1/B < delta2 < 0.
  double delta1() const;
  double delta2() const;
  double f_delta1() const;
  double f_delta2() const;

 private:
  friend LogLambertContext branch_points(double, const SolverOptions&);
  LogLambertContext() = default;

  double b_ = 0.0;
  std::array<double, 2> delta_{};
  std::array<double, 2> f_delta_{};
  SolverOptions opts_{};
};

/// x = f(y) = y*ln(B*y)*e^y. Requires B*y > 0.
double forward(double y, double B);

/// Solves the singular equation for the branch points of B.
LogLambertContext branch_points(double B, const SolverOptions& opts = {});

/// Branch-aware inverse: returns y with forward(y, B) = x on the given
/// branch. At x exactly equal to a branch-point image the branch point
/// itself is returned with diag.derivative_singular set.
EvalResult eval(double x, const LogLambertContext& ctx, BranchId branch);

/// dW_L/dx = e^{-y} / ((y+1)*ln(B*y) + 1), y = eval(x). Unbounded at
/// branch points, where SingularityError is raised.
double derivative(double x, const LogLambertContext& ctx, BranchId branch);

/// Antiderivative of W_L with integration constant 0:
///   F(x) = e^y*(1 + (y^2 - y + 1)*ln(B*y)) - Ei(y),  y = eval(x).
/// dF/dx = W_L(x) on every branch.
double antiderivative(double x, const LogLambertContext& ctx, BranchId branch);

/// Taylor polynomial of W_L about x = 0, truncated after the given order
/// (1, 2 or 3):
///   1/B + g1*x + g2/2!*x^2 + g3/3!*x^3
/// with the Lagrange-inversion coefficients
///   g1 = e^{-1/B}, g2 = -(2+B)e^{-2/B}, g3 = (4B^2+9B+9)e^{-3/B}.
double taylor_eval(double x, double B, int order);

/// Large-x approximation W0(x) - ln(ln(B*W0(x))). Requires B*W0(x) > 1.
double asymptotic_approx(double x, double B);

}  // namespace loglambert
