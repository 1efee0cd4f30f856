#include "loglambert/log_lambert.hpp"

#include <cmath>
#include <limits>

#include "loglambert/special_functions.hpp"

namespace loglambert {

namespace {

// f and f' without the B*y > 0 domain check; callers stay on one branch.
double f_raw(double y, double B) { return y * std::log(B * y) * std::exp(y); }

double fprime_raw(double y, double B) {
  return ((y + 1.0) * std::log(B * y) + 1.0) * std::exp(y);
}

double singular_lhs(double y, double B) {
  return (y + 1.0) * std::log(B * y) + 1.0;
}

// Bisection on the singular equation over a sign-changing interval,
// driven to the floating fixed point. Within a side of 1/B the equation
// has exactly one root, so plain bisection cannot miss.
double bisect_singular(double lo, double hi, double B) {
  double slo = singular_lhs(lo, B);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double smid = singular_lhs(mid, B);
    if (smid == 0.0) return mid;
    if ((slo < 0.0) == (smid < 0.0)) {
      lo = mid;
      slo = smid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

EvalResult branch_point_result(double x, double delta, double B) {
  EvalResult r;
  r.y = delta;
  r.diag.iterations = 0;
  r.diag.residual = std::abs(f_raw(delta, B) - x);
  r.diag.bracket_width = 0.0;
  r.diag.derivative_singular = true;
  return r;
}

// Safeguarded Newton inside a monotone bracket [ylo, yhi] with
// f(ylo), f(yhi) straddling x. Newton steps that leave the bracket or
// fail to be finite fall back to bisection; monotonicity guarantees the
// bracket keeps enclosing the root.
EvalResult solve_in_bracket(double x, double B, double ylo, double yhi,
                            bool increasing, const SolverOptions& opts) {
  const double tol = opts.abs_tol * (1.0 + std::abs(x));
  double y = 0.5 * (ylo + yhi);
  double g = f_raw(y, B) - x;
  EvalResult res;
  int it = 0;
  for (; it < opts.max_iter; ++it) {
    if (std::abs(g) <= tol) break;
    if (std::isfinite(g) && ((g < 0.0) == increasing))
      ylo = y;
    else
      yhi = y;
    double ynew = std::numeric_limits<double>::quiet_NaN();
    if (std::isfinite(g)) {
      const double d = fprime_raw(y, B);
      if (std::isfinite(d) && d != 0.0) ynew = y - g / d;
    }
    const double lo = std::min(ylo, yhi);
    const double hi = std::max(ylo, yhi);
    if (!(ynew > lo && ynew < hi)) ynew = 0.5 * (ylo + yhi);
    if (ynew == y || ynew == ylo || ynew == yhi) {
      // bracket exhausted at double resolution; keep the best endpoint
      const double galt = f_raw(ynew, B) - x;
      if (std::abs(galt) < std::abs(g)) {
        y = ynew;
        g = galt;
      }
      break;
    }
    y = ynew;
    g = f_raw(y, B) - x;
  }
  if (!(std::abs(g) <= tol))
    throw ConvergenceError("eval: residual did not reach tolerance");
  res.y = y;
  res.diag.iterations = it;
  res.diag.residual = std::abs(g);
  res.diag.bracket_width = std::abs(yhi - ylo);
  return res;
}

}  // namespace

bool branch_requires_positive_b(BranchId branch) {
  return branch == BranchId::Pos0 || branch == BranchId::Pos1;
}

bool branch_is_increasing(BranchId branch) {
  return branch == BranchId::Pos0 || branch == BranchId::Neg1;
}

std::string_view branch_name(BranchId branch) {
  switch (branch) {
    case BranchId::Pos0: return "pos0";
    case BranchId::Pos1: return "pos1";
    case BranchId::Neg0: return "neg0";
    case BranchId::Neg1: return "neg1";
    case BranchId::Neg2: return "neg2";
  }
  return "?";
}

BranchId branch_from_name(std::string_view name) {
  if (name == "pos0") return BranchId::Pos0;
  if (name == "pos1") return BranchId::Pos1;
  if (name == "neg0") return BranchId::Neg0;
  if (name == "neg1") return BranchId::Neg1;
  if (name == "neg2") return BranchId::Neg2;
  throw DomainError("unknown branch name; expected pos0|pos1|neg0|neg1|neg2");
}

double LogLambertContext::delta() const {
  if (!(b_ > 0.0)) throw DomainError("delta(): context has B < 0");
  return delta_[0];
}
double LogLambertContext::f_delta() const {
  if (!(b_ > 0.0)) throw DomainError("f_delta(): context has B < 0");
  return f_delta_[0];
}
double LogLambertContext::delta1() const {
  if (!(b_ < 0.0)) throw DomainError("delta1(): context has B > 0");
  return delta_[0];
}
double LogLambertContext::delta2() const {
  if (!(b_ < 0.0)) throw DomainError("delta2(): context has B > 0");
  return delta_[1];
}
double LogLambertContext::f_delta1() const {
  if (!(b_ < 0.0)) throw DomainError("f_delta1(): context has B > 0");
  return f_delta_[0];
}
double LogLambertContext::f_delta2() const {
  if (!(b_ < 0.0)) throw DomainError("f_delta2(): context has B > 0");
  return f_delta_[1];
}

double forward(double y, double B) {
  if (!(B * y > 0.0)) throw DomainError("forward: requires B*y > 0");
  return f_raw(y, B);
}

LogLambertContext branch_points(double B, const SolverOptions& opts) {
  opts.validate();
  if (!std::isfinite(B) || B == 0.0)
    throw DomainError("branch_points: B must be finite and nonzero");

  LogLambertContext ctx;
  ctx.b_ = B;
  ctx.opts_ = opts;
  const double inv = 1.0 / B;
  const double eps = 1e-12 * (1.0 + std::abs(inv));

  if (B > 0.0) {
    // unique root in (0, 1/B): lhs -> -inf at 0+ and equals +1 at 1/B
    double lo = eps;
    int k = 0;
    while (!(singular_lhs(lo, B) < 0.0)) {
      lo *= 0.5;
      if (++k > opts.max_iter)
        throw ConvergenceError("branch_points: failed to bracket delta");
    }
    const double d = bisect_singular(lo, inv - eps, B);
    ctx.delta_[0] = d;
    ctx.f_delta_[0] = f_raw(d, B);
  } else {
    // delta2 in (1/B, 0): lhs is +1 at 1/B and -> -inf as y -> 0-
    double hi = -eps;
    int k = 0;
    while (!(singular_lhs(hi, B) < 0.0)) {
      hi *= 0.5;
      if (++k > opts.max_iter)
        throw ConvergenceError("branch_points: failed to bracket delta2");
    }
    const double d2 = bisect_singular(inv, hi, B);
    // delta1 in (-inf, 1/B): lhs -> -inf as y -> -inf; grow by doubling
    double lo = 2.0 * inv;
    k = 0;
    while (!(singular_lhs(lo, B) < 0.0)) {
      lo *= 2.0;
      if (++k > opts.max_iter)
        throw ConvergenceError("branch_points: failed to bracket delta1");
    }
    const double d1 = bisect_singular(lo, inv, B);
    ctx.delta_ = {d1, d2};
    ctx.f_delta_ = {f_raw(d1, B), f_raw(d2, B)};
    if (!(ctx.f_delta_[0] < ctx.f_delta_[1]))
      throw DomainError("branch_points: inconsistent branch-point images");
  }
  return ctx;
}

EvalResult eval(double x, const LogLambertContext& ctx, BranchId branch) {
  const double B = ctx.b();
  if (!std::isfinite(x)) throw DomainError("eval: x must be finite");
  if (branch_requires_positive_b(branch) != (B > 0.0))
    throw DomainError("eval: branch incompatible with the sign of B");
  const SolverOptions& opts = ctx.options();

  switch (branch) {
    case BranchId::Pos0: {
      const double fd = ctx.f_delta();
      if (x == fd) return branch_point_result(x, ctx.delta(), B);
      if (x < fd) throw DomainError("eval: x below f(delta) on pos0");
      const double lo = ctx.delta();
      double hi = std::max(lo * 1.000001, 1.0 / B);
      int k = 0;
      while (!(f_raw(hi, B) >= x)) {
        hi *= 2.0;
        if (++k > opts.max_iter)
          throw ConvergenceError("eval: bracketing failed on pos0");
      }
      return solve_in_bracket(x, B, lo, hi, true, opts);
    }
    case BranchId::Pos1: {
      const double fd = ctx.f_delta();
      if (x == fd) return branch_point_result(x, ctx.delta(), B);
      if (x < fd || x >= 0.0)
        throw DomainError("eval: x outside [f(delta), 0) on pos1");
      const double hi = ctx.delta();
      double lo = hi;
      int k = 0;
      do {
        lo *= 0.5;
        if (++k > opts.max_iter)
          throw ConvergenceError("eval: bracketing failed on pos1");
      } while (!(f_raw(lo, B) > x));
      return solve_in_bracket(x, B, lo, hi, false, opts);
    }
    case BranchId::Neg0: {
      const double fd2 = ctx.f_delta2();
      if (x == fd2) return branch_point_result(x, ctx.delta2(), B);
      if (!(x > 0.0) || x > fd2)
        throw DomainError("eval: x outside (0, f(delta2)] on neg0");
      const double lo = ctx.delta2();
      double hi = lo;
      int k = 0;
      do {
        hi *= 0.5;
        if (++k > opts.max_iter)
          throw ConvergenceError("eval: bracketing failed on neg0");
      } while (!(f_raw(hi, B) < x));
      return solve_in_bracket(x, B, lo, hi, false, opts);
    }
    case BranchId::Neg1: {
      const double fd1 = ctx.f_delta1();
      const double fd2 = ctx.f_delta2();
      if (x == fd1) return branch_point_result(x, ctx.delta1(), B);
      if (x == fd2) return branch_point_result(x, ctx.delta2(), B);
      if (x < fd1 || x > fd2)
        throw DomainError("eval: x outside [f(delta1), f(delta2)] on neg1");
      return solve_in_bracket(x, B, ctx.delta1(), ctx.delta2(), true, opts);
    }
    case BranchId::Neg2: {
      const double fd1 = ctx.f_delta1();
      if (x == fd1) return branch_point_result(x, ctx.delta1(), B);
      if (x < fd1 || x >= 0.0)
        throw DomainError("eval: x outside [f(delta1), 0) on neg2");
      const double hi = ctx.delta1();
      double lo = hi;
      int k = 0;
      do {
        lo *= 2.0;
        if (++k > opts.max_iter)
          throw ConvergenceError("eval: bracketing failed on neg2");
      } while (!(f_raw(lo, B) > x));
      return solve_in_bracket(x, B, lo, hi, false, opts);
    }
  }
  throw DomainError("eval: unknown branch");
}

double derivative(double x, const LogLambertContext& ctx, BranchId branch) {
  const EvalResult r = eval(x, ctx, branch);
  if (r.diag.derivative_singular)
    throw SingularityError("derivative: unbounded at a branch point");
  const double den = (r.y + 1.0) * std::log(ctx.b() * r.y) + 1.0;
  if (den == 0.0)
    throw SingularityError("derivative: unbounded at a branch point");
  return std::exp(-r.y) / den;
}

double antiderivative(double x, const LogLambertContext& ctx, BranchId branch) {
  const double y = eval(x, ctx, branch).y;
  const double u = std::log(ctx.b() * y);
  return std::exp(y) * (1.0 + (y * y - y + 1.0) * u) - exp_integral_ei(y);
}

double taylor_eval(double x, double B, int order) {
  if (!std::isfinite(B) || B == 0.0)
    throw DomainError("taylor_eval: B must be finite and nonzero");
  if (order < 1 || order > 3)
    throw DomainError("taylor_eval: order must be 1, 2 or 3");
  double acc = 1.0 / B + std::exp(-1.0 / B) * x;
  if (order >= 2) acc -= (2.0 + B) * std::exp(-2.0 / B) / 2.0 * x * x;
  if (order >= 3)
    acc += (4.0 * B * B + 9.0 * B + 9.0) * std::exp(-3.0 / B) / 6.0 * x * x * x;
  return acc;
}

double asymptotic_approx(double x, double B) {
  const double w = lambert_w0(x);
  if (!(B * w > 1.0))
    throw DomainError("asymptotic_approx: requires B*W0(x) > 1");
  return w - std::log(std::log(B * w));
}

}  // namespace loglambert
