#include "loglambert/special_functions.hpp"

#include <cmath>
#include <limits>

namespace loglambert {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kInvE = 0.36787944117144232159552377016146087;

// Everywhere-convergent series Ei(x) = gamma + ln|x| + sum_{n>=1} x^n/(n*n!).
// For x > 0 all terms are positive; on the negative axis the alternating
// cancellation is mild for |x| <= 1, which is the only range it serves.
double ei_series(double x) {
  double sum = 0.0;
  double term = 1.0;
  for (int n = 1; n < 1000; ++n) {
    term *= x / n;
    const double add = term / n;
    sum += add;
    if (std::abs(add) <= 1e-17 * std::abs(sum)) break;
  }
  return kEulerGamma + std::log(std::abs(x)) + sum;
}

// Divergent asymptotic expansion Ei(x) ~ e^x/x * sum_k k!/x^k, truncated at
// the smallest term. Relative error ~ sqrt(2 pi x) e^{-x}, negligible for
// the x > 40 regime it serves.
double ei_asymptotic(double x) {
  double sum = 1.0;
  double term = 1.0;
  for (int k = 1; k < static_cast<int>(x); ++k) {
    const double next = term * k / x;
    if (next >= term) break;  // past the smallest term
    term = next;
    sum += term;
    if (term <= 1e-17 * sum) break;
  }
  return std::exp(x) / x * sum;
}

// E1(t) for t > 1 by the modified Lentz continued fraction
//   E1(t) = e^{-t} / (t + 1 - 1/(t + 3 - 4/(t + 5 - 9/(...)))).
double e1_continued_fraction(double t) {
  const double tiny = 1e-300;
  double b = t + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int n = 1; n <= 300; ++n) {
    const double a = -static_cast<double>(n) * n;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) <= 1e-16) break;
  }
  return std::exp(-t) * h;
}

}  // namespace

double lambert_w0(double x, const SolverOptions& opts) {
  opts.validate();
  if (std::isnan(x)) throw DomainError("lambert_w0: x is NaN");
  if (x < -kInvE) throw DomainError("lambert_w0: x < -1/e");
  if (x == 0.0) return 0.0;
  if (x == -kInvE) return -1.0;

  double w;
  if (x < -0.3) {
    // series around the branch point -1/e in p = sqrt(2(1 + e x))
    const double p = std::sqrt(2.0 * (1.0 + std::exp(1.0) * x));
    w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  } else if (x < 6.0) {
    w = x / (1.0 + x);
  } else {
    const double l = std::log(x);
    const double ll = std::log(l);
    w = l - ll + ll / l;
  }

  const double tol = opts.abs_tol * (1.0 + std::abs(x));
  for (int it = 0; it < opts.max_iter; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (std::abs(f) <= tol) return w;
    const double wp1 = w + 1.0;
    // Halley step; plain Newton if the Halley denominator degenerates
    double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    if (!std::isfinite(denom) || denom == 0.0) denom = ew * wp1;
    const double dw = f / denom;
    w -= dw;
    if (std::abs(dw) <= opts.rel_tol * (1.0 + std::abs(w)) &&
        std::abs(w * std::exp(w) - x) <= tol)
      return w;
  }
  throw ConvergenceError("lambert_w0: no convergence within max_iter");
}

double exp_integral_ei(double x) {
  if (std::isnan(x)) throw DomainError("exp_integral_ei: x is NaN");
  if (x == 0.0)
    throw DomainError("exp_integral_ei: logarithmic singularity at x = 0");
  if (x > 0.0) return x <= 40.0 ? ei_series(x) : ei_asymptotic(x);
  // Ei(x) = -E1(-x) for x < 0
  const double t = -x;
  return t <= 1.0 ? ei_series(x) : -e1_continued_fraction(t);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: requires x > 0");
  return std::lgamma(x);
}

}  // namespace loglambert
