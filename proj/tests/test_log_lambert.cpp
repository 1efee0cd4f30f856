#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "loglambert/log_lambert.hpp"
#include "oracles.hpp"

using namespace loglambert;

namespace {

// Branch-range samples avoiding the endpoints; t in (0, 1).
std::vector<double> branch_samples(const LogLambertContext& ctx, BranchId br,
                                   int n) {
  std::vector<double> ys;
  ys.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double t = (i + 0.5) / n;
    switch (br) {
      case BranchId::Pos0:
        ys.push_back(ctx.delta() * (1.0 + 0.002) + t * t * 14.0);
        break;
      case BranchId::Pos1:
        ys.push_back(ctx.delta() * (0.002 + 0.996 * t));
        break;
      case BranchId::Neg0:
        ys.push_back(ctx.delta2() * (0.002 + 0.996 * t));
        break;
      case BranchId::Neg1:
        ys.push_back(ctx.delta1() + (0.002 + 0.996 * t) * (ctx.delta2() - ctx.delta1()));
        break;
      case BranchId::Neg2:
        ys.push_back(ctx.delta1() * (1.0 + 0.002) - t * t * 12.0);
        break;
    }
  }
  return ys;
}

std::vector<BranchId> branches_for(double B) {
  if (B > 0.0) return {BranchId::Pos0, BranchId::Pos1};
  return {BranchId::Neg0, BranchId::Neg1, BranchId::Neg2};
}

}  // namespace

TEST_CASE("forward pinned values") {
  CHECK(std::abs(forward(4.0, 1.0) - 302.7564) < 5e-5);
  CHECK(forward(4.0, 1.0) == doctest::Approx(302.75643007410251).epsilon(1e-15));
  CHECK(std::abs(forward(5.0, 1.0) - 1194.3088) < 5e-5);
  for (const double B : {1.0, 2.0, -1.0, -0.5, 0.25}) CHECK(forward(1.0 / B, B) == 0.0);
  CHECK(std::abs(forward(1.0 / 3.0, 3.0)) < 1e-15);
}

TEST_CASE("forward domain errors") {
  CHECK_THROWS_AS(forward(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(forward(1.0, -1.0), DomainError);
  CHECK_THROWS_AS(forward(0.0, 1.0), DomainError);
}

TEST_CASE("branch_points against the bisection oracle") {
  const auto singular = [](double B) {
    return [B](double y) { return (y + 1.0) * std::log(B * y) + 1.0; };
  };

  const LogLambertContext c1 = branch_points(1.0);
  const double d1_oracle = oracles::bisect(singular(1.0), 0.1, 0.9);
  CHECK(c1.delta() == doctest::Approx(d1_oracle).epsilon(1e-13));
  CHECK(c1.delta() > 0.51);
  CHECK(c1.delta() < 0.53);
  CHECK(c1.f_delta() == doctest::Approx(-0.572).epsilon(1e-3));

  const LogLambertContext cm1 = branch_points(-1.0);
  const double d2_oracle = oracles::bisect(singular(-1.0), -0.9, -0.1);
  const double d1m_oracle = oracles::bisect(singular(-1.0), -5.0, -1.1);
  CHECK(cm1.delta2() == doctest::Approx(d2_oracle).epsilon(1e-13));
  CHECK(cm1.delta1() == doctest::Approx(d1m_oracle).epsilon(1e-13));
  CHECK(cm1.delta2() == doctest::Approx(-0.25924635664830498).epsilon(1e-12));
  CHECK(cm1.delta1() == doctest::Approx(-2.2399778876565501).epsilon(1e-12));
  CHECK(cm1.f_delta1() < cm1.f_delta2());
  CHECK(cm1.delta1() < -1.0);
  CHECK(cm1.delta2() > -1.0);

  for (const double B : {1.0, 2.0, -1.0, -0.5, 10.0, -7.0}) {
    const LogLambertContext ctx = branch_points(B);
    if (B > 0.0) {
      CHECK(std::abs((ctx.delta() + 1.0) * std::log(B * ctx.delta()) + 1.0) <= 1e-12);
      CHECK(B * ctx.delta() < 1.0);
      CHECK(B * ctx.delta() > 0.0);
    } else {
      for (const double d : {ctx.delta1(), ctx.delta2()}) {
        CHECK(std::abs((d + 1.0) * std::log(B * d) + 1.0) <= 1e-12);
        CHECK(B * d > 0.0);
      }
      CHECK(ctx.delta1() < 1.0 / B);
      CHECK(ctx.delta2() > 1.0 / B);
      CHECK(ctx.delta2() < 0.0);
    }
  }

  CHECK_THROWS_AS(branch_points(0.0), DomainError);
  // delta collapses below bracketing resolution within the doubling budget
  CHECK_THROWS_AS(branch_points(1e300), ConvergenceError);
}

TEST_CASE("eval pinned values") {
  const LogLambertContext c1 = branch_points(1.0);
  // the 4-decimal table abscissa sits 3e-5 off the exact f(4), which
  // shifts the root by |dx|/f'(4) = 6.9e-8
  CHECK(std::abs(eval(302.7564, c1, BranchId::Pos0).y - 4.0) < 1e-7);
  CHECK(eval(forward(4.0, 1.0), c1, BranchId::Pos0).y ==
        doctest::Approx(4.0).epsilon(1e-12));
  CHECK(eval(0.0, c1, BranchId::Pos0).y == doctest::Approx(1.0).epsilon(1e-13));

  // x = 0 is attained only on the branch containing y = 1/B
  const LogLambertContext cm1 = branch_points(-1.0);
  CHECK(eval(0.0, cm1, BranchId::Neg1).y == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK_THROWS_AS(eval(0.0, cm1, BranchId::Neg0), DomainError);
  CHECK_THROWS_AS(eval(0.0, cm1, BranchId::Neg2), DomainError);
}

TEST_CASE("eval at the branch point returns delta with the singular flag") {
  const LogLambertContext c1 = branch_points(1.0);
  for (const BranchId br : {BranchId::Pos0, BranchId::Pos1}) {
    const EvalResult r = eval(c1.f_delta(), c1, br);
    CHECK(r.y == c1.delta());
    CHECK(r.diag.derivative_singular);
  }
  const LogLambertContext cm1 = branch_points(-1.0);
  CHECK(eval(cm1.f_delta1(), cm1, BranchId::Neg1).y == cm1.delta1());
  CHECK(eval(cm1.f_delta2(), cm1, BranchId::Neg1).y == cm1.delta2());
  CHECK(eval(cm1.f_delta2(), cm1, BranchId::Neg0).diag.derivative_singular);
  CHECK(eval(cm1.f_delta1(), cm1, BranchId::Neg2).diag.derivative_singular);
}

TEST_CASE("eval domain errors per branch") {
  const LogLambertContext c1 = branch_points(1.0);
  CHECK_THROWS_AS(eval(c1.f_delta() - 0.01, c1, BranchId::Pos0), DomainError);
  CHECK_THROWS_AS(eval(-10.0, c1, BranchId::Pos0), DomainError);
  CHECK_THROWS_AS(eval(0.0, c1, BranchId::Pos1), DomainError);
  CHECK_THROWS_AS(eval(0.5, c1, BranchId::Pos1), DomainError);
  CHECK_THROWS_AS(eval(1.0, c1, BranchId::Neg0), DomainError);  // wrong sign of B

  const LogLambertContext cm1 = branch_points(-1.0);
  CHECK_THROWS_AS(eval(-0.5, cm1, BranchId::Neg0), DomainError);
  CHECK_THROWS_AS(eval(cm1.f_delta2() + 0.01, cm1, BranchId::Neg0), DomainError);
  CHECK_THROWS_AS(eval(cm1.f_delta1() - 0.01, cm1, BranchId::Neg1), DomainError);
  CHECK_THROWS_AS(eval(cm1.f_delta2() + 0.01, cm1, BranchId::Neg1), DomainError);
  CHECK_THROWS_AS(eval(0.1, cm1, BranchId::Neg2), DomainError);
  CHECK_THROWS_AS(eval(1.0, cm1, BranchId::Pos0), DomainError);
}

TEST_CASE("eval non-convergence when the limiting endpoint is unresolvable") {
  const LogLambertContext c1 = branch_points(1.0);
  CHECK_THROWS_AS(eval(-1e-300, c1, BranchId::Pos1), ConvergenceError);
}

TEST_CASE("round trip, sign and residual across all branches") {
  for (const double B : {1.0, 2.0, -1.0, -0.5}) {
    const LogLambertContext ctx = branch_points(B);
    for (const BranchId br : branches_for(B)) {
      for (const double y : branch_samples(ctx, br, 200)) {
        const double x = forward(y, B);
        const EvalResult r = eval(x, ctx, br);
        CHECK(std::abs(r.y - y) <= 1e-9 * (1.0 + std::abs(y)));
        CHECK(B * r.y > 0.0);
        CHECK(r.diag.residual <= 1e-13 * (1.0 + std::abs(x)));
        CHECK(r.diag.iterations <= ctx.options().max_iter);
      }
    }
  }
}

TEST_CASE("monotone direction per branch") {
  for (const double B : {1.0, -1.0}) {
    const LogLambertContext ctx = branch_points(B);
    for (const BranchId br : branches_for(B)) {
      // x-grid strictly inside the branch domain
      double lo = 0.0, hi = 0.0;
      switch (br) {
        case BranchId::Pos0: lo = ctx.f_delta() * 0.98; hi = 40.0; break;
        case BranchId::Pos1: lo = ctx.f_delta() * 0.98; hi = ctx.f_delta() * 0.01; break;
        case BranchId::Neg0: lo = ctx.f_delta2() * 0.02; hi = ctx.f_delta2() * 0.98; break;
        case BranchId::Neg1: {
          const double w = ctx.f_delta2() - ctx.f_delta1();
          lo = ctx.f_delta1() + 0.02 * w;
          hi = ctx.f_delta2() - 0.02 * w;
          break;
        }
        case BranchId::Neg2: lo = ctx.f_delta1() * 0.98; hi = ctx.f_delta1() * 0.02; break;
      }
      double prev = eval(lo, ctx, br).y;
      const int n = 60;
      for (int i = 1; i <= n; ++i) {
        const double x = lo + (hi - lo) * i / n;
        const double y = eval(x, ctx, br).y;
        if (branch_is_increasing(br))
          CHECK(y > prev);
        else
          CHECK(y < prev);
        prev = y;
      }
    }
  }
}

TEST_CASE("derivative pinned values and identity") {
  const LogLambertContext c1 = branch_points(1.0);
  CHECK(derivative(0.0, c1, BranchId::Pos0) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-13));
  // 1/f'(4) with f'(y) = ((y+1)ln y + 1) e^y
  const double expect = 1.0 / ((5.0 * std::log(4.0) + 1.0) * std::exp(4.0));
  CHECK(derivative(forward(4.0, 1.0), c1, BranchId::Pos0) ==
        doctest::Approx(expect).epsilon(1e-12));
  CHECK(expect == doctest::Approx(0.0023092358313375990).epsilon(1e-14));
  CHECK_THROWS_AS(derivative(c1.f_delta(), c1, BranchId::Pos0), SingularityError);

  for (const double B : {1.0, -1.0}) {
    const LogLambertContext ctx = branch_points(B);
    for (const BranchId br : branches_for(B)) {
      for (const double y : branch_samples(ctx, br, 25)) {
        const double x = forward(y, B);
        const double d = derivative(x, ctx, br);
        const double yy = eval(x, ctx, br).y;
        const double prod =
            d * ((yy + 1.0) * std::log(B * yy) + 1.0) * std::exp(yy);
        CHECK(prod == doctest::Approx(1.0).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("derivative matches a central finite difference of eval") {
  for (const double B : {1.0, -1.0}) {
    const LogLambertContext ctx = branch_points(B);
    for (const BranchId br : branches_for(B)) {
      for (const double y : branch_samples(ctx, br, 20)) {
        const double x = forward(y, B);
        // stay away from branch points and domain edges
        if (B > 0.0 && std::abs(x - ctx.f_delta()) < 1e-2) continue;
        if (B < 0.0 && (std::abs(x - ctx.f_delta1()) < 1e-2 ||
                        std::abs(x - ctx.f_delta2()) < 1e-2 || std::abs(x) < 1e-2))
          continue;
        const double h = std::sqrt(2.2e-16) * (1.0 + std::abs(x));
        const double fd =
            (eval(x + h, ctx, br).y - eval(x - h, ctx, br).y) / (2.0 * h);
        const double d = derivative(x, ctx, br);
        CHECK(std::abs(fd - d) <= 1e-6 * std::abs(d));
      }
    }
  }
}

TEST_CASE("antiderivative pinned value, FTC and quadrature") {
  const LogLambertContext c1 = branch_points(1.0);
  // F(0) on pos0: y = 1, F = e - Ei(1), via the series oracle
  const double expect = std::exp(1.0) - oracles::ei_series(1.0);
  CHECK(expect == doctest::Approx(0.82316401210310848).epsilon(1e-14));
  CHECK(antiderivative(0.0, c1, BranchId::Pos0) ==
        doctest::Approx(expect).epsilon(1e-12));

  // d/dx F = W_L at x = 10 by a central difference
  const double h = 1e-5;
  const double fd = (antiderivative(10.0 + h, c1, BranchId::Pos0) -
                     antiderivative(10.0 - h, c1, BranchId::Pos0)) /
                    (2.0 * h);
  CHECK(std::abs(fd - eval(10.0, c1, BranchId::Pos0).y) <=
        1e-6 * std::abs(fd));

  // quadrature of eval over [0, f(4)] against F(b) - F(a)
  const double b = forward(4.0, 1.0);
  const double quad = oracles::adaptive_simpson(
      [&](double x) { return eval(x, c1, BranchId::Pos0).y; }, 0.0, b, 1e-9);
  const double diff = antiderivative(b, c1, BranchId::Pos0) -
                      antiderivative(0.0, c1, BranchId::Pos0);
  CHECK(std::abs(quad - diff) <= 1e-8 * std::abs(diff));
}

TEST_CASE("taylor_eval coefficients and residual window") {
  for (const double B : {1.0, 2.0, -1.0, 0.5}) {
    CHECK(taylor_eval(0.0, B, 1) == 1.0 / B);
    CHECK(taylor_eval(0.0, B, 2) == 1.0 / B);
    CHECK(taylor_eval(0.0, B, 3) == 1.0 / B);
  }
  // B = 1 coefficients e^{-1}, -(3/2)e^{-2}, (22/6)e^{-3} read off by differencing
  const double x = 0.5;
  CHECK(taylor_eval(x, 1.0, 1) - 1.0 == doctest::Approx(std::exp(-1.0) * x));
  CHECK(taylor_eval(x, 1.0, 2) - taylor_eval(x, 1.0, 1) ==
        doctest::Approx(-1.5 * std::exp(-2.0) * x * x));
  CHECK(taylor_eval(x, 1.0, 3) - taylor_eval(x, 1.0, 2) ==
        doctest::Approx(22.0 / 6.0 * std::exp(-3.0) * x * x * x));

  const LogLambertContext c1 = branch_points(1.0);
  CHECK(std::abs(taylor_eval(0.01, 1.0, 3) - eval(0.01, c1, BranchId::Pos0).y) <=
        10.0 * std::pow(0.01, 4));

  CHECK_THROWS_AS(taylor_eval(0.1, 0.0, 2), DomainError);
  CHECK_THROWS_AS(taylor_eval(0.1, 1.0, 0), DomainError);
  CHECK_THROWS_AS(taylor_eval(0.1, 1.0, 4), DomainError);
}

TEST_CASE("asymptotic_approx against the accuracy table") {
  CHECK(std::abs(asymptotic_approx(forward(4.0, 1.0), 1.0) - 3.8914) < 5e-5);
  CHECK(std::abs(asymptotic_approx(forward(5.0, 1.0), 1.0) - 4.8766) < 5e-5);
  CHECK(std::abs(asymptotic_approx(forward(10.0, 1.0), 1.0) - 9.8953) < 5e-5);
  // B*W0(x) <= 1: outer logarithm undefined
  CHECK_THROWS_AS(asymptotic_approx(0.5, 1.0), DomainError);
  CHECK_THROWS_AS(asymptotic_approx(100.0, -1.0), DomainError);
}

TEST_CASE("branches meet at the branch point") {
  const LogLambertContext c1 = branch_points(1.0);
  const double x = c1.f_delta() * (1.0 - 1e-9);
  const double y0 = eval(x, c1, BranchId::Pos0).y;
  const double y1 = eval(x, c1, BranchId::Pos1).y;
  CHECK(std::abs(y0 - c1.delta()) <= 1e-4);
  CHECK(std::abs(y1 - c1.delta()) <= 1e-4);
  CHECK(y0 >= c1.delta());
  CHECK(y1 <= c1.delta());
  // the other side of f(delta) is below the minimum of f: no solution
  const double outside = c1.f_delta() * (1.0 + 1e-9);
  CHECK_THROWS_AS(eval(outside, c1, BranchId::Pos0), DomainError);
  CHECK_THROWS_AS(eval(outside, c1, BranchId::Pos1), DomainError);
}
