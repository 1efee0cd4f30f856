#include "loglambert/thermostatics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "loglambert/special_functions.hpp"

namespace loglambert {

namespace {

constexpr double kExpMax = 709.0;  // ln(DBL_MAX), with a little headroom

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void validate_for_ensembles(const DeformationParams& dp) {
  if (!std::isfinite(dp.q) || !std::isfinite(dp.q_prime) || !std::isfinite(dp.r))
    throw DomainError("deformation parameters must be finite");
  if (dp.q == 1.0 || dp.q_prime == 1.0 || dp.r == 1.0)
    throw DomainError("ensemble formulas require q != 1 and q' != 1 and r != 1");
}

void validate_spec(const EnsembleSpec& spec) {
  std::visit(overloaded{
                 [](const Microcanonical& e) {
                   if (e.N < 1) throw DomainError("microcanonical: N must be >= 1");
                   if (!(e.V > 0.0)) throw DomainError("microcanonical: V must be > 0");
                 },
                 [](const IsoenthalpicIsobaric& e) {
                   if (e.N < 1) throw DomainError("isoenthalpic-isobaric: N must be >= 1");
                   if (!(e.P > 0.0)) throw DomainError("isoenthalpic-isobaric: P must be > 0");
                 },
                 [](const HillEnsemble& e) {
                   if (!(e.mu > 0.0)) throw DomainError("Hill ensemble: mu must be > 0");
                   if (!(e.V > 0.0)) throw DomainError("Hill ensemble: V must be > 0");
                 },
                 [](const RayEnsemble& e) {
                   if (!(e.mu > 0.0)) throw DomainError("Ray ensemble: mu must be > 0");
                   if (!(e.P > 0.0)) throw DomainError("Ray ensemble: P must be > 0");
                   if (e.N < 1) throw DomainError("Ray ensemble: N must be >= 1");
                 },
             },
             spec);
}

// ln of the exponent inside xi_he = exp(V*(mu*e)^{D/2}*M/(D/2)^{D/2}).
double hill_xi_exponent(const HillEnsemble& e, const GasConstants& gc) {
  const double half_d = 0.5 * gc.D;
  const double lt = std::log(e.V) + half_d * (std::log(e.mu) + 1.0) + gc.log_M() -
                    half_d * std::log(half_d);
  return std::exp(lt);
}

// ln of the geometric ratio (M/P)*(mu/alpha)^alpha*e^alpha of the Ray sum.
double ray_log_ratio(const RayEnsemble& e, const GasConstants& gc, double alpha) {
  return gc.log_M() - std::log(e.P) +
         alpha * (std::log(e.mu) - std::log(alpha) + 1.0);
}

double ray_log_xi(const RayEnsemble& e, const GasConstants& gc, double alpha) {
  const double lg = ray_log_ratio(e, gc, alpha);
  if (lg >= 0.0)
    throw DomainError("Ray ensemble: geometric-series condition violated");
  return -std::log1p(-std::exp(lg));  // ln (1 - g)^{-1}
}

int sign_of_ratio(double num, double den) {
  return ((num > 0.0) == (den > 0.0)) ? 1 : -1;
}

}  // namespace

double GasConstants::log_M() const {
  return 0.5 * D * std::log(2.0 * std::numbers::pi * m / (h * h));
}

void GasConstants::validate() const {
  if (D < 1) throw DomainError("GasConstants: D must be >= 1");
  if (!(m > 0.0) || !(h > 0.0) || !(k > 0.0))
    throw DomainError("GasConstants: m, h, k must be > 0");
}

double q_log(double x, double q) {
  if (!(x > 0.0)) throw DomainError("q_log: requires x > 0");
  if (q == 1.0) return std::log(x);
  return std::expm1((1.0 - q) * std::log(x)) / (1.0 - q);
}

double q_exp(double x, double q) {
  if (!std::isfinite(x)) throw DomainError("q_exp: x must be finite");
  if (q == 1.0) return std::exp(x);
  const double t = (1.0 - q) * x;
  if (!(t > -1.0)) throw DomainError("q_exp: requires 1 + (1-q)x > 0");
  return std::exp(std::log1p(t) / (1.0 - q));
}

double three_param_log(double x, const DeformationParams& dp) {
  const double lq = q_log(x, dp.q);
  double mid = lq;
  if (dp.q_prime != 1.0) {
    const double e1 = (1.0 - dp.q_prime) * lq;
    if (e1 > kExpMax)
      throw OverflowError("three_param_log: inner exponent exceeds the floating range");
    mid = std::expm1(e1) / (1.0 - dp.q_prime);
  }
  if (dp.r == 1.0) return mid;
  const double e2 = (1.0 - dp.r) * mid;
  if (e2 > kExpMax)
    throw OverflowError("three_param_log: outer exponent exceeds the floating range");
  return std::expm1(e2) / (1.0 - dp.r);
}

double entropy_of_distribution(std::span<const double> p,
                               const DeformationParams& dp, double k) {
  if (!(k > 0.0)) throw DomainError("entropy_of_distribution: k must be > 0");
  double sum = 0.0;
  for (const double pi : p) {
    if (!(pi >= 0.0))
      throw DomainError("entropy_of_distribution: probabilities must be >= 0");
    sum += pi;
  }
  if (!(std::abs(sum - 1.0) <= 1e-12))
    throw DomainError("entropy_of_distribution: probabilities must sum to 1");
  double s = 0.0;
  for (const double pi : p)
    if (pi > 0.0) s += pi * three_param_log(1.0 / pi, dp);
  return k * s;
}

double phase_volume_log(const EnsembleSpec& spec, const GasConstants& gc,
                        double heat) {
  gc.validate();
  validate_spec(spec);
  if (!std::isfinite(heat)) throw DomainError("phase_volume_log: heat must be finite");
  return std::visit(
      overloaded{
          [&](const Microcanonical& e) {
            if (!(heat > 0.0))
              throw DomainError("phase_volume_log: microcanonical E must be > 0");
            return e.N * std::log(e.V) + e.N * gc.log_M() - log_gamma(e.N + 1.0) -
                   log_gamma(0.5 * gc.D * e.N + 1.0) +
                   0.5 * gc.D * e.N * std::log(heat);
          },
          [&](const IsoenthalpicIsobaric& e) {
            if (!(heat > 0.0))
              throw DomainError("phase_volume_log: enthalpy H must be > 0");
            const double alpha = 0.5 * gc.D * e.N + e.N;
            return e.N * gc.log_M() - e.N * std::log(e.P) - log_gamma(alpha + 1.0) +
                   alpha * std::log(heat);
          },
          [&](const HillEnsemble& e) {
            return 0.5 * gc.D * heat / e.mu + hill_xi_exponent(e, gc);
          },
          [&](const RayEnsemble& e) {
            const double alpha = 0.5 * gc.D * e.N + e.N;
            return gc.D * heat / e.mu + ray_log_xi(e, gc, alpha);
          },
      },
      spec);
}

DerivedConstants derived_constants(const EnsembleSpec& spec,
                                   const GasConstants& gc,
                                   const DeformationParams& dp) {
  gc.validate();
  validate_spec(spec);
  validate_for_ensembles(dp);

  const double one_q = 1.0 - dp.q;
  const double one_qp = 1.0 - dp.q_prime;
  const double one_r = 1.0 - dp.r;

  DerivedConstants dc;
  dc.A = std::exp(-one_qp / one_q);
  dc.B = one_qp / (one_r * dc.A);
  const double e_factor = std::exp(one_r / one_qp);

  std::visit(overloaded{
                 [&](const Microcanonical& e) {
                   dc.log_xi = e.N * std::log(e.V) + e.N * gc.log_M() -
                               log_gamma(e.N + 1.0) -
                               log_gamma(0.5 * gc.D * e.N + 1.0);
                   dc.c = 2.0 * one_r * e_factor / (one_q * gc.D * e.N);
                 },
                 [&](const IsoenthalpicIsobaric& e) {
                   dc.alpha = 0.5 * gc.D * e.N + e.N;
                   dc.log_xi = e.N * gc.log_M() - e.N * std::log(e.P) -
                               log_gamma(dc.alpha + 1.0);
                   dc.c = one_r * e_factor / (dc.alpha * one_q);
                 },
                 [&](const HillEnsemble& e) {
                   dc.log_xi = hill_xi_exponent(e, gc);
                   dc.c = 2.0 * e.mu * one_r * e_factor / (gc.D * one_q);
                 },
                 [&](const RayEnsemble& e) {
                   dc.alpha = 0.5 * gc.D * e.N + e.N;
                   dc.log_xi = ray_log_xi(e, gc, dc.alpha);
                   dc.c = e.mu * one_r * e_factor / (gc.D * one_q);
                 },
             },
             spec);

  dc.sign_a = sign_of_ratio(one_q, one_qp);
  dc.log_abs_a =
      std::log(std::abs(one_q)) - std::log(std::abs(one_qp)) - one_q * dc.log_xi;
  dc.a = dc.sign_a * std::exp(dc.log_abs_a);
  return dc;
}

BranchId select_branch(const DeformationParams& dp) {
  validate_for_ensembles(dp);
  const bool q_above = dp.q > 1.0;
  const bool qp_above = dp.q_prime > 1.0;
  const bool r_above = dp.r > 1.0;
  if (r_above && q_above) return qp_above ? BranchId::Pos0 : BranchId::Neg0;
  if (!r_above && !q_above) return qp_above ? BranchId::Neg0 : BranchId::Pos0;
  if (!r_above && q_above) return qp_above ? BranchId::Neg1 : BranchId::Pos0;
  throw UncoveredRegionError("select_branch: region r > 1, q < 1 has no branch rule");
}

HeatResult heat_function(const EnsembleSpec& spec, const GasConstants& gc,
                         const DeformationParams& dp, double T) {
  if (!(T > 0.0) || !std::isfinite(T))
    throw DomainError("heat_function: T must be positive and finite");
  const BranchId branch = select_branch(dp);
  const DerivedConstants dc = derived_constants(spec, gc, dp);

  const double beta = 1.0 / (gc.k * T);
  const double x = dc.c * beta;
  if (x == 0.0)
    throw DomainError("heat_function: W_L argument underflowed to zero");

  const LogLambertContext ctx = branch_points(dc.B);
  const EvalResult er = eval(x, ctx, branch);
  const double y = er.y;
  const double u = std::log(dc.B * y);

  // heat closed forms take a*u through positive logs; anything else is
  // outside the physical region of the parameters
  if (!std::isfinite(u) || u == 0.0 || dc.sign_a * (u > 0.0 ? 1 : -1) <= 0)
    throw DomainError("heat_function: a*ln(B*W_L) must be positive");
  const double log_au = dc.log_abs_a + std::log(std::abs(u));

  const double one_q = 1.0 - dp.q;
  double heat = 0.0;
  double pref = 0.0;  // exponent of the power form, or prefactor of the log form
  bool power_form = false;
  std::visit(overloaded{
                 [&](const Microcanonical& e) {
                   pref = 2.0 / (gc.D * e.N * one_q);
                   power_form = true;
                 },
                 [&](const IsoenthalpicIsobaric&) {
                   pref = 1.0 / (dc.alpha * one_q);
                   power_form = true;
                 },
                 [&](const HillEnsemble& e) { pref = 2.0 * e.mu / (gc.D * one_q); },
                 [&](const RayEnsemble& e) { pref = e.mu / (gc.D * one_q); },
             },
             spec);
  if (power_form) {
    const double ex = pref * log_au;
    if (std::abs(ex) > kExpMax)
      throw OverflowError("heat_function: heat exceeds the floating range");
    heat = std::exp(ex);
  } else {
    heat = pref * log_au;
  }

  // closed-form specific heat via d/dT W_L(c/kT)
  const double den = (y + 1.0) * u + 1.0;
  double C;
  if (er.diag.derivative_singular || den == 0.0) {
    C = std::numeric_limits<double>::infinity();
  } else {
    const double dWdT = (-x / T) * std::exp(-y) / den;
    C = power_form ? heat * pref * dWdT / (y * u) : pref * dWdT / (y * u);
  }

  HeatResult res;
  res.heat = heat;
  res.specific_heat = C;
  res.w_argument = x;
  res.w_value = y;
  res.branch = branch;
  res.u_check = u;
  return res;
}

double specific_heat(const EnsembleSpec& spec, const GasConstants& gc,
                     const DeformationParams& dp, double T) {
  const HeatResult hr = heat_function(spec, gc, dp, T);
  if (!std::isfinite(hr.specific_heat))
    throw SingularityError("specific_heat: unbounded at a branch point");
  return hr.specific_heat;
}

double entropy_of_system(const EnsembleSpec& spec, const GasConstants& gc,
                         const DeformationParams& dp, double heat) {
  gc.validate();
  validate_spec(spec);
  validate_for_ensembles(dp);
  if (!std::isfinite(heat)) throw DomainError("entropy_of_system: heat must be finite");

  const double one_q = 1.0 - dp.q;
  const double one_qp = 1.0 - dp.q_prime;
  const double one_r = 1.0 - dp.r;
  const DerivedConstants dc = derived_constants(spec, gc, dp);

  // u = (1-q')/(1-q) * xi^{1-q} * heat kernel, assembled in log space
  const double kernel_log = std::visit(
      overloaded{
          [&](const Microcanonical& e) {
            if (!(heat > 0.0))
              throw DomainError("entropy_of_system: microcanonical E must be > 0");
            return 0.5 * gc.D * e.N * one_q * std::log(heat);
          },
          [&](const IsoenthalpicIsobaric&) {
            if (!(heat > 0.0))
              throw DomainError("entropy_of_system: enthalpy H must be > 0");
            return dc.alpha * one_q * std::log(heat);
          },
          [&](const HillEnsemble& e) { return 0.5 * gc.D * heat / e.mu * one_q; },
          [&](const RayEnsemble& e) { return gc.D * heat / e.mu * one_q; },
      },
      spec);

  const int sign_u = sign_of_ratio(one_qp, one_q);
  const double log_abs_u = std::log(std::abs(one_qp)) - std::log(std::abs(one_q)) +
                           one_q * dc.log_xi + kernel_log;
  if (log_abs_u > kExpMax)
    throw OverflowError("entropy_of_system: u exceeds the floating range");
  const double u = sign_u * std::exp(log_abs_u);
  if (u > kExpMax)
    throw OverflowError("entropy_of_system: e^u exceeds the floating range");
  const double z = std::exp(u);

  const double arg = (one_r / one_qp) * (z * dc.A - 1.0);
  if (!std::isfinite(arg) || arg > kExpMax)
    throw OverflowError("entropy_of_system: entropy exponent exceeds the floating range");
  return gc.k / one_r * std::expm1(arg);
}

}  // namespace loglambert
