#pragma once

#include <span>
#include <variant>

#include "loglambert/log_lambert.hpp"

namespace loglambert {

/// Entropy deformation parameters (q, q', r). The deformed logarithms
/// accept values of 1 through exact limit branches; the ensemble formulas
/// divide by 1-q, 1-q' and 1-r and reject parameters equal to 1.
struct DeformationParams {
  double q = 0.0;
  double q_prime = 0.0;
  double r = 0.0;
};

/// Ideal-gas constants in natural units. M = (2*pi*m/h^2)^{D/2}.
struct GasConstants {
  int D = 3;
  double m = 1.0;
  double h = 1.0;
  double k = 1.0;

  double log_M() const;
  void validate() const;
};

// The four adiabatic ensembles with their macroscopic variables. The heat
// function of each is, in order: internal energy E, enthalpy H = E + PV,
// Hill energy L = E - mu*N, Ray energy R = E + PV - mu*N.
struct Microcanonical {
  int N = 1;
  double V = 1.0;
};
struct IsoenthalpicIsobaric {
  int N = 1;
  double P = 1.0;
};
struct HillEnsemble {
  double mu = 1.0;
  double V = 1.0;
};
struct RayEnsemble {
  double mu = 1.0;
  double P = 1.0;
  int N = 1;
};
using EnsembleSpec =
    std::variant<Microcanonical, IsoenthalpicIsobaric, HillEnsemble, RayEnsemble>;

/// Constants shared by the four heat-function closed forms.
struct DerivedConstants {
  double A = 0.0;       // exp(-(1-q')/(1-q))
  double B = 0.0;       // (1-q')/((1-r)*A); the W_L constant, sign((1-q')/(1-r))
  double log_xi = 0.0;  // ln of the phase-volume prefactor of the ensemble
  double a = 0.0;       // (1-q)/((1-q')*xi^{1-q}); may over/underflow, see log form
  double c = 0.0;       // the W_L argument is x = c/(kT)
  double alpha = 0.0;   // DN/2 + N (isoenthalpic-isobaric and Ray only)
  double log_abs_a = 0.0;  // ln|a|, always finite; authoritative with sign_a
  int sign_a = 1;
};

struct HeatResult {
  double heat = 0.0;           // E, H, L or R at the requested temperature
  double specific_heat = 0.0;  // C_V or C_P; infinite if x hit a branch point
  double w_argument = 0.0;     // x = c/(kT)
  double w_value = 0.0;        // y = W_L(x)
  BranchId branch = BranchId::Pos0;
  double u_check = 0.0;        // ln(B*y); equals the ensemble exponent u
};

/// Deformed logarithm ln_q x = (x^{1-q} - 1)/(1-q); ln x at q = 1.
double q_log(double x, double q);

/// Deformed exponential [1 + (1-q)x]^{1/(1-q)}, inverse of q_log; exp at q = 1.
double q_exp(double x, double q);

/// Three-parameter deformed logarithm
///   ln_{q,q',r} x = 1/(1-r) * [exp((1-r)/(1-q') * (e^{(1-q') ln_q x} - 1)) - 1],
/// recovering ln_q as q', r -> 1.
double three_param_log(double x, const DeformationParams& dp);

/// k * sum_i p_i * ln_{q,q',r}(1/p_i) over a probability vector. Entries of
/// zero contribute nothing; the vector must sum to 1 within 1e-12.
double entropy_of_distribution(std::span<const double> p,
                               const DeformationParams& dp, double k);

/// ln of the phase-space volume Sigma enclosed by the constant-heat-function
/// surface, computed in log space so N of a few hundred stays finite.
double phase_volume_log(const EnsembleSpec& spec, const GasConstants& gc,
                        double heat);

DerivedConstants derived_constants(const EnsembleSpec& spec,
                                   const GasConstants& gc,
                                   const DeformationParams& dp);

/// The W_L branch dictated by the signs of (q-1, q'-1, r-1). Continuity of
/// the heat function in the parameters fixes the choice in each region;
/// the region r > 1, q < 1 has no rule and is rejected.
BranchId select_branch(const DeformationParams& dp);

/// Heat function of temperature:
///   E = [a*ln(B*W_L(c/kT))]^{2/(DN(1-q))}     (microcanonical)
///   H = [a*ln(B*W_L(c/kT))]^{1/(alpha(1-q))}  (isoenthalpic-isobaric)
///   L = 2mu/(D(1-q)) * ln(a*ln(B*W_L(c/kT)))  (Hill)
///   R =  mu/(D(1-q)) * ln(a*ln(B*W_L(c/kT)))  (Ray)
/// together with the closed-form specific heat and W_L diagnostics.
HeatResult heat_function(const EnsembleSpec& spec, const GasConstants& gc,
                         const DeformationParams& dp, double T);

/// dQ/dT of the heat function above, via
///   d/dT W_L(c/kT) = (-c/kT^2) e^{-W_L} / ((W_L+1)*ln(B*W_L) + 1).
double specific_heat(const EnsembleSpec& spec, const GasConstants& gc,
                     const DeformationParams& dp, double T);

/// Three-parameter entropy of the gas at the given heat-function value:
///   S = k/(1-r) * [exp((1-r)/(1-q') * z * A) * e^{-(1-r)/(1-q')} - 1],
/// z = e^u with the ensemble-specific exponent u; algebraically equal to
/// k * ln_{q,q',r}(Sigma).
double entropy_of_system(const EnsembleSpec& spec, const GasConstants& gc,
                         const DeformationParams& dp, double heat);

}  // namespace loglambert
