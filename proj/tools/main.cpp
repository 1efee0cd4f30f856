// Command-line front end: point evaluation of the logarithmic Lambert
// function, reproduction of the large-x approximation accuracy table,
// branch-curve scans and temperature sweeps of the adiabatic-ensemble heat
// functions. All output is CSV on stdout; diagnostics go to stderr.
//
// Exit codes: 0 success, 2 domain or parameter error, 3 non-convergence.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <string>

#include <CLI11.hpp>

#include "loglambert/log_lambert.hpp"
#include "loglambert/thermostatics.hpp"

namespace {

using namespace loglambert;

// 17 significant digits: every binary64 value round-trips through the text.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int run_eval(double x, double b, const std::string& branch_str) {
  const BranchId branch = branch_from_name(branch_str);
  const LogLambertContext ctx = branch_points(b);
  const EvalResult r = eval(x, ctx, branch);
  double deriv;
  if (r.diag.derivative_singular) {
    const double inf = std::numeric_limits<double>::infinity();
    deriv = branch_is_increasing(branch) ? inf : -inf;
  } else {
    deriv = derivative(x, ctx, branch);
  }
  std::printf("x,y,derivative,residual\n");
  std::printf("%s,%s,%s,%s\n", fmt(x).c_str(), fmt(r.y).c_str(),
              fmt(deriv).c_str(), fmt(r.diag.residual).c_str());
  return 0;
}

int run_table() {
  const LogLambertContext ctx = branch_points(1.0);
  std::printf("x,exact,approx,rel_error\n");
  for (int k = 4; k <= 10; ++k) {
    const double x = forward(static_cast<double>(k), 1.0);
    const double exact = eval(x, ctx, BranchId::Pos0).y;
    const double approx = asymptotic_approx(x, 1.0);
    const double rel = std::abs(approx - exact) / exact;
    std::printf("%s,%s,%s,%s\n", fmt(x).c_str(), fmt(exact).c_str(),
                fmt(approx).c_str(), fmt(rel).c_str());
  }
  return 0;
}

bool scan_point_in_domain(double x, const LogLambertContext& ctx, BranchId br) {
  switch (br) {
    case BranchId::Pos0: return x >= ctx.f_delta();
    case BranchId::Pos1: return x >= ctx.f_delta() && x < 0.0;
    case BranchId::Neg0: return x > 0.0 && x <= ctx.f_delta2();
    case BranchId::Neg1: return x >= ctx.f_delta1() && x <= ctx.f_delta2();
    case BranchId::Neg2: return x >= ctx.f_delta1() && x < 0.0;
  }
  return false;
}

int run_scan(double b, const std::string& branch_str, double from, double to,
             int points) {
  const BranchId branch = branch_from_name(branch_str);
  if (points < 2) throw DomainError("scan: points must be >= 2");
  if (!(from < to)) throw DomainError("scan: requires from < to");
  const LogLambertContext ctx = branch_points(b);
  if (!scan_point_in_domain(from, ctx, branch) ||
      !scan_point_in_domain(to, ctx, branch))
    throw DomainError("scan: interval exits the branch domain");
  std::printf("x,y\n");
  for (int i = 0; i < points; ++i) {
    const double x = from + (to - from) * i / (points - 1);
    const EvalResult r = eval(x, ctx, branch);
    std::printf("%s,%s\n", fmt(x).c_str(), fmt(r.y).c_str());
  }
  return 0;
}

struct ThermoFlags {
  std::string ensemble;
  double q = 0, qp = 0, r = 0;
  int n = 1;
  double v = 1.0, p = 1.0, mu = 1.0;
  int d = 3;
  double m = 1.0, h = 1.0, k = 1.0;
  double tmin = 0, tmax = 0;
  int points = 20;
};

int run_thermo(const ThermoFlags& fl) {
  EnsembleSpec spec;
  if (fl.ensemble == "mc")
    spec = Microcanonical{fl.n, fl.v};
  else if (fl.ensemble == "ie")
    spec = IsoenthalpicIsobaric{fl.n, fl.p};
  else if (fl.ensemble == "hill")
    spec = HillEnsemble{fl.mu, fl.v};
  else if (fl.ensemble == "ray")
    spec = RayEnsemble{fl.mu, fl.p, fl.n};
  else
    throw DomainError("thermo: ensemble must be mc|ie|hill|ray");

  const GasConstants gc{fl.d, fl.m, fl.h, fl.k};
  const DeformationParams dp{fl.q, fl.qp, fl.r};
  if (fl.points < 1) throw DomainError("thermo: points must be >= 1");
  if (!(fl.tmin > 0.0) || !(fl.tmax >= fl.tmin))
    throw DomainError("thermo: requires 0 < tmin <= tmax");

  // T-independent validation up front: bad parameter regions exit before
  // any row is emitted
  select_branch(dp);
  derived_constants(spec, gc, dp);

  std::printf("T,heat,specific_heat,w_argument,w_value,branch,reason\n");
  for (int i = 0; i < fl.points; ++i) {
    const double T = fl.points == 1
                         ? fl.tmin
                         : fl.tmin + (fl.tmax - fl.tmin) * i / (fl.points - 1);
    try {
      const HeatResult hr = heat_function(spec, gc, dp, T);
      std::printf("%s,%s,%s,%s,%s,%s,\n", fmt(T).c_str(), fmt(hr.heat).c_str(),
                  fmt(hr.specific_heat).c_str(), fmt(hr.w_argument).c_str(),
                  fmt(hr.w_value).c_str(),
                  std::string(branch_name(hr.branch)).c_str());
    } catch (const std::exception& e) {
      std::printf("%s,,,,,,%s\n", fmt(T).c_str(), e.what());
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logarithmic Lambert function and adiabatic-ensemble thermostatics"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print help and exit");

  double ev_x = 0, ev_b = 0;
  std::string ev_branch;
  auto* cmd_eval = app.add_subcommand("eval", "Evaluate W_L at one point");
  cmd_eval->add_option("--x", ev_x, "Argument x")->required();
  cmd_eval->add_option("--b", ev_b, "Constant B")->required();
  cmd_eval->add_option("--branch", ev_branch, "pos0|pos1|neg0|neg1|neg2")->required();

  app.add_subcommand("table", "Large-x approximation accuracy table");

  double sc_b = 0, sc_from = 0, sc_to = 0;
  int sc_points = 0;
  std::string sc_branch;
  auto* cmd_scan = app.add_subcommand("scan", "Sample one branch on a uniform x-grid");
  cmd_scan->add_option("--b", sc_b, "Constant B")->required();
  cmd_scan->add_option("--branch", sc_branch, "pos0|pos1|neg0|neg1|neg2")->required();
  cmd_scan->add_option("--from", sc_from, "Left end of the x-interval")->required();
  cmd_scan->add_option("--to", sc_to, "Right end of the x-interval")->required();
  cmd_scan->add_option("--points", sc_points, "Number of samples (>= 2)")->required();

  ThermoFlags fl;
  auto* cmd_thermo =
      app.add_subcommand("thermo", "Heat function and specific heat over a T-grid");
  cmd_thermo->set_help_flag("--help", "Print help and exit");  // frees --h for Planck
  cmd_thermo->add_option("--ensemble", fl.ensemble, "mc|ie|hill|ray")->required();
  cmd_thermo->add_option("--q", fl.q, "Deformation parameter q")->required();
  cmd_thermo->add_option("--qp", fl.qp, "Deformation parameter q'")->required();
  cmd_thermo->add_option("--r", fl.r, "Deformation parameter r")->required();
  cmd_thermo->add_option("--n", fl.n, "Particle number N (mc, ie, ray)");
  cmd_thermo->add_option("--v", fl.v, "Volume V (mc, hill)");
  cmd_thermo->add_option("--p", fl.p, "Pressure P (ie, ray)");
  cmd_thermo->add_option("--mu", fl.mu, "Chemical potential mu (hill, ray)");
  cmd_thermo->add_option("--d", fl.d, "Spatial dimension D");
  cmd_thermo->add_option("--m", fl.m, "Particle mass m");
  cmd_thermo->add_option("--h", fl.h, "Planck constant h");
  cmd_thermo->add_option("--k", fl.k, "Entropy prefactor k");
  cmd_thermo->add_option("--tmin", fl.tmin, "Lowest temperature")->required();
  cmd_thermo->add_option("--tmax", fl.tmax, "Highest temperature")->required();
  cmd_thermo->add_option("--points", fl.points, "Grid size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cmd_eval->parsed()) return run_eval(ev_x, ev_b, ev_branch);
    if (app.get_subcommand("table")->parsed()) return run_table();
    if (cmd_scan->parsed()) return run_scan(sc_b, sc_branch, sc_from, sc_to, sc_points);
    if (cmd_thermo->parsed()) return run_thermo(fl);
  } catch (const loglambert::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
