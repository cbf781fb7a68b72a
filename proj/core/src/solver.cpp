// Copyright 2026 The tendon-unit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tendon/solver.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "tendon/errors.hpp"

namespace tendon {
namespace {

double evaluate(const std::function<double(double)>& f, double x) {
  double v;
  try {
    v = f(x);
  } catch (const NoPhysicalPressure& e) {
    throw InfeasibleBracket(
        "target undefined at x = " + std::to_string(x) + ": " + e.what(), x);
  }
  if (!std::isfinite(v)) {
    throw InfeasibleBracket("target not finite at x = " + std::to_string(x), x);
  }
  return v;
}

std::optional<double> try_evaluate(const std::function<double(double)>& f,
                                   double x) {
  try {
    const double v = f(x);
    if (std::isfinite(v)) return v;
  } catch (const NoPhysicalPressure&) {
  }
  return std::nullopt;
}

}  // namespace

int BisectionConfig::min_iterations(double lo, double hi, double tol) {
  const double halvings = std::ceil(std::log2((hi - lo) / tol));
  return halvings > 0.0 ? static_cast<int>(halvings) : 0;
}

void BisectionConfig::validate() const {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw DomainError("bisection bracket needs lo < hi");
  }
  if (!std::isfinite(tol) || !(tol > 0.0)) {
    throw DomainError("bisection tol must be > 0");
  }
  const int needed = min_iterations(lo, hi, tol);
  if (max_iter < needed) {
    throw DomainError("bisection max_iter must be >= " +
                      std::to_string(needed) + " for this bracket and tol");
  }
}

RootResult bisect(const std::function<double(double)>& f,
                  const BisectionConfig& cfg) {
  cfg.validate();
  double lo = cfg.lo;
  double hi = cfg.hi;
  double f_lo = evaluate(f, lo);
  if (f_lo == 0.0) return {lo, f_lo, 0, lo, lo};
  double f_hi = evaluate(f, hi);
  if (f_hi == 0.0) return {hi, f_hi, 0, hi, hi};
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw NoSignChange("no sign change on [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  }

  int iterations = 0;
  while (hi - lo > cfg.tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (iterations >= cfg.max_iter || mid <= lo || mid >= hi) {
      throw MaxIterExceeded("bisection stopped before reaching tol", lo, hi);
    }
    const double f_mid = evaluate(f, mid);
    ++iterations;
    if (f_mid == 0.0) return {mid, f_mid, iterations, mid, mid};
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }

  if (std::abs(f_lo) <= std::abs(f_hi)) return {lo, f_lo, iterations, lo, hi};
  return {hi, f_hi, iterations, lo, hi};
}

FeasibleRange trim_infeasible(const std::function<double(double)>& f,
                              const BisectionConfig& cfg, double step) {
  double lo = cfg.lo;
  while (!try_evaluate(f, lo)) {
    lo += step;
    if (lo > cfg.hi) {
      throw InfeasibleBracket("no feasible point in the bracket", cfg.lo);
    }
  }
  double hi = cfg.hi;
  while (!try_evaluate(f, hi)) {
    hi -= step;
    if (hi < lo) {
      throw InfeasibleBracket("no feasible point in the bracket", cfg.hi);
    }
  }
  return {lo, hi};
}

EquilibriumState solve_unit(const TensionInput& t, const UnitGeometry& geom,
                            const MaterialParams& mat,
                            const BisectionConfig& cfg) {
  t.validate();
  geom.validate();
  mat.validate();
  cfg.validate();

  const std::function<double(double)> target = [&](double theta) {
    return equilibrium_function(theta, t, geom, mat);
  };

  const FeasibleRange range = trim_infeasible(target, cfg);
  const double lo = range.lo;
  const double hi = range.hi;

  RootResult root;
  if (lo < hi) {
    BisectionConfig trimmed = cfg;
    trimmed.lo = lo;
    trimmed.hi = hi;
    try {
      root = bisect(target, trimmed);
    } catch (const NoSignChange&) {
      throw NoSignChange(
          "equilibrium function does not change sign on [" +
          std::to_string(rad_to_deg(lo)) + ", " +
          std::to_string(rad_to_deg(hi)) + "] deg (f = " +
          std::to_string(target(lo)) + ", " + std::to_string(target(hi)) +
          " N m); no tilt in range balances these tensions");
    }
  } else {
    // A single feasible sample point remains.
    const double v = target(lo);
    if (v != 0.0) throw NoSignChange("single feasible tilt is not a root");
    root = {lo, v, 0, lo, lo};
  }

  EquilibriumState s;
  s.theta = root.root;
  s.p = pressure_from_theta(root.root, t, geom, mat);
  s.resultants = equilibrium_resultants(s.theta, s.p, t, geom, mat);
  const Residuals res = residuals(s.theta, s.p, t, geom, mat);
  s.residual_fx = res.fx;
  s.residual_fz = res.fz;
  s.residual_m = res.m;
  s.iterations = root.iterations;
  s.f_at_root = root.f_at_root;
  s.bracket_lo = root.bracket_lo;
  s.bracket_hi = root.bracket_hi;
  s.search_lo = lo;
  s.search_hi = hi;
  s.converged = s.p >= 0.0 && std::abs(res.fx) <= kForceResidualTol &&
                std::abs(res.fz) <= kForceResidualTol &&
                std::abs(res.m) <= kMomentResidualTol;
  return s;
}

VerificationReport verify_state(const EquilibriumState& s,
                                const TensionInput& t,
                                const UnitGeometry& geom,
                                const MaterialParams& mat) {
  VerificationReport report;
  auto& checks = report.checks;

  checks.push_back({"pressure_nonnegative", s.p, 0.0, s.p >= 0.0});
  checks.push_back({"theta_in_range", rad_to_deg(s.theta),
                    rad_to_deg(kMaxTilt),
                    s.theta >= 0.0 && s.theta <= kMaxTilt});

  const double nan = std::nan("");
  std::optional<ForceResultants> fr;
  std::optional<Residuals> res;
  try {
    fr = equilibrium_resultants(s.theta, s.p, t, geom, mat);
    res = residuals(s.theta, s.p, t, geom, mat);
  } catch (const Error&) {
  }

  const auto within = [](std::optional<double> v, double limit) {
    return v.has_value() && std::abs(*v) <= limit;
  };
  const std::optional<double> rfx = res ? std::optional(res->fx) : std::nullopt;
  const std::optional<double> rfz = res ? std::optional(res->fz) : std::nullopt;
  const std::optional<double> rm = res ? std::optional(res->m) : std::nullopt;
  checks.push_back({"residual_fx", rfx.value_or(nan), kForceResidualTol,
                    within(rfx, kForceResidualTol)});
  checks.push_back({"residual_fz", rfz.value_or(nan), kForceResidualTol,
                    within(rfz, kForceResidualTol)});
  checks.push_back({"residual_m", rm.value_or(nan), kMomentResidualTol,
                    within(rm, kMomentResidualTol)});

  if (fr) {
    const double bound = mat.mu_s * fr->n_total + kCoulombSlack;
    checks.push_back(
        {"coulomb_bound", fr->ff_tangential, bound, fr->ff_tangential <= bound});
    // The normal resultant pushes the unit out of the socket along its axis.
    checks.push_back({"normal_along_axis", fr->n_zg, 0.0,
                      fr->n_zg >= 0.0 && fr->n_xg >= 0.0});
    checks.push_back({"friction_nonnegative", fr->ff_tangential, 0.0,
                      fr->ff_tangential >= 0.0});

    const auto sign = [](double v) { return (v > 0.0) - (v < 0.0); };
    for (const auto& [name, v] :
         {std::pair<const char*, double>{"n_xg", fr->n_xg},
          {"n_zg", fr->n_zg},
          {"n_total", fr->n_total},
          {"ff_xg", fr->ff_xg},
          {"ff_zg", fr->ff_zg},
          {"ff_tangential", fr->ff_tangential}}) {
      report.signs.push_back({name, v, sign(v)});
    }
  } else {
    checks.push_back({"coulomb_bound", nan, nan, false});
  }

  report.pass = true;
  for (const auto& c : checks) report.pass = report.pass && c.pass;
  return report;
}

}  // namespace tendon
