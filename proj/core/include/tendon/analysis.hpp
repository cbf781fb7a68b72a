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

// Batch evaluation on top of the solver: equilibrium-curve sampling, tension
// sweeps, finite-difference sensitivity and an independent grid-scan oracle.

#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tendon/model.hpp"
#include "tendon/solver.hpp"

namespace tendon {

struct CurveSample {
  double theta = 0.0;
  std::optional<double> f_value;  ///< empty where no pressure exists
  std::optional<double> p_value;

  bool feasible() const { return f_value.has_value(); }
};

/// Evenly spaced points lo, lo + step, ... not exceeding hi. A last point
/// within rounding of hi is snapped onto hi.
std::vector<double> angle_grid(double lo, double hi, double step);

/// One sample per grid point. Infeasible points are marked, never thrown.
std::vector<CurveSample> sample_curve(const TensionInput& t,
                                      const UnitGeometry& geom,
                                      const MaterialParams& mat,
                                      std::span<const double> grid);

enum class SweepStatus { converged, no_sign_change, infeasible, max_iter };

std::string_view to_string(SweepStatus s);

struct SweepRecord {
  double t_l = 0.0;
  double t_s = 0.0;
  std::optional<double> theta;
  std::optional<double> p;
  int iterations = 0;
  SweepStatus status = SweepStatus::infeasible;
};

enum class Execution { serial, parallel };

/// Solves every (t_l, t_s) pair, row-major with t_l as the outer index.
/// Failures are recorded per cell; the batch never aborts.
std::vector<SweepRecord> sweep(std::span<const double> t_l_values,
                               std::span<const double> t_s_values,
                               const UnitGeometry& geom,
                               const MaterialParams& mat,
                               const BisectionConfig& cfg,
                               Execution exec = Execution::parallel);

/// Tilt of the unit with its sign restored: when t_l > t_s the mirrored
/// problem (cables swapped) is solved and its tilt negated.
double signed_tilt(const TensionInput& t, const UnitGeometry& geom,
                   const MaterialParams& mat, const BisectionConfig& cfg);

struct SensitivityResult {
  double dtheta_dtl = 0.0;  ///< rad / N
  double dtheta_dts = 0.0;
  double h = 0.0;
  double theta = 0.0;  ///< signed tilt at the operating point
  double theta_tl_minus = 0.0;
  double theta_tl_plus = 0.0;
  double theta_ts_minus = 0.0;
  double theta_ts_plus = 0.0;
};

/// 1% of the smaller tension, floored at 1 mN.
double default_sensitivity_step(const TensionInput& t);

/// Central differences of the signed tilt. Throws SensitivityUnavailable if
/// any flanking solve fails or a flank would need a negative tension.
SensitivityResult sensitivity(const TensionInput& t, const UnitGeometry& geom,
                              const MaterialParams& mat,
                              const BisectionConfig& cfg,
                              std::optional<double> h = std::nullopt);

/// [lo, hi] grid cell where f changes sign; lo == hi marks an exact zero.
struct SignChangeInterval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x, double slack = 0.0) const {
    return x >= lo - slack && x <= hi + slack;
  }
};

/// Scans equilibrium_function over [lo, hi] at grid_step and returns every
/// sign change. Intervals never span an infeasible grid point.
std::vector<SignChangeInterval> oracle_scan(const TensionInput& t,
                                            const UnitGeometry& geom,
                                            const MaterialParams& mat,
                                            double grid_step,
                                            double lo = 0.0,
                                            double hi = kMaxTilt);

}  // namespace tendon
