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

// Bracketed bisection and assembly of the solved equilibrium state.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tendon/model.hpp"

namespace tendon {

struct BisectionConfig {
  double lo = 0.0;
  double hi = kMaxTilt;
  double tol = deg_to_rad(1e-10);  ///< absolute bracket width
  int max_iter = 200;

  /// Throws DomainError unless lo < hi, tol > 0 and max_iter covers the
  /// halving bound.
  void validate() const;

  /// ceil(log2((hi - lo) / tol)), the number of halvings to reach tol.
  static int min_iterations(double lo, double hi, double tol);
};

struct RootResult {
  double root = 0.0;
  double f_at_root = 0.0;
  int iterations = 0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

/// Bisection on [cfg.lo, cfg.hi]. `f` may throw NoPhysicalPressure, which is
/// reported as InfeasibleBracket. An exact zero at an endpoint or midpoint
/// ends the search there. Deterministic for identical inputs.
RootResult bisect(const std::function<double(double)>& f,
                  const BisectionConfig& cfg);

/// Step used to trim infeasible ends of the bracket before bisecting.
inline constexpr double kFeasibilityStep = deg_to_rad(0.1);

struct FeasibleRange {
  double lo = 0.0;
  double hi = 0.0;
};

/// Moves cfg.lo up and cfg.hi down in `step` increments until `f` is defined
/// at both. Throws InfeasibleBracket when the ends cross.
FeasibleRange trim_infeasible(const std::function<double(double)>& f,
                              const BisectionConfig& cfg,
                              double step = kFeasibilityStep);

EquilibriumState solve_unit(const TensionInput& t, const UnitGeometry& geom,
                            const MaterialParams& mat,
                            const BisectionConfig& cfg);

struct VerificationCheck {
  std::string name;
  double value = 0.0;
  double limit = 0.0;
  bool pass = false;
};

struct ComponentSign {
  std::string component;
  double value = 0.0;
  int sign = 0;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  std::vector<ComponentSign> signs;
  bool pass = false;
};

/// Re-derives resultants and residuals from (theta, p) and checks them.
/// Never throws.
VerificationReport verify_state(const EquilibriumState& s,
                                const TensionInput& t,
                                const UnitGeometry& geom,
                                const MaterialParams& mat);

}  // namespace tendon
