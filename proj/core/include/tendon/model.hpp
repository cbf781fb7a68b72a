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

// Quasi-static model of a single tendon-driven unit seated on a ball-socket
// joint. The unit is pulled into the socket by two cable tensions, pushed out
// by the contact pressure, held by Coulomb friction on the contact band and
// loaded by its own weight. See docs/contact_model.md for the integrands.
//
// All angles are radians. All functions are pure.

#pragma once

#include <array>
#include <numbers>

namespace tendon {

inline constexpr double kPi = std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

/// Equilibrium tolerances on the three balance equations.
inline constexpr double kForceResidualTol = 1e-6;   // N
inline constexpr double kMomentResidualTol = 1e-8;  // N m
/// Absolute slack allowed on ff_tangential <= mu_s * n_total.
inline constexpr double kCoulombSlack = 1e-12;  // N

/// Mechanical bending limit of the unit.
inline constexpr double kMaxTilt = deg_to_rad(30.0);

struct UnitGeometry {
  double l = 0.0;       ///< distance to the center of gravity, m
  double r = 0.0;       ///< ball joint radius, m
  double delta = 0.0;   ///< socket edge to cable offset, m
  double theta1 = 0.0;  ///< first polar bound of the contact band, rad
  double theta2 = 0.0;  ///< second polar bound of the contact band, rad

  /// Throws DomainError naming the first violated invariant.
  void validate() const;
};

struct MaterialParams {
  double m = 0.0;  ///< unit mass, kg
  double g = 9.81;
  double mu_s = 0.0;

  void validate() const;
  double weight() const { return m * g; }
};

struct TensionInput {
  double t_l = 0.0;  ///< long (loose) side cable, N
  double t_s = 0.0;  ///< short (taut) side cable, N

  void validate() const;
  double total() const { return t_l + t_s; }
  double difference() const { return t_s - t_l; }
};

/// Per-unit-pressure surface integrals over the contact band, m^2.
///
/// The force pair integrates the inward normal; the friction pair integrates
/// the friction traction per unit mu_s * p, signed so that the friction acting
/// on the unit is (-c_fxg_fric, +c_fzg_fric) * mu_s * p.
struct ContactIntegrals {
  double c_fxg_force = 0.0;
  double c_fzg_force = 0.0;
  double c_fxg_fric = 0.0;
  double c_fzg_fric = 0.0;

  double force_magnitude() const;
  double friction_magnitude() const;
};

struct ForceResultants {
  double n_xg = 0.0;  ///< normal resultant, X_G component
  double n_zg = 0.0;  ///< normal resultant, Z_G component
  double n_total = 0.0;
  double ff_xg = 0.0;  ///< friction along X_G, same sign convention as C_fXG
  double ff_zg = 0.0;
  double ff_tangential = 0.0;  ///< friction magnitude in the moment balance
};

struct Residuals {
  double fx = 0.0;  ///< N
  double fz = 0.0;  ///< N, with the weight moved to the left side
  double m = 0.0;   ///< N m
};

struct EquilibriumState {
  double theta = 0.0;
  double p = 0.0;
  ForceResultants resultants;
  double residual_fx = 0.0;
  double residual_fz = 0.0;
  double residual_m = 0.0;
  bool converged = false;
  int iterations = 0;
  double f_at_root = 0.0;
  double bracket_lo = 0.0;  ///< final bisection bracket
  double bracket_hi = 0.0;
  double search_lo = 0.0;  ///< bracket actually searched after feasibility trimming
  double search_hi = 0.0;
};

/// Closed-form contact integrals at tilt `theta` in [0, pi/2).
ContactIntegrals contact_integrals(const UnitGeometry& geom, double theta);

/// Resultants at pressure `p` with friction along the geometric direction of
/// the friction integrals, i.e. ff = mu_s * p * C_f.
ForceResultants force_resultants(double p, double mu_s,
                                 const ContactIntegrals& ci);

/// Resultants with friction of Coulomb magnitude mu_s * p * |C_f| along
/// `friction_dir` (ff_xg, ff_zg convention). A zero direction falls back to
/// the geometric one.
ForceResultants force_resultants(double p, double mu_s,
                                 const ContactIntegrals& ci,
                                 std::array<double, 2> friction_dir);

/// Resultants with the friction direction that closes the two force
/// balances at (theta, p).
ForceResultants equilibrium_resultants(double theta, double p,
                                       const TensionInput& t,
                                       const UnitGeometry& geom,
                                       const MaterialParams& mat);

Residuals residuals(double theta, double p, const TensionInput& t,
                    const UnitGeometry& geom, const MaterialParams& mat);

/// Both roots of the pressure quadratic in reciprocal form.
struct PressureRoots {
  double discriminant = 0.0;
  double preferred = 0.0;  ///< c / (b - sqrt(D))
  double fallback = 0.0;   ///< c / (b + sqrt(D))
};

PressureRoots pressure_roots(double theta, const TensionInput& t,
                             const UnitGeometry& geom,
                             const MaterialParams& mat);

/// Average contact pressure at tilt `theta`, eliminated from the force
/// balances. Throws NoPhysicalPressure when no finite root >= 0 exists.
double pressure_from_theta(double theta, const TensionInput& t,
                           const UnitGeometry& geom, const MaterialParams& mat);

/// Moment imbalance with the pressure eliminated, signed to increase with
/// theta: f = r * F_f - (r + delta)(T_s - T_l) - m g l sin(theta).
double equilibrium_function(double theta, const TensionInput& t,
                            const UnitGeometry& geom,
                            const MaterialParams& mat);

}  // namespace tendon
