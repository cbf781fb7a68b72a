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

#include "tendon/model.hpp"

#include <cmath>
#include <string>

#include "tendon/errors.hpp"

namespace tendon {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

void check_tilt(double theta) {
  require(std::isfinite(theta) && theta >= 0.0 && theta < kPi / 2.0,
          "theta must lie in [0, pi/2), got " + std::to_string(theta));
}

void check_pressure(double p) {
  require(std::isfinite(p) && p >= 0.0,
          "pressure must be finite and >= 0, got " + std::to_string(p));
}

}  // namespace

void UnitGeometry::validate() const {
  require(std::isfinite(l) && l > 0.0, "geometry.l must be > 0");
  require(std::isfinite(r) && r > 0.0, "geometry.r must be > 0");
  require(std::isfinite(delta) && delta >= 0.0, "geometry.delta must be >= 0");
  require(std::isfinite(theta1) && theta1 >= 0.0,
          "geometry.theta1 must be >= 0");
  require(std::isfinite(theta2) && theta2 <= kPi / 2.0,
          "geometry.theta2 must be <= 90 deg");
  require(theta1 <= theta2, "geometry.theta1 must not exceed geometry.theta2");
}

void MaterialParams::validate() const {
  require(std::isfinite(m) && m >= 0.0, "material.m must be >= 0");
  require(std::isfinite(g) && g > 0.0, "material.g must be > 0");
  require(std::isfinite(mu_s) && mu_s >= 0.0, "material.mu_s must be >= 0");
}

void TensionInput::validate() const {
  require(std::isfinite(t_l) && t_l >= 0.0, "t_l must be >= 0 (cables cannot push)");
  require(std::isfinite(t_s) && t_s >= 0.0, "t_s must be >= 0 (cables cannot push)");
}

double ContactIntegrals::force_magnitude() const {
  return std::hypot(c_fxg_force, c_fzg_force);
}

double ContactIntegrals::friction_magnitude() const {
  return std::hypot(c_fxg_fric, c_fzg_fric);
}

ContactIntegrals contact_integrals(const UnitGeometry& geom, double theta) {
  geom.validate();
  check_tilt(theta);

  // pi r^2 (sin^2 theta2 - sin^2 theta1), factored so equal bounds give 0.
  const double band = std::sin(geom.theta2 - geom.theta1) *
                      std::sin(geom.theta2 + geom.theta1);
  const double k = kPi * geom.r * geom.r * band;
  const double s = std::sin(theta);
  const double c = std::cos(theta);

  ContactIntegrals ci;
  ci.c_fxg_force = k * s;
  ci.c_fzg_force = k * c;
  ci.c_fxg_fric = -(k * s) * c;
  ci.c_fzg_fric = -(k * s) * s;
  return ci;
}

ForceResultants force_resultants(double p, double mu_s,
                                 const ContactIntegrals& ci) {
  check_pressure(p);
  require(std::isfinite(mu_s) && mu_s >= 0.0, "mu_s must be >= 0");

  ForceResultants fr;
  fr.n_xg = p * ci.c_fxg_force;
  fr.n_zg = p * ci.c_fzg_force;
  fr.n_total = p * ci.force_magnitude();
  fr.ff_xg = mu_s * p * ci.c_fxg_fric;
  fr.ff_zg = mu_s * p * ci.c_fzg_fric;
  fr.ff_tangential = mu_s * p * ci.friction_magnitude();
  return fr;
}

ForceResultants force_resultants(double p, double mu_s,
                                 const ContactIntegrals& ci,
                                 std::array<double, 2> friction_dir) {
  ForceResultants fr = force_resultants(p, mu_s, ci);
  const double len = std::hypot(friction_dir[0], friction_dir[1]);
  if (!(len > 0.0) || !std::isfinite(len)) return fr;
  fr.ff_xg = fr.ff_tangential * (friction_dir[0] / len);
  fr.ff_zg = fr.ff_tangential * (friction_dir[1] / len);
  return fr;
}

ForceResultants equilibrium_resultants(double theta, double p,
                                       const TensionInput& t,
                                       const UnitGeometry& geom,
                                       const MaterialParams& mat) {
  t.validate();
  mat.validate();
  const ContactIntegrals ci = contact_integrals(geom, theta);
  check_pressure(p);

  // Friction that closes both force balances: (A sin, W - A cos), A = N - T.
  const double axial = p * ci.force_magnitude() - t.total();
  const std::array<double, 2> dir = {
      axial * std::sin(theta), mat.weight() - axial * std::cos(theta)};
  return force_resultants(p, mat.mu_s, ci, dir);
}

Residuals residuals(double theta, double p, const TensionInput& t,
                    const UnitGeometry& geom, const MaterialParams& mat) {
  const ForceResultants fr = equilibrium_resultants(theta, p, t, geom, mat);
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double axial = fr.n_total - t.total();
  const double w = mat.weight();

  Residuals res;
  res.fx = axial * s - fr.ff_xg;
  res.fz = axial * c + fr.ff_zg - w;
  res.m = (geom.r + geom.delta) * t.difference() - fr.ff_tangential * geom.r +
          w * s * geom.l;
  return res;
}

PressureRoots pressure_roots(double theta, const TensionInput& t,
                             const UnitGeometry& geom,
                             const MaterialParams& mat) {
  t.validate();
  mat.validate();
  const ContactIntegrals ci = contact_integrals(geom, theta);

  const double k = ci.force_magnitude();
  const double kf = ci.friction_magnitude();
  const double tt = t.total();
  const double w = mat.weight();
  const double s = std::sin(theta);
  const double c = std::cos(theta);

  // a p^2 - 2 b p + c0 = 0; see docs/contact_model.md.
  const double b = k * (tt + w * c);
  const double c0 = tt * tt + 2.0 * tt * w * c + w * w;
  const double mu_kf = mat.mu_s * kf;
  const double kws = k * w * s;
  const double disc = mu_kf * mu_kf * c0 - kws * kws;

  PressureRoots roots;
  roots.discriminant = disc;
  if (disc < 0.0) {
    roots.preferred = roots.fallback = std::nan("");
    return roots;
  }
  const double sq = std::sqrt(disc);
  roots.preferred = c0 / (b - sq);
  roots.fallback = c0 / (b + sq);
  return roots;
}

double pressure_from_theta(double theta, const TensionInput& t,
                           const UnitGeometry& geom,
                           const MaterialParams& mat) {
  const PressureRoots roots = pressure_roots(theta, t, geom, mat);
  if (t.total() == 0.0 && mat.weight() == 0.0) return 0.0;
  if (roots.discriminant < 0.0) {
    throw NoPhysicalPressure("pressure quadratic has complex roots at theta = " +
                             std::to_string(rad_to_deg(theta)) + " deg");
  }
  for (double p : {roots.preferred, roots.fallback}) {
    if (std::isfinite(p) && p >= 0.0) return p;
  }
  throw NoPhysicalPressure("no finite non-negative pressure at theta = " +
                           std::to_string(rad_to_deg(theta)) + " deg");
}

double equilibrium_function(double theta, const TensionInput& t,
                            const UnitGeometry& geom,
                            const MaterialParams& mat) {
  const double p = pressure_from_theta(theta, t, geom, mat);
  return -residuals(theta, p, t, geom, mat).m;
}

}  // namespace tendon
