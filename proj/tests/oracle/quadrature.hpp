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

// Test-only oracle: the contact-band integrands integrated numerically with
// nested adaptive Gauss-Kronrod, independent of the closed forms.

#pragma once

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace tendon::oracle {

struct BandIntegrals {
  double c_fxg_force = 0.0;
  double c_fzg_force = 0.0;
  double c_fxg_fric = 0.0;
  double c_fzg_fric = 0.0;
};

// Integrates `integrand(phi, psi)` * r^2 sin(phi) over the band
// phi in [theta1, theta2], psi in [0, 2 pi).
template <typename F>
double integrate_band(F integrand, double r, double theta1, double theta2) {
  using boost::math::quadrature::gauss_kronrod;
  constexpr unsigned kDepth = 15;
  // 1e-14 is below what the error estimate can certify and forces full depth.
  constexpr double kTol = 1e-13;
  if (theta1 == theta2) return 0.0;
  const auto inner = [&](double phi) {
    const auto ring = [&](double psi) { return integrand(phi, psi); };
    return gauss_kronrod<double, 31>::integrate(ring, 0.0,
                                                2.0 * std::numbers::pi, kDepth,
                                                kTol) *
           r * r * std::sin(phi);
  };
  return gauss_kronrod<double, 31>::integrate(inner, theta1, theta2, kDepth,
                                              kTol);
}

inline BandIntegrals integrate_contact_band(double r, double theta1,
                                            double theta2, double theta) {
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  // Unit radial vector of the band point in the global X-Z components.
  const auto rx = [=](double phi, double psi) {
    return -std::cos(phi) * st + std::sin(phi) * std::cos(psi) * ct;
  };
  const auto rz = [=](double phi, double psi) {
    return -std::cos(phi) * ct - std::sin(phi) * std::cos(psi) * st;
  };
  BandIntegrals out;
  // Pressure along the inward normal.
  out.c_fxg_force = integrate_band(
      [&](double a, double b) { return -rx(a, b); }, r, theta1, theta2);
  out.c_fzg_force = integrate_band(
      [&](double a, double b) { return -rz(a, b); }, r, theta1, theta2);
  // Friction traction -sin(theta) (y x r_hat) = sin(theta) (-r_z, 0, r_x);
  // C_fXG is the negated X component, C_fZG the Z component.
  out.c_fxg_fric = integrate_band(
      [&](double a, double b) { return st * rz(a, b); }, r, theta1, theta2);
  out.c_fzg_fric = integrate_band(
      [&](double a, double b) { return st * rx(a, b); }, r, theta1, theta2);
  return out;
}

}  // namespace tendon::oracle
