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

#pragma once

#include <random>

#include "tendon/model.hpp"
#include "tendon/solver.hpp"

namespace tendon::testing {

// Unit design data; m and delta are placeholders with no reference value.
inline UnitGeometry reference_geometry() {
  return {0.008, 0.0078, 0.001, deg_to_rad(60.0), deg_to_rad(88.49)};
}

inline MaterialParams reference_material() { return {0.01, 9.81, 1.05}; }

inline TensionInput reference_tensions() { return {1.0, 2.0}; }

inline BisectionConfig reference_bisection() {
  return {0.0, kMaxTilt, deg_to_rad(1e-10), 100};
}

// Independent 40-digit evaluation of the reference equilibrium.
inline constexpr double kReferenceThetaDeg = 14.9947591085235364849053;
inline constexpr double kReferencePressure = 89163.43394828346599264148;

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline UnitGeometry random_geometry(std::mt19937_64& rng) {
  UnitGeometry g;
  g.l = uniform(rng, 0.002, 0.02);
  g.r = uniform(rng, 0.002, 0.02);
  g.delta = uniform(rng, 0.0, 0.004);
  g.theta1 = deg_to_rad(uniform(rng, 0.0, 80.0));
  g.theta2 = g.theta1 + deg_to_rad(uniform(rng, 2.0, 89.9 - rad_to_deg(g.theta1)));
  return g;
}

}  // namespace tendon::testing
