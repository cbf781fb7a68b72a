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

#include <cmath>
#include <cstring>
#include <functional>
#include <random>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "tendon/analysis.hpp"
#include "tendon/errors.hpp"
#include "tendon/solver.hpp"

using namespace tendon;
using namespace tendon::testing;

TEST_CASE("bisect finds an analytic root") {
  const BisectionConfig cfg{0.0, 5.0, 1e-12, 100};
  const auto r = bisect([](double x) { return x * x - 4.0; }, cfg);
  CHECK(std::abs(r.root - 2.0) <= 1e-12);
  CHECK(r.bracket_hi - r.bracket_lo <= cfg.tol);
  CHECK(r.root >= r.bracket_lo);
  CHECK(r.root <= r.bracket_hi);
  CHECK(r.iterations <= BisectionConfig::min_iterations(0.0, 5.0, 1e-12));
}

TEST_CASE("bisect error paths") {
  const BisectionConfig cfg{0.0, 5.0, 1e-10, 100};
  CHECK_THROWS_AS(bisect([](double x) { return x - 7.0; }, cfg), NoSignChange);

  const auto gap = [](double x) {
    if (x > 2.0 && x < 3.0) throw NoPhysicalPressure("gap");
    return x - 4.0;
  };
  CHECK_THROWS_AS(bisect(gap, cfg), InfeasibleBracket);
  CHECK_THROWS_AS(
      bisect([](double x) -> double {
        if (x == 0.0) throw NoPhysicalPressure("endpoint");
        return x - 1.0;
      }, cfg),
      InfeasibleBracket);

  // Tolerance below the spacing of doubles near 1e6 stalls the bracket.
  const BisectionConfig tiny{1e6, 1e6 + 1.0, 1e-20, 100};
  try {
    bisect([](double x) { return x <= 1e6 + 0.3 ? -1.0 : 1.0; }, tiny);
    FAIL("expected MaxIterExceeded");
  } catch (const MaxIterExceeded& e) {
    CHECK(e.bracket_lo() <= 1e6 + 0.3);
    CHECK(e.bracket_hi() >= 1e6 + 0.3);
  }

  CHECK_THROWS_AS(bisect([](double x) { return x; }, {1.0, 0.0, 1e-3, 100}),
                  DomainError);
  CHECK_THROWS_AS(bisect([](double x) { return x; }, {0.0, 1.0, 0.0, 100}),
                  DomainError);
  CHECK_THROWS_AS(bisect([](double x) { return x; }, {0.0, 1.0, 1e-6, 5}),
                  DomainError);
}

TEST_CASE("bisect exact zeros") {
  const BisectionConfig cfg{0.0, 4.0, 1e-9, 100};
  const auto at_mid = bisect([](double x) { return x - 2.0; }, cfg);
  CHECK(at_mid.root == 2.0);
  CHECK(at_mid.iterations == 1);
  CHECK(at_mid.f_at_root == 0.0);

  const auto at_lo = bisect([](double x) { return x; }, cfg);
  CHECK(at_lo.root == 0.0);
  CHECK(at_lo.iterations == 0);

  const auto at_hi = bisect([](double x) { return x - 4.0; }, cfg);
  CHECK(at_hi.root == 4.0);
}

TEST_CASE("bisect contract on random bracketed problems") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const double lo = uniform(rng, -10.0, 10.0);
    const double hi = lo + uniform(rng, 0.1, 20.0);
    const double root = uniform(rng, lo, hi);
    const double tol = std::pow(10.0, uniform(rng, -12.0, -3.0));
    const double scale = uniform(rng, 0.1, 10.0) * (i % 2 ? 1.0 : -1.0);
    const auto f = [=](double x) { return scale * std::tanh(x - root); };
    const BisectionConfig cfg{lo, hi, tol, 200};
    const auto r = bisect(f, cfg);
    CHECK(r.iterations <= BisectionConfig::min_iterations(lo, hi, tol));
    CHECK(r.bracket_hi - r.bracket_lo <= tol);
    CHECK(std::abs(r.root - root) <= tol + 1e-12);

    const auto again = bisect(f, cfg);
    CHECK(std::memcmp(&r.root, &again.root, sizeof r.root) == 0);
    CHECK(std::memcmp(&r.f_at_root, &again.f_at_root, sizeof r.f_at_root) == 0);
    CHECK(r.iterations == again.iterations);
  }
}

TEST_CASE("equilibrium bisection reaches 1e-10 rad in at most 33 halvings") {
  const auto g = reference_geometry();
  const auto mat = reference_material();
  const BisectionConfig cfg{0.0, kMaxTilt, 1e-10, 100};
  CHECK(BisectionConfig::min_iterations(cfg.lo, cfg.hi, cfg.tol) == 33);
  const auto r = bisect(
      [&](double x) {
        return equilibrium_function(x, reference_tensions(), g, mat);
      },
      cfg);
  CHECK(r.iterations <= 33);
  CHECK(std::abs(rad_to_deg(r.root) - kReferenceThetaDeg) <= 1e-8);
}

TEST_CASE("solve_unit at the reference inputs") {
  const auto s = solve_unit(reference_tensions(), reference_geometry(),
                            reference_material(), reference_bisection());
  CHECK(s.converged);
  CHECK(s.theta > 0.0);
  CHECK(s.theta < kMaxTilt);
  CHECK(s.p > 0.0);
  CHECK(std::abs(rad_to_deg(s.theta) - kReferenceThetaDeg) <= 1e-9);
  CHECK(std::abs(s.p - kReferencePressure) / kReferencePressure <= 1e-9);
  CHECK(std::abs(s.residual_fx) <= 1e-9);
  CHECK(std::abs(s.residual_fz) <= 1e-9);
  CHECK(std::abs(s.residual_m) <= 1e-12);
  CHECK(s.iterations <= BisectionConfig::min_iterations(0.0, kMaxTilt,
                                                        deg_to_rad(1e-10)));
  CHECK(s.search_lo == 0.0);
  CHECK(s.search_hi == kMaxTilt);

  const auto scan = oracle_scan(reference_tensions(), reference_geometry(),
                                reference_material(), deg_to_rad(1e-3));
  REQUIRE(scan.size() == 1);
  CHECK(scan[0].contains(s.theta));
}

TEST_CASE("solve_unit symmetric weightless unit stays upright") {
  const MaterialParams weightless{0.0, 9.81, 1.05};
  for (double t : {0.1, 1.0, 4.0}) {
    const auto s = solve_unit({t, t}, reference_geometry(), weightless,
                              reference_bisection());
    CHECK(s.theta == 0.0);
    CHECK(s.p >= 0.0);
    CHECK(s.converged);
  }
}

TEST_CASE("infeasible bracket ends are trimmed in fixed steps") {
  const BisectionConfig cfg{0.0, 1.0, 1e-9, 100};
  const auto holes = [](double x) {
    if (x < 0.25 || x > 0.8) throw NoPhysicalPressure("outside");
    return x - 0.5;
  };
  const auto b = trim_infeasible(holes, cfg, 0.1);
  CHECK(b.lo == doctest::Approx(0.3));
  CHECK(b.hi == doctest::Approx(0.8));
  const auto r = bisect(holes, {b.lo, b.hi, 1e-9, 100});
  CHECK(std::abs(r.root - 0.5) <= 1e-9);

  CHECK_THROWS_AS(trim_infeasible([](double) -> double {
                    throw NoPhysicalPressure("nowhere");
                  }, cfg, 0.1),
                  InfeasibleBracket);
}

TEST_CASE("heavy low-friction unit is feasible only below a closed-form tilt") {
  // D < 0 once mu^2 (T^2 + 2 T W cos(theta) + W^2) < W^2.
  const MaterialParams heavy{1.0 / 9.81, 9.81, 0.3};
  const TensionInput t{1.18, 1.2};
  const double w = heavy.weight();
  const double tt = t.total();
  const double cos_c =
      (w * w / (heavy.mu_s * heavy.mu_s) - tt * tt - w * w) / (2.0 * tt * w);
  const double theta_c = std::acos(cos_c);
  REQUIRE(theta_c > deg_to_rad(10.0));
  REQUIRE(theta_c < deg_to_rad(25.0));

  const auto g = reference_geometry();
  CHECK_NOTHROW(pressure_from_theta(theta_c - 1e-6, t, g, heavy));
  CHECK_THROWS_AS(pressure_from_theta(theta_c + 1e-6, t, g, heavy),
                  NoPhysicalPressure);

  const std::function<double(double)> target = [&](double x) {
    return equilibrium_function(x, t, g, heavy);
  };
  const auto range = trim_infeasible(target, reference_bisection());
  CHECK(range.lo == 0.0);
  CHECK(range.hi <= theta_c);
  CHECK(range.hi > theta_c - kFeasibilityStep);
  // The weight keeps f negative over the feasible prefix.
  CHECK_THROWS_AS(solve_unit(t, g, heavy, reference_bisection()), NoSignChange);
}

TEST_CASE("frictionless heavy unit has no feasible tilt") {
  CHECK_THROWS_AS(solve_unit({1.0, 2.0}, reference_geometry(),
                             {0.01, 9.81, 0.0}, reference_bisection()),
                  InfeasibleBracket);
}

TEST_CASE("solve_unit failures") {
  const auto g = reference_geometry();
  SUBCASE("tension on the wrong side has no root in range") {
    CHECK_THROWS_AS(
        solve_unit({2.0, 1.0}, g, reference_material(), reference_bisection()),
        NoSignChange);
  }
  SUBCASE("frictionless weightless unbalanced unit") {
    CHECK_THROWS_AS(
        solve_unit({1.0, 2.0}, g, {0.0, 9.81, 0.0}, reference_bisection()),
        NoSignChange);
  }
  SUBCASE("degenerate band") {
    UnitGeometry flat = g;
    flat.theta2 = flat.theta1;
    CHECK_THROWS_AS(
        solve_unit({1.0, 2.0}, flat, reference_material(), reference_bisection()),
        InfeasibleBracket);
  }
  SUBCASE("negative tension") {
    CHECK_THROWS_AS(
        solve_unit({-1.0, 2.0}, g, reference_material(), reference_bisection()),
        DomainError);
  }
}

TEST_CASE("verify_state") {
  const auto t = reference_tensions();
  const auto g = reference_geometry();
  const auto mat = reference_material();
  const auto s = solve_unit(t, g, mat, reference_bisection());

  const auto ok = verify_state(s, t, g, mat);
  CHECK(ok.pass);
  CHECK(ok.signs.size() == 6);
  for (const auto& c : ok.checks) CHECK_MESSAGE(c.pass, c.name);

  const auto failed = [](const VerificationReport& r, const std::string& name) {
    for (const auto& c : r.checks) {
      if (c.name == name) return !c.pass;
    }
    return false;
  };

  EquilibriumState negative = s;
  negative.p = -1.0;
  const auto rn = verify_state(negative, t, g, mat);
  CHECK_FALSE(rn.pass);
  CHECK(failed(rn, "pressure_nonnegative"));

  EquilibriumState bent = s;
  bent.theta = deg_to_rad(45.0);
  const auto rb = verify_state(bent, t, g, mat);
  CHECK_FALSE(rb.pass);
  CHECK(failed(rb, "theta_in_range"));

  EquilibriumState off = s;
  off.p *= 1.01;
  CHECK(failed(verify_state(off, t, g, mat), "residual_fx"));
}
