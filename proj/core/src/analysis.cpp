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

#include "tendon/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "tendon/errors.hpp"

namespace tendon {

std::vector<double> angle_grid(double lo, double hi, double step) {
  if (!std::isfinite(step) || !(step > 0.0)) {
    throw DomainError("grid step must be > 0");
  }
  if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo) {
    throw DomainError("grid needs lo <= hi");
  }
  const auto count =
      static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid.push_back(std::min(lo + static_cast<double>(i) * step, hi));
  }
  if (hi - grid.back() <= 1e-9 * step) grid.back() = hi;
  return grid;
}

std::vector<CurveSample> sample_curve(const TensionInput& t,
                                      const UnitGeometry& geom,
                                      const MaterialParams& mat,
                                      std::span<const double> grid) {
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw DomainError("curve grid must be sorted");
  }
  std::vector<CurveSample> out;
  out.reserve(grid.size());
  for (double theta : grid) {
    CurveSample sample{theta, std::nullopt, std::nullopt};
    try {
      const double p = pressure_from_theta(theta, t, geom, mat);
      sample.p_value = p;
      sample.f_value = -residuals(theta, p, t, geom, mat).m;
    } catch (const NoPhysicalPressure&) {
      sample.p_value.reset();
    }
    out.push_back(sample);
  }
  return out;
}

std::string_view to_string(SweepStatus s) {
  switch (s) {
    case SweepStatus::converged:
      return "converged";
    case SweepStatus::no_sign_change:
      return "no_sign_change";
    case SweepStatus::infeasible:
      return "infeasible";
    case SweepStatus::max_iter:
      return "max_iter";
  }
  return "unknown";
}

namespace {

SweepRecord solve_cell(double t_l, double t_s, const UnitGeometry& geom,
                       const MaterialParams& mat, const BisectionConfig& cfg) {
  SweepRecord rec;
  rec.t_l = t_l;
  rec.t_s = t_s;
  const TensionInput t{t_l, t_s};
  try {
    const EquilibriumState s = solve_unit(t, geom, mat, cfg);
    rec.iterations = s.iterations;
    if (s.converged && verify_state(s, t, geom, mat).pass) {
      rec.theta = s.theta;
      rec.p = s.p;
      rec.status = SweepStatus::converged;
    } else {
      rec.status = SweepStatus::infeasible;
    }
  } catch (const NoSignChange&) {
    rec.status = SweepStatus::no_sign_change;
  } catch (const NonConverged&) {
    rec.status = SweepStatus::max_iter;
  } catch (const InfeasibleBracket&) {
    rec.status = SweepStatus::infeasible;
  } catch (const NoPhysicalPressure&) {
    rec.status = SweepStatus::infeasible;
  }
  return rec;
}

}  // namespace

std::vector<SweepRecord> sweep(std::span<const double> t_l_values,
                               std::span<const double> t_s_values,
                               const UnitGeometry& geom,
                               const MaterialParams& mat,
                               const BisectionConfig& cfg, Execution exec) {
  if (t_l_values.empty() || t_s_values.empty()) {
    throw DomainError("sweep grids must be non-empty");
  }
  for (double v : t_l_values) TensionInput{v, 0.0}.validate();
  for (double v : t_s_values) TensionInput{0.0, v}.validate();
  geom.validate();
  mat.validate();
  cfg.validate();

  const std::size_t cols = t_s_values.size();
  const std::size_t total = t_l_values.size() * cols;
  std::vector<SweepRecord> records(total);
  const auto run = [&](std::size_t i) {
    records[i] = solve_cell(t_l_values[i / cols], t_s_values[i % cols], geom,
                            mat, cfg);
  };

  const std::size_t workers =
      exec == Execution::serial
          ? 1
          : std::min<std::size_t>(
                total, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < total; ++i) run(i);
    return records;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < total; i = next++) run(i);
    });
  }
  pool.clear();
  return records;
}

double signed_tilt(const TensionInput& t, const UnitGeometry& geom,
                   const MaterialParams& mat, const BisectionConfig& cfg) {
  const bool mirrored = t.t_l > t.t_s;
  const TensionInput oriented = mirrored ? TensionInput{t.t_s, t.t_l} : t;
  const EquilibriumState s = solve_unit(oriented, geom, mat, cfg);
  if (!s.converged) {
    throw NonConverged("equilibrium residuals out of tolerance", s.bracket_lo,
                       s.bracket_hi);
  }
  return mirrored ? -s.theta : s.theta;
}

double default_sensitivity_step(const TensionInput& t) {
  return std::max(0.01 * std::min(t.t_l, t.t_s), 0.001);
}

SensitivityResult sensitivity(const TensionInput& t, const UnitGeometry& geom,
                              const MaterialParams& mat,
                              const BisectionConfig& cfg,
                              std::optional<double> h) {
  t.validate();
  SensitivityResult out;
  out.h = h.value_or(default_sensitivity_step(t));
  if (!std::isfinite(out.h) || !(out.h > 0.0)) {
    throw DomainError("sensitivity step must be > 0");
  }
  if (t.t_l - out.h < 0.0 || t.t_s - out.h < 0.0) {
    throw SensitivityUnavailable("flanking tension would be negative");
  }

  const auto tilt = [&](double t_l, double t_s) {
    try {
      return signed_tilt({t_l, t_s}, geom, mat, cfg);
    } catch (const Error& e) {
      throw SensitivityUnavailable("flanking solve at (" + std::to_string(t_l) +
                                   ", " + std::to_string(t_s) +
                                   ") N failed: " + e.what());
    }
  };
  out.theta = tilt(t.t_l, t.t_s);
  out.theta_tl_minus = tilt(t.t_l - out.h, t.t_s);
  out.theta_tl_plus = tilt(t.t_l + out.h, t.t_s);
  out.theta_ts_minus = tilt(t.t_l, t.t_s - out.h);
  out.theta_ts_plus = tilt(t.t_l, t.t_s + out.h);
  out.dtheta_dtl = (out.theta_tl_plus - out.theta_tl_minus) / (2.0 * out.h);
  out.dtheta_dts = (out.theta_ts_plus - out.theta_ts_minus) / (2.0 * out.h);
  return out;
}

std::vector<SignChangeInterval> oracle_scan(const TensionInput& t,
                                            const UnitGeometry& geom,
                                            const MaterialParams& mat,
                                            double grid_step, double lo,
                                            double hi) {
  const std::vector<double> grid = angle_grid(lo, hi, grid_step);
  const std::vector<CurveSample> curve = sample_curve(t, geom, mat, grid);

  std::vector<SignChangeInterval> found;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const auto& a = curve[i];
    if (!a.feasible()) continue;
    if (*a.f_value == 0.0) {
      found.push_back({a.theta, a.theta});
      continue;
    }
    if (i + 1 == curve.size()) break;
    const auto& b = curve[i + 1];
    if (!b.feasible() || *b.f_value == 0.0) continue;
    if ((*a.f_value > 0.0) != (*b.f_value > 0.0)) {
      found.push_back({a.theta, b.theta});
    }
  }
  return found;
}

}  // namespace tendon
