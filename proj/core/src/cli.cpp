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

#include "tendon/cli.hpp"

#include <cmath>
#include <optional>
#include <ostream>
#include <string>

#include "json.hpp"
#include "tendon/analysis.hpp"
#include "tendon/errors.hpp"
#include "tendon/format.hpp"

namespace tendon::cli {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view status_of(const std::exception& e) {
  if (dynamic_cast<const NoSignChange*>(&e)) return "no_sign_change";
  if (dynamic_cast<const NonConverged*>(&e)) return "max_iter";
  return "infeasible";
}

bool is_solver_failure(const std::exception& e) {
  return dynamic_cast<const SolverError*>(&e) ||
         dynamic_cast<const NoPhysicalPressure*>(&e);
}

ordered_json optional_json(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

void emit_json(const ordered_json& doc, std::ostream& out) {
  out << doc.dump(2) << '\n';
}

struct SolveRow {
  double t_l = 0.0;
  double t_s = 0.0;
  std::string status;
  std::optional<EquilibriumState> state;
};

const std::vector<std::string> kSolveHeader = {
    "t_l",           "t_s",         "status",      "theta_deg",
    "p",             "n_total",     "ff_xg",       "ff_zg",
    "ff_tangential", "residual_fx", "residual_fz", "residual_m",
    "f_at_root",     "iterations"};

void emit_solve(const SolveRow& row, OutputFormat fmt, std::ostream& out) {
  const auto& s = row.state;
  const auto field = [&](auto get) -> std::optional<double> {
    return s ? std::optional<double>(get(*s)) : std::nullopt;
  };
  const std::vector<std::pair<std::string, std::optional<double>>> values = {
      {"theta_deg", field([](auto& x) { return rad_to_deg(x.theta); })},
      {"p", field([](auto& x) { return x.p; })},
      {"n_total", field([](auto& x) { return x.resultants.n_total; })},
      {"ff_xg", field([](auto& x) { return x.resultants.ff_xg; })},
      {"ff_zg", field([](auto& x) { return x.resultants.ff_zg; })},
      {"ff_tangential", field([](auto& x) { return x.resultants.ff_tangential; })},
      {"residual_fx", field([](auto& x) { return x.residual_fx; })},
      {"residual_fz", field([](auto& x) { return x.residual_fz; })},
      {"residual_m", field([](auto& x) { return x.residual_m; })},
      {"f_at_root", field([](auto& x) { return x.f_at_root; })},
  };

  if (fmt == OutputFormat::json) {
    ordered_json doc;
    doc["t_l"] = row.t_l;
    doc["t_s"] = row.t_s;
    doc["status"] = row.status;
    for (const auto& [k, v] : values) doc[k] = optional_json(v);
    doc["iterations"] = s ? ordered_json(s->iterations) : ordered_json(nullptr);
    emit_json(doc, out);
    return;
  }
  CsvTable table;
  table.header = kSolveHeader;
  std::vector<std::string> cells = {format_double(row.t_l),
                                    format_double(row.t_s), row.status};
  for (const auto& [k, v] : values) cells.push_back(format_optional(v));
  cells.push_back(s ? std::to_string(s->iterations) : std::string());
  table.rows.push_back(std::move(cells));
  table.write(out);
}

}  // namespace

std::vector<double> RangeSpec::values() const {
  return angle_grid(start, stop, step);
}

RangeSpec parse_range(std::string_view text) {
  const auto c1 = text.find(':');
  const auto c2 =
      c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos || text.find(':', c2 + 1) != text.npos) {
    throw ParseError("range spec must be start:stop:step, got '" +
                     std::string(text) + "'");
  }
  RangeSpec r;
  r.start = parse_double(text.substr(0, c1));
  r.stop = parse_double(text.substr(c1 + 1, c2 - c1 - 1));
  r.step = parse_double(text.substr(c2 + 1));
  if (!std::isfinite(r.step) || !(r.step > 0.0)) {
    throw ParseError("range step must be > 0 in '" + std::string(text) + "'");
  }
  if (!std::isfinite(r.start) || !std::isfinite(r.stop) || r.stop < r.start) {
    throw ParseError("range needs start <= stop in '" + std::string(text) + "'");
  }
  return r;
}

int report_error(const std::exception& e, std::ostream& err) {
  if (dynamic_cast<const DomainError*>(&e) ||
      dynamic_cast<const ValidationError*>(&e) ||
      dynamic_cast<const ParseError*>(&e)) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (is_solver_failure(e)) {
    err << "solver: " << e.what() << '\n';
    return kSolverFailure;
  }
  err << "internal error: " << e.what() << '\n';
  return kInternalError;
}

int run_solve(const RunConfig& cfg, double t_l, double t_s, std::ostream& out,
              std::ostream& err) {
  try {
    const TensionInput t{t_l, t_s};
    t.validate();
    SolveRow row{t_l, t_s, "", std::nullopt};
    int code = kSuccess;
    try {
      row.state = solve_unit(t, cfg.geometry, cfg.material, cfg.solver);
      row.status = row.state->converged ? "converged" : "infeasible";
      if (!row.state->converged) {
        err << "solver: residuals exceed equilibrium tolerance\n";
        code = kSolverFailure;
      }
    } catch (const std::exception& e) {
      if (!is_solver_failure(e)) throw;
      row.status = status_of(e);
      code = report_error(e, err);
    }
    emit_solve(row, cfg.output_format, out);
    return code;
  } catch (const std::exception& e) {
    return report_error(e, err);
  }
}

int run_sweep(const RunConfig& cfg, const RangeSpec& t_l, const RangeSpec& t_s,
              std::ostream& out, std::ostream& err) {
  try {
    const std::vector<double> tl = t_l.values();
    const std::vector<double> ts = t_s.values();
    const auto records =
        sweep(tl, ts, cfg.geometry, cfg.material, cfg.solver);

    if (cfg.output_format == OutputFormat::json) {
      ordered_json doc = ordered_json::array();
      for (const auto& r : records) {
        ordered_json row;
        row["t_l"] = r.t_l;
        row["t_s"] = r.t_s;
        row["status"] = std::string(to_string(r.status));
        row["theta_deg"] = r.theta ? ordered_json(rad_to_deg(*r.theta))
                                   : ordered_json(nullptr);
        row["p"] = optional_json(r.p);
        row["iterations"] = r.iterations;
        doc.push_back(std::move(row));
      }
      emit_json(doc, out);
      return kSuccess;
    }
    CsvTable table;
    table.header = {"t_l", "t_s", "status", "theta_deg", "p", "iterations"};
    for (const auto& r : records) {
      table.rows.push_back(
          {format_double(r.t_l), format_double(r.t_s),
           std::string(to_string(r.status)),
           r.theta ? format_double(rad_to_deg(*r.theta)) : std::string(),
           format_optional(r.p), std::to_string(r.iterations)});
    }
    table.write(out);
    return kSuccess;
  } catch (const std::exception& e) {
    return report_error(e, err);
  }
}

int run_curve(const RunConfig& cfg, double t_l, double t_s, double step_deg,
              std::ostream& out, std::ostream& err) {
  try {
    const TensionInput t{t_l, t_s};
    t.validate();
    if (!std::isfinite(step_deg) || !(step_deg > 0.0) || step_deg > 30.0) {
      throw DomainError("--step must lie in (0, 30] deg");
    }
    const std::vector<double> grid_deg =
        angle_grid(cfg.range_lo_deg, cfg.range_hi_deg, step_deg);
    std::vector<double> grid;
    grid.reserve(grid_deg.size());
    for (double d : grid_deg) grid.push_back(deg_to_rad(d));
    const auto curve = sample_curve(t, cfg.geometry, cfg.material, grid);

    if (cfg.output_format == OutputFormat::json) {
      ordered_json doc = ordered_json::array();
      for (std::size_t i = 0; i < curve.size(); ++i) {
        ordered_json row;
        row["theta_deg"] = grid_deg[i];
        row["f_value"] = optional_json(curve[i].f_value);
        row["p_value"] = optional_json(curve[i].p_value);
        row["feasible"] = curve[i].feasible();
        doc.push_back(std::move(row));
      }
      emit_json(doc, out);
      return kSuccess;
    }
    CsvTable table;
    table.header = {"theta_deg", "f_value", "p_value", "feasible"};
    for (std::size_t i = 0; i < curve.size(); ++i) {
      table.rows.push_back({format_double(grid_deg[i]),
                            format_optional(curve[i].f_value),
                            format_optional(curve[i].p_value),
                            curve[i].feasible() ? "true" : "false"});
    }
    table.write(out);
    return kSuccess;
  } catch (const std::exception& e) {
    return report_error(e, err);
  }
}

int run_validate(const RunConfig& cfg, double t_l, double t_s,
                 std::ostream& out, std::ostream& err) {
  try {
    const TensionInput t{t_l, t_s};
    t.validate();

    std::optional<EquilibriumState> state;
    std::string status;
    int code = kSuccess;
    try {
      state = solve_unit(t, cfg.geometry, cfg.material, cfg.solver);
      status = state->converged ? "converged" : "infeasible";
    } catch (const std::exception& e) {
      if (!is_solver_failure(e)) throw;
      status = status_of(e);
      code = report_error(e, err);
    }

    const auto intervals =
        oracle_scan(t, cfg.geometry, cfg.material,
                    deg_to_rad(kValidateGridStepDeg), cfg.solver.lo,
                    cfg.solver.hi);
    std::optional<VerificationReport> report;
    bool agrees = false;
    if (state) {
      report = verify_state(*state, t, cfg.geometry, cfg.material);
      for (const auto& iv : intervals) {
        agrees = agrees || iv.contains(state->theta, cfg.solver.tol);
      }
    }
    const bool pass = state && state->converged && report->pass && agrees;
    if (code == kSuccess && !pass) code = kSolverFailure;

    if (cfg.output_format == OutputFormat::json) {
      ordered_json doc;
      doc["t_l"] = t_l;
      doc["t_s"] = t_s;
      doc["status"] = status;
      doc["theta_deg"] =
          state ? ordered_json(rad_to_deg(state->theta)) : ordered_json(nullptr);
      doc["p"] = state ? ordered_json(state->p) : ordered_json(nullptr);
      ordered_json checks = ordered_json::array();
      ordered_json signs = ordered_json::array();
      if (report) {
        for (const auto& c : report->checks) {
          checks.push_back({{"name", c.name},
                            {"value", c.value},
                            {"limit", c.limit},
                            {"pass", c.pass}});
        }
        for (const auto& s : report->signs) {
          signs.push_back(
              {{"component", s.component}, {"value", s.value}, {"sign", s.sign}});
        }
      }
      doc["checks"] = std::move(checks);
      doc["signs"] = std::move(signs);
      ordered_json found = ordered_json::array();
      for (const auto& iv : intervals) {
        found.push_back({rad_to_deg(iv.lo), rad_to_deg(iv.hi)});
      }
      doc["oracle"] = {{"grid_step_deg", kValidateGridStepDeg},
                       {"intervals_deg", std::move(found)},
                       {"agrees", agrees}};
      doc["pass"] = pass;
      emit_json(doc, out);
      return code;
    }

    const auto b = [](bool v) { return std::string(v ? "true" : "false"); };
    CsvTable table;
    table.header = {"kind", "name", "value", "limit", "pass"};
    table.rows.push_back({"solve", "status", status, "",
                          b(state && state->converged)});
    if (state) {
      table.rows.push_back({"solve", "theta_deg",
                            format_double(rad_to_deg(state->theta)), "", "true"});
      table.rows.push_back({"solve", "p", format_double(state->p), "", "true"});
    }
    if (report) {
      for (const auto& c : report->checks) {
        table.rows.push_back({"check", c.name, format_double(c.value),
                              format_double(c.limit), b(c.pass)});
      }
      for (const auto& s : report->signs) {
        table.rows.push_back({"sign", s.component, format_double(s.value),
                              std::to_string(s.sign), "true"});
      }
    }
    table.rows.push_back({"oracle", "interval_count",
                          std::to_string(intervals.size()), "", "true"});
    for (const auto& iv : intervals) {
      table.rows.push_back({"oracle", "interval_deg",
                            format_double(rad_to_deg(iv.lo)),
                            format_double(rad_to_deg(iv.hi)), "true"});
    }
    table.rows.push_back({"oracle", "agrees", "", "", b(agrees)});
    table.rows.push_back({"overall", "pass", "", "", b(pass)});
    table.write(out);
    return code;
  } catch (const std::exception& e) {
    return report_error(e, err);
  }
}

}  // namespace tendon::cli
