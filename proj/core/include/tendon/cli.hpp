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

// Subcommand bodies behind the tendon-unit executable. Each writes its table
// to `out`, diagnostics to `err`, and returns the process exit code.

#pragma once

#include <exception>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "tendon/config.hpp"

namespace tendon::cli {

enum ExitCode : int {
  kSuccess = 0,
  kSolverFailure = 1,  ///< no root, infeasible bracket, non-convergence
  kInputError = 2,     ///< bad arguments or configuration
  kInternalError = 3,
};

/// "start:stop:step", inclusive of stop when it lies on the grid.
struct RangeSpec {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  std::vector<double> values() const;
};

/// Throws ParseError on malformed text, step <= 0 or stop < start.
RangeSpec parse_range(std::string_view text);

int run_solve(const RunConfig& cfg, double t_l, double t_s, std::ostream& out,
              std::ostream& err);

int run_sweep(const RunConfig& cfg, const RangeSpec& t_l, const RangeSpec& t_s,
              std::ostream& out, std::ostream& err);

int run_curve(const RunConfig& cfg, double t_l, double t_s, double step_deg,
              std::ostream& out, std::ostream& err);

/// Grid spacing of the oracle scan used by run_validate.
inline constexpr double kValidateGridStepDeg = 1e-3;

int run_validate(const RunConfig& cfg, double t_l, double t_s,
                 std::ostream& out, std::ostream& err);

/// Maps an exception to its exit code and prints it to `err`.
int report_error(const std::exception& e, std::ostream& err);

}  // namespace tendon::cli
