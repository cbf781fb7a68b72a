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

// Run configuration as read from a JSON file. Angles are degrees and lengths
// meters in the file; the loaded RunConfig holds radians.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "tendon/model.hpp"
#include "tendon/solver.hpp"

namespace tendon {

enum class OutputFormat { csv, json };

struct RunConfig {
  UnitGeometry geometry;
  MaterialParams material;
  BisectionConfig solver;
  double range_lo_deg = 0.0;  ///< solver range as written in the file
  double range_hi_deg = 30.0;
  OutputFormat output_format = OutputFormat::csv;
  std::optional<std::string> output_path;
};

/// Throws ParseError for malformed JSON and ValidationError (naming the
/// offending field) for missing, unknown or out-of-range keys.
RunConfig parse_config(std::string_view text);

RunConfig load_config(const std::filesystem::path& path);

OutputFormat parse_output_format(std::string_view name);

}  // namespace tendon
