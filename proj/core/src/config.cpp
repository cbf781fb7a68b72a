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

#include "tendon/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

#include "tendon/errors.hpp"

namespace tendon {
namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& prefix,
                    std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) {
      const std::string field = prefix.empty() ? key : prefix + "." + key;
      throw ValidationError(field, "unknown config key '" + field + "'");
    }
  }
}

const json& section(const json& root, const std::string& name, bool required) {
  static const json empty = json::object();
  if (!root.contains(name)) {
    if (required) {
      throw ValidationError(name, "missing config section '" + name + "'");
    }
    return empty;
  }
  const json& s = root.at(name);
  if (!s.is_object()) {
    throw ValidationError(name, "config section '" + name + "' must be an object");
  }
  return s;
}

std::optional<double> number(const json& obj, const std::string& prefix,
                             const std::string& key) {
  if (!obj.contains(key)) return std::nullopt;
  const json& v = obj.at(key);
  if (!v.is_number()) {
    throw ValidationError(prefix + "." + key,
                          "'" + prefix + "." + key + "' must be a number");
  }
  return v.get<double>();
}

double required(const json& obj, const std::string& prefix,
                const std::string& key, std::string_view why = {}) {
  auto v = number(obj, prefix, key);
  if (!v) {
    std::string msg = "missing required field '" + prefix + "." + key + "'";
    if (!why.empty()) msg += std::string("; ") + std::string(why);
    throw ValidationError(prefix + "." + key, msg);
  }
  return *v;
}

// Re-throws a DomainError from a type invariant as a ValidationError whose
// field is the leading "section.key" of the message.
template <typename Fn>
void validate_section(Fn&& fn, const std::string& section_name) {
  try {
    fn();
  } catch (const DomainError& e) {
    std::string msg = e.what();
    std::string field = section_name;
    const auto dot = msg.find('.');
    const auto space = msg.find(' ');
    if (dot != std::string::npos && space != std::string::npos && dot < space) {
      field = msg.substr(0, space);
    }
    throw ValidationError(field, msg);
  }
}

constexpr std::string_view kNoReferenceValue =
    "there is no reference value for it, so it must be given "
    "explicitly";

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw ValidationError("output_format",
                        "output_format must be 'csv' or 'json', got '" +
                            std::string(name) + "'");
}

RunConfig parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed config: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("config must be a JSON object");
  reject_unknown(root, "",
                 {"geometry", "material", "solver", "output_format",
                  "output_path"});

  RunConfig cfg;

  const json& geo = section(root, "geometry", true);
  reject_unknown(geo, "geometry", {"l", "r", "delta", "theta1", "theta2"});
  cfg.geometry.l = required(geo, "geometry", "l");
  cfg.geometry.r = required(geo, "geometry", "r");
  cfg.geometry.delta = required(geo, "geometry", "delta", kNoReferenceValue);
  cfg.geometry.theta1 = deg_to_rad(required(geo, "geometry", "theta1"));
  cfg.geometry.theta2 = deg_to_rad(required(geo, "geometry", "theta2"));
  validate_section([&] { cfg.geometry.validate(); }, "geometry");

  const json& mat = section(root, "material", true);
  reject_unknown(mat, "material", {"m", "g", "mu_s"});
  cfg.material.m = required(mat, "material", "m", kNoReferenceValue);
  cfg.material.g = number(mat, "material", "g").value_or(9.81);
  cfg.material.mu_s = required(mat, "material", "mu_s");
  validate_section([&] { cfg.material.validate(); }, "material");

  const json& sol = section(root, "solver", false);
  reject_unknown(sol, "solver", {"lo", "hi", "tol", "max_iter"});
  cfg.range_lo_deg = number(sol, "solver", "lo").value_or(0.0);
  cfg.range_hi_deg = number(sol, "solver", "hi").value_or(30.0);
  cfg.solver.lo = deg_to_rad(cfg.range_lo_deg);
  cfg.solver.hi = deg_to_rad(cfg.range_hi_deg);
  cfg.solver.tol = deg_to_rad(number(sol, "solver", "tol").value_or(1e-10));
  if (sol.contains("max_iter")) {
    if (!sol.at("max_iter").is_number_integer()) {
      throw ValidationError("solver.max_iter",
                            "'solver.max_iter' must be an integer");
    }
    cfg.solver.max_iter = sol.at("max_iter").get<int>();
  }
  if (cfg.solver.lo < 0.0 || cfg.solver.hi >= kPi / 2.0) {
    throw ValidationError("solver.hi",
                          "solver range must lie within [0, 90) deg");
  }
  validate_section([&] { cfg.solver.validate(); }, "solver");

  if (root.contains("output_format")) {
    const json& f = root.at("output_format");
    if (!f.is_string()) {
      throw ValidationError("output_format", "output_format must be a string");
    }
    cfg.output_format = parse_output_format(f.get<std::string>());
  }
  if (root.contains("output_path") && !root.at("output_path").is_null()) {
    const json& p = root.at("output_path");
    if (!p.is_string()) {
      throw ValidationError("output_path", "output_path must be a string");
    }
    cfg.output_path = p.get<std::string>();
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace tendon
