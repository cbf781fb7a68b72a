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

// tendon-unit: command-line front end for the unit equilibrium solver.
//
//   tendon-unit solve    --config unit.json --tl 1 --ts 2
//   tendon-unit sweep    --config unit.json --tl 0.5:2:0.5 --ts 1:3:0.5
//   tendon-unit curve    --config unit.json --tl 1 --ts 2 --step 0.1
//   tendon-unit validate --config unit.json --tl 1 --ts 2

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tendon/cli.hpp"
#include "tendon/config.hpp"
#include "tendon/format.hpp"

namespace {

using tendon::RunConfig;
namespace cli = tendon::cli;

struct Options {
  std::string config;
  std::string tl;
  std::string ts;
  double step = 0.1;
  std::optional<std::string> format;
  std::optional<std::string> out;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config, "run configuration (JSON)")->required();
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", o.out, "write results to this file");
}

// Loads the config, applies overrides and routes output to stdout or a file.
int with_output(const Options& o,
                const std::function<int(const RunConfig&, std::ostream&)>& body) {
  try {
    RunConfig cfg = tendon::load_config(o.config);
    if (o.format) cfg.output_format = tendon::parse_output_format(*o.format);
    if (o.out) cfg.output_path = *o.out;
    if (!cfg.output_path) return body(cfg, std::cout);

    std::ofstream file(*cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      std::cerr << "error: cannot open output file " << *cfg.output_path << '\n';
      return cli::kInputError;
    }
    const int code = body(cfg, file);
    file.flush();
    if (!file) {
      std::cerr << "error: failed writing " << *cfg.output_path << '\n';
      return cli::kInternalError;
    }
    return code;
  } catch (const std::exception& e) {
    return cli::report_error(e, std::cerr);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-static equilibrium of a tendon-driven ball-socket unit"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "solve for tilt and pressure");
  auto* sweep = app.add_subcommand("sweep", "solve over a tension grid");
  auto* curve = app.add_subcommand("curve", "sample the equilibrium function");
  auto* validate =
      app.add_subcommand("validate", "solve, verify and cross-check with a scan");
  for (auto* sub : {solve, curve, validate}) {
    add_common(sub, o);
    sub->add_option("--tl", o.tl, "long-side tension, N")->required();
    sub->add_option("--ts", o.ts, "short-side tension, N")->required();
  }
  add_common(sweep, o);
  sweep->add_option("--tl", o.tl, "long-side range start:stop:step, N")
      ->required();
  sweep->add_option("--ts", o.ts, "short-side range start:stop:step, N")
      ->required();
  curve->add_option("--step", o.step, "grid step, deg");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputError;
  }

  const auto tension = [](const std::string& text) {
    return tendon::parse_double(text);
  };

  return with_output(o, [&](const RunConfig& cfg, std::ostream& out) {
    if (*solve) {
      return cli::run_solve(cfg, tension(o.tl), tension(o.ts), out, std::cerr);
    }
    if (*sweep) {
      return cli::run_sweep(cfg, cli::parse_range(o.tl),
                            cli::parse_range(o.ts), out, std::cerr);
    }
    if (*curve) {
      return cli::run_curve(cfg, tension(o.tl), tension(o.ts), o.step, out,
                            std::cerr);
    }
    return cli::run_validate(cfg, tension(o.tl), tension(o.ts), out, std::cerr);
  });
}
