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

#include <benchmark/benchmark.h>

#include <vector>

#include "tendon/analysis.hpp"
#include "tendon/model.hpp"
#include "tendon/solver.hpp"

namespace {

using namespace tendon;

const UnitGeometry kGeom{0.008, 0.0078, 0.001, deg_to_rad(60.0),
                         deg_to_rad(88.49)};
const MaterialParams kMat{0.01, 9.81, 1.05};
const TensionInput kTension{1.0, 2.0};
const BisectionConfig kCfg{0.0, kMaxTilt, deg_to_rad(1e-10), 100};

void BM_ContactIntegrals(benchmark::State& state) {
  double theta = deg_to_rad(15.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta);
    benchmark::DoNotOptimize(contact_integrals(kGeom, theta));
  }
}
BENCHMARK(BM_ContactIntegrals);

void BM_PressureFromTheta(benchmark::State& state) {
  double theta = deg_to_rad(15.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta);
    benchmark::DoNotOptimize(pressure_from_theta(theta, kTension, kGeom, kMat));
  }
}
BENCHMARK(BM_PressureFromTheta);

void BM_SolveUnit(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_unit(kTension, kGeom, kMat, kCfg));
  }
}
BENCHMARK(BM_SolveUnit);

void BM_Sweep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> tl(n), ts(n);
  for (std::size_t i = 0; i < n; ++i) {
    tl[i] = 0.5 + 0.1 * static_cast<double>(i);
    ts[i] = 1.0 + 0.1 * static_cast<double>(i);
  }
  const auto exec = state.range(1) ? Execution::parallel : Execution::serial;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep(tl, ts, kGeom, kMat, kCfg, exec));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n));
}
BENCHMARK(BM_Sweep)->Args({16, 0})->Args({16, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
