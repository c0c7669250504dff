// Copyright 2026 The stokesim Authors
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

#include "stokesim/scenario.hpp"

namespace {

stokesim::Scenario bench_scenario() {
  stokesim::Scenario sc;
  sc.r = 0.7;
  sc.v0 = 1.0;
  sc.network.m = 25.0;
  return sc;
}

void BM_StokesVariance(benchmark::State& state) {
  using namespace stokesim;
  const MeasuredState net = scenario_networks(bench_scenario())[0];
  const QuadraticObservable obs = stokes(net.arm_a, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(variance(obs, net.state));
  }
}
BENCHMARK(BM_StokesVariance);

void BM_DuanSimon(benchmark::State& state) {
  using namespace stokesim;
  const MeasuredState net = scenario_networks(bench_scenario())[0];
  const CriterionSpec spec{2, 3, net.arm_a, net.arm_b};
  for (auto _ : state) {
    benchmark::DoNotOptimize(duan_simon(net.state, spec));
  }
}
BENCHMARK(BM_DuanSimon);

void BM_ScanCombinations(benchmark::State& state) {
  using namespace stokesim;
  const Scenario sc = bench_scenario();
  for (auto _ : state) {
    benchmark::DoNotOptimize(scenario_scan(sc));
  }
}
BENCHMARK(BM_ScanCombinations);

}  // namespace
