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

void BM_OraclePrepare(benchmark::State& state) {
  using namespace stokesim;
  Scenario sc;
  sc.r = 0.3;
  sc.v0 = 0.5;
  sc.network.m = 0.5;
  const OpSequence seq = scenario_sequence(sc);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_prepare(seq, 4, 12));
  }
}
BENCHMARK(BM_OraclePrepare)->Unit(benchmark::kMillisecond);

void BM_OracleVariance(benchmark::State& state) {
  using namespace stokesim;
  Scenario sc;
  sc.r = 0.3;
  sc.v0 = 0.5;
  sc.network.m = 0.5;
  const FockState fock = oracle_prepare(scenario_sequence(sc), 4, 12);
  const QuadraticObservable obs =
      stokes(topology_arm_specs(Topology::PolPol).first, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_variance(obs, fock));
  }
}
BENCHMARK(BM_OracleVariance)->Unit(benchmark::kMillisecond);

}  // namespace
