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

#include "stokesim/gaussian.hpp"

namespace {

void BM_PrepareBrightSqueezed(benchmark::State& state) {
  using namespace stokesim;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        prepare_bright_squeezed_cyl(CylFamily::azimuthal(), 1.0, 0.8));
  }
}
BENCHMARK(BM_PrepareBrightSqueezed);

void BM_OpChain(benchmark::State& state) {
  using namespace stokesim;
  const GaussianState vac = vacuum(4);
  for (auto _ : state) {
    GaussianState st = squeeze_two(vac, 1, 2, 0.5);
    st = squeeze_single(st, 1, 0.25);
    st = displace(st, 0, Complex(0.7, 0.1));
    st = beamsplitter(st, 0, 3, 0.5, 0.0);
    st = loss(st, 2, 0.7);
    benchmark::DoNotOptimize(st);
  }
}
BENCHMARK(BM_OpChain);

void BM_PhysicalityCheck(benchmark::State& state) {
  using namespace stokesim;
  const GaussianState st =
      squeeze_two(prepare_bright_squeezed_cyl(CylFamily::radial(), 0.5, 0.6), 0,
                  1, 0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(physicality_check(st));
  }
}
BENCHMARK(BM_PhysicalityCheck);

}  // namespace
