// Copyright 2026 The parabose Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "parabose/oracle.hpp"

namespace {

using parabose::ParaParam;
using parabose::QuadSpec;

void BM_WignerQuadrature(benchmark::State& state) {
  QuadSpec spec;
  spec.nodes_per_axis = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = parabose::wigner_quadrature(2, ParaParam(2.5), {0.4, -0.3}, spec);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_WignerQuadrature)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Normalization(benchmark::State& state) {
  QuadSpec spec;
  spec.nodes_per_axis = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(parabose::normalization(2, ParaParam(1.5), spec).value);
  }
}
BENCHMARK(BM_Normalization)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
