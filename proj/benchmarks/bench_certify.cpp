// Copyright 2026 The vitalpovm Authors
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

#include "vitalpovm/certify.hpp"
#include "vitalpovm/designs.hpp"

using namespace vitalpovm;

static void BM_MeasurementRank(benchmark::State& state) {
  const Frame f = construct_real_max(static_cast<std::size_t>(state.range(0)));
  const RationalMatrix m = measurement_matrix(f);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_MeasurementRank)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_CpFast(benchmark::State& state) {
  const Frame f = construct_real_max(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(complement_property_fast(f).holds());
}
BENCHMARK(BM_CpFast)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_CpExhaustive(benchmark::State& state) {
  const Frame f = construct_real_max(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(complement_property_exhaustive(f).holds());
}
BENCHMARK(BM_CpExhaustive)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_FullSpark(benchmark::State& state) {
  const Frame f = construct_cauchy_full_spark(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(full_spark(f).full_spark);
}
BENCHMARK(BM_FullSpark)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_VitalAgl17(benchmark::State& state) {
  const Frame f = frame_from_design(design_agl17(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_vital(f).status);
}
BENCHMARK(BM_VitalAgl17)->Iterations(1)->Unit(benchmark::kSecond);
BENCHMARK_MAIN();
