// Copyright 2026 The qsdc Authors.
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

#include <numbers>

#include "benchmark/benchmark.h"
#include "qsdc/cloner.hpp"
#include "qsdc/nmr.hpp"
#include "qsdc/pulse.hpp"
#include "qsdc/sweep.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

void BM_GateClone(benchmark::State& state) {
  const qsdc::InputState input(kPi / 3.0, kPi / 5.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsdc::clone(input));
  }
}
BENCHMARK(BM_GateClone);

void BM_CompileNorth(benchmark::State& state) {
  const qsdc::SpinSystem sys;
  const qsdc::PulseProgram program = qsdc::builtin_program("north");
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsdc::compile_unitary(program, sys));
  }
}
BENCHMARK(BM_CompileNorth);

void BM_PrepPseudoPure(benchmark::State& state) {
  const qsdc::SpinSystem sys;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsdc::prepare_pseudo_pure(sys));
  }
}
BENCHMARK(BM_PrepPseudoPure);

void BM_PulsePipeline(benchmark::State& state) {
  const qsdc::SpinSystem sys;
  const qsdc::InputState input(kPi / 3.0, kPi / 5.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsdc::run_cloning_pulse_level(input, sys));
  }
}
BENCHMARK(BM_PulsePipeline);

void BM_ParsePrintRoundTrip(benchmark::State& state) {
  const std::string text = qsdc::print(qsdc::builtin_program("north"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsdc::print(qsdc::parse(text)));
  }
}
BENCHMARK(BM_ParsePrintRoundTrip);

void BM_SweepGateLevel(benchmark::State& state) {
  const qsdc::SpinSystem sys;
  qsdc::SweepConfig config;
  config.level = qsdc::SweepLevel::Gate;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsdc::run_sweep(config, sys));
  }
}
BENCHMARK(BM_SweepGateLevel);

}  // namespace

BENCHMARK_MAIN();
