// Copyright 2026 The NLA Simulator Authors
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

#include "nla/applications.hpp"
#include "nla/protocols.hpp"

namespace {

using nla::protocols::AmplifierConfig;

void BM_OneWayRun(benchmark::State& state) {
    const auto c = AmplifierConfig::from_alpha2(0.5, 0.6, 0.7, {0.85, 0.015}, {0.85, 0.015});
    for (auto _ : state) benchmark::DoNotOptimize(nla::protocols::oneway_run(c));
}
BENCHMARK(BM_OneWayRun);

void BM_ScissorsRun(benchmark::State& state) {
    const auto c = AmplifierConfig::from_alpha2(0.5, 0.6, 0.7);
    for (auto _ : state) benchmark::DoNotOptimize(nla::protocols::qs_nla_run(c));
}
BENCHMARK(BM_ScissorsRun);

void BM_SkrPoint(benchmark::State& state) {
    nla::applications::SkrScenario sc;
    sc.link = {0.0063, 500.0};
    for (auto _ : state) benchmark::DoNotOptimize(nla::applications::skr_protocol(sc));
}
BENCHMARK(BM_SkrPoint);

void BM_RemoteEntangle(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(nla::applications::remote_entangle({0.85, 0.015}, {0.85, 0.015}));
}
BENCHMARK(BM_RemoteEntangle);

}  // namespace

BENCHMARK_MAIN();
