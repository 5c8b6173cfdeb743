// SPDX-License-Identifier: Apache-2.0
//
// ddmac - outage and coverage analysis for the correlated doubly dirty fading MAC
// Copyright (C) 2026 The ddmac authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include "ddmac/specfun.hpp"

namespace {

void BM_EiNeg(benchmark::State& state)
{
    const double x = static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state) benchmark::DoNotOptimize(ddmac::ei_neg(x));
}
BENCHMARK(BM_EiNeg)->Arg(1)->Arg(100)->Arg(500)->Arg(5000);

void BM_ExpEiNeg(benchmark::State& state)
{
    const double x = static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state) benchmark::DoNotOptimize(ddmac::exp_ei_neg(x));
}
BENCHMARK(BM_ExpEiNeg)->Arg(1)->Arg(100)->Arg(500)->Arg(5000);

} // namespace
