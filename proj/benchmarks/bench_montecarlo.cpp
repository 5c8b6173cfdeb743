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

#include "ddmac/montecarlo.hpp"

namespace {

void BM_EstimateOutage(benchmark::State& state)
{
    const auto model = ddmac::DependenceModel::frank(-30.0);
    const ddmac::McOptions options{.threads = static_cast<unsigned>(state.range(0))};
    const std::uint64_t n = 100000;
    for (auto _ : state)
        benchmark::DoNotOptimize(ddmac::estimate_outage(model, ddmac::AvgSnrPair(10.0, 10.0),
                                                        ddmac::Geometry(1.0, 1.0, 3.5), 1.0, n, 42, options));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_EstimateOutage)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace
