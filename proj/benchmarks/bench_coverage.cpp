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

#include "ddmac/coverage.hpp"

namespace {

const ddmac::AvgSnrPair kSnrs(10.0, 10.0);

void BM_SumRateExact(benchmark::State& state)
{
    const ddmac::Geometry geometry(0.7, 1.3, 3.5);
    for (auto _ : state) benchmark::DoNotOptimize(ddmac::sum_rate_fgm_exact(kSnrs, geometry, 0.5));
}
BENCHMARK(BM_SumRateExact);

void BM_SumRateQuadrature(benchmark::State& state)
{
    const ddmac::Geometry geometry(0.7, 1.3, 3.5);
    const auto model = ddmac::DependenceModel::fgm(0.5);
    for (auto _ : state) benchmark::DoNotOptimize(ddmac::sum_rate_quadrature(model, kSnrs, geometry));
}
BENCHMARK(BM_SumRateQuadrature)->Unit(benchmark::kMillisecond);

void BM_CoverageRegion(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const ddmac::GridSpec grid{2.0, 2.0, n, n};
    const auto model = ddmac::DependenceModel::fgm(1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            ddmac::coverage_region(model, kSnrs, 3.5, 0.5, grid, ddmac::RateMethod::Exact).covered_cells());
}
BENCHMARK(BM_CoverageRegion)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

} // namespace
