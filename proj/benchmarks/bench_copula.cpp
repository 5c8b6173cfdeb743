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

#include "ddmac/dependence.hpp"
#include "ddmac/outage.hpp"

namespace {

using ddmac::DependenceModel;

DependenceModel model_for(int index)
{
    switch (index) {
    case 0: return DependenceModel::independence();
    case 1: return DependenceModel::fgm(-1.0);
    case 2: return DependenceModel::frank(-30.0);
    default: return DependenceModel::frank(30.0);
    }
}

void BM_CopulaCdf(benchmark::State& state)
{
    const DependenceModel model = model_for(static_cast<int>(state.range(0)));
    state.SetLabel(model.label());
    double u = 0.05;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ddmac::copula_cdf(model, ddmac::UnitSquarePoint(u, 1.0 - u)));
        u = u < 0.95 ? u + 0.01 : 0.05;
    }
}
BENCHMARK(BM_CopulaCdf)->DenseRange(0, 3);

void BM_ConditionalQuantile(benchmark::State& state)
{
    const DependenceModel model = model_for(static_cast<int>(state.range(0)));
    state.SetLabel(model.label());
    double v = 0.05;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ddmac::conditional_quantile(model, 0.3, v));
        v = v < 0.95 ? v + 0.01 : 0.05;
    }
}
BENCHMARK(BM_ConditionalQuantile)->DenseRange(0, 3);

void BM_OutageClosedForm(benchmark::State& state)
{
    const DependenceModel model = model_for(static_cast<int>(state.range(0)));
    state.SetLabel(model.label());
    const ddmac::AvgSnrPair snrs(10.0, 20.0);
    const ddmac::OutageQuery query(ddmac::Geometry(1.0, 1.0, 3.5), 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(ddmac::outage_closed_form(model, snrs, query));
}
BENCHMARK(BM_OutageClosedForm)->DenseRange(0, 3);

} // namespace
