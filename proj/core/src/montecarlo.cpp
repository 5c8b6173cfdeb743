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

#include "ddmac/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include "ddmac/errors.hpp"
#include "ddmac/outage.hpp"

namespace ddmac {

void RunningStats::merge(const RunningStats& other) noexcept
{
    if (other.count_ == 0) return;
    if (count_ == 0) {
        *this = other;
        return;
    }
    const double na = static_cast<double>(count_);
    const double nb = static_cast<double>(other.count_);
    const double n = na + nb;
    const double delta = other.mean_ - mean_;
    mean_ += delta * nb / n;
    m2_ += other.m2_ + delta * delta * na * nb / n;
    count_ += other.count_;
}

namespace {

// Accumulates f(sample i) per chunk and merges the chunk summaries in chunk
// order, so the reduction tree does not depend on the thread count.
template <class F>
McEstimate run_chunked(std::uint64_t n, std::uint64_t seed, const McOptions& options, F&& per_sample)
{
    if (n < kMinMcSamples) throw DomainError("Monte-Carlo estimates need at least 1000 samples");
    if (options.chunk_size == 0) throw DomainError("chunk size must be positive");

    const std::uint64_t chunks = (n + options.chunk_size - 1) / options.chunk_size;
    std::vector<RunningStats> partial(chunks);
    const auto run_chunk = [&](std::uint64_t k) {
        const std::uint64_t begin = k * options.chunk_size;
        const std::uint64_t end = std::min(n, begin + options.chunk_size);
        RunningStats stats;
        for (std::uint64_t i = begin; i < end; ++i) stats.push(per_sample(i));
        partial[k] = stats;
    };

    const auto workers = static_cast<std::uint64_t>(std::clamp<std::uint64_t>(options.threads, 1, chunks));
    if (workers == 1) {
        for (std::uint64_t k = 0; k < chunks; ++k) run_chunk(k);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::uint64_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t k = w; k < chunks; k += workers) run_chunk(k);
            });
        }
    }

    RunningStats total;
    for (const auto& stats : partial) total.merge(stats);
    return {total.mean(), std::sqrt(total.variance() / static_cast<double>(n)), n, seed};
}

} // namespace

McEstimate estimate_outage(const DependenceModel& model, const AvgSnrPair& snrs, const Geometry& geometry,
                           double rate, std::uint64_t n, std::uint64_t seed, const McOptions& options)
{
    const Thresholds beta = beta_thresholds(geometry, rate);
    const CounterRng rng(seed);
    // gamma_i/d_i^alpha <= 2^{2Ro} - 1  <=>  gamma_i <= beta_i
    return run_chunked(n, seed, options, [&](std::uint64_t i) {
        const SnrSample s = sample_snr_pair(model, snrs, rng, i);
        return (s.g1 <= beta.beta1 || s.g2 <= beta.beta2) ? 1.0 : 0.0;
    });
}

McEstimate estimate_sum_rate(const DependenceModel& model, const AvgSnrPair& snrs, const Geometry& geometry,
                             std::uint64_t n, std::uint64_t seed, const McOptions& options)
{
    const double pl1 = geometry.path_loss1();
    const double pl2 = geometry.path_loss2();
    const CounterRng rng(seed);
    return run_chunked(n, seed, options, [&](std::uint64_t i) {
        const SnrSample s = sample_snr_pair(model, snrs, rng, i);
        return 0.5 * std::log1p(std::min(s.g1 / pl1, s.g2 / pl2)) / std::numbers::ln2;
    });
}

} // namespace ddmac
