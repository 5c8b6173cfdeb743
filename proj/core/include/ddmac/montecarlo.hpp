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

#pragma once

#include <cstdint>

#include "ddmac/dependence.hpp"
#include "ddmac/fading.hpp"

namespace ddmac {

struct McEstimate
{
    double mean = 0.0;
    double std_error = 0.0; // sample standard deviation / sqrt(n)
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
};

/// One-pass mean/variance accumulator with exact pairwise merging.
class RunningStats
{
public:
    void push(double x) noexcept
    {
        ++count_;
        const double delta = x - mean_;
        mean_ += delta / static_cast<double>(count_);
        m2_ += delta * (x - mean_);
    }

    void merge(const RunningStats& other) noexcept;

    std::uint64_t count() const noexcept { return count_; }
    double mean() const noexcept { return mean_; }
    double variance() const noexcept { return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0; }

private:
    std::uint64_t count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

struct McOptions
{
    /// Samples per chunk; chunk k always covers sample indices [k*chunk, (k+1)*chunk).
    std::uint64_t chunk_size = 1u << 16;
    /// Worker threads. Results are bit-identical for every value.
    unsigned threads = 1;
};

inline constexpr std::uint64_t kMinMcSamples = 1000;

/// Fraction of draws with min(g1/d1^alpha, g2/d2^alpha) <= 2^{2 Ro} - 1.
McEstimate estimate_outage(const DependenceModel& model, const AvgSnrPair& snrs, const Geometry& geometry,
                           double rate, std::uint64_t n, std::uint64_t seed, const McOptions& options = {});

/// Sample mean of 1/2 log2(1 + min(g1/d1^alpha, g2/d2^alpha)).
McEstimate estimate_sum_rate(const DependenceModel& model, const AvgSnrPair& snrs, const Geometry& geometry,
                             std::uint64_t n, std::uint64_t seed, const McOptions& options = {});

} // namespace ddmac
