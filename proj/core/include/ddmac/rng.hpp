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

namespace ddmac {

/// Counter-based generator: draw i of a stream is a pure function of (seed, i),
/// so any partition of the index range into chunks reproduces the same numbers.
///
/// The mixing function is the SplitMix64 finalizer applied to seed-keyed counters.
class CounterRng
{
public:
    explicit constexpr CounterRng(std::uint64_t seed) noexcept : key_(mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

    constexpr std::uint64_t bits(std::uint64_t counter) const noexcept
    {
        return mix(key_ + (counter + 1) * 0x9e3779b97f4a7c15ULL);
    }

    /// Uniform double on the open interval (0, 1), 53-bit resolution.
    constexpr double uniform(std::uint64_t counter) const noexcept
    {
        return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
    }

    constexpr std::uint64_t key() const noexcept { return key_; }

private:
    static constexpr std::uint64_t mix(std::uint64_t z) noexcept
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
};

} // namespace ddmac
