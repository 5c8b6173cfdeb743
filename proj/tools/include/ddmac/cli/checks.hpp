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
#include <string>
#include <string_view>
#include <vector>

namespace ddmac::cli {

enum class Relation
{
    AtMost,  // measured <= tolerance
    AtLeast, // measured >= tolerance
    Above,   // measured > tolerance
    Info,    // reported only, always passes
};

std::string_view to_string(Relation r) noexcept;

struct Check
{
    std::string suite;
    std::string name;
    double measured = 0.0;
    Relation relation = Relation::AtMost;
    double tolerance = 0.0;

    bool passed() const noexcept;
};

using CheckList = std::vector<Check>;

/// Boundary, 2-increasing, Frechet sandwich and radial symmetry on a 21x21
/// grid for every family, conditional inverses, and Frank limits.
CheckList copula_checks();

/// Closed forms against the generic survival-copula route, dependence
/// ordering and rate limits.
CheckList outage_checks();

/// Exponential integral accuracy, Ei-form terms against direct quadrature,
/// integral identities, closed form against quadrature, approximation audit
/// and region ordering.
CheckList coverage_checks();

/// Monte-Carlo outage at the reference configuration.
CheckList mc_outage_checks(std::uint64_t seed, unsigned threads);

/// Monte-Carlo sum rate, empirical copulas of 10^6 samples and thread determinism.
CheckList mc_other_checks(std::uint64_t seed, unsigned threads);

/// "copula", "outage", "coverage", "mc" or "all".
CheckList run_suite(std::string_view suite, std::uint64_t seed, unsigned threads);

} // namespace ddmac::cli
