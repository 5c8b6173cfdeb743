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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ddmac/rng.hpp"

namespace ddmac {

enum class Family
{
    Independence,
    LowerFrechet, // countermonotone, C-(u1,u2) = max(u1 + u2 - 1, 0)
    UpperFrechet, // comonotone, C+(u1,u2) = min(u1, u2)
    Frank,
    FGM,
};

/// A bivariate copula family together with its dependence parameter.
///
/// Frank accepts any finite nonzero parameter. Parameters with magnitude below
/// kFrankIndependenceCutoff are mapped to the Independence family, since the
/// Frank copula converges to the product copula as the parameter goes to zero
/// and its closed form cancels catastrophically there.
/// FGM accepts parameters in [-1, 1]; FGM(0) is kept as an FGM model and
/// evaluates identically to Independence.
class DependenceModel
{
public:
    static constexpr double kFrankIndependenceCutoff = 1e-8;

    static DependenceModel independence() noexcept { return DependenceModel(Family::Independence, 0.0); }
    static DependenceModel lower_frechet() noexcept { return DependenceModel(Family::LowerFrechet, 0.0); }
    static DependenceModel upper_frechet() noexcept { return DependenceModel(Family::UpperFrechet, 0.0); }
    static DependenceModel frank(double theta);
    static DependenceModel fgm(double theta);

    Family family() const noexcept { return family_; }

    /// The family parameter for Frank and FGM, empty otherwise.
    std::optional<double> parameter() const noexcept;

    bool has_density() const noexcept
    {
        return family_ != Family::LowerFrechet && family_ != Family::UpperFrechet;
    }

    /// Short stable label such as "fgm(1)" or "frank(-30)".
    std::string label() const;

    friend bool operator==(const DependenceModel&, const DependenceModel&) = default;

private:
    DependenceModel(Family family, double theta) noexcept : family_(family), theta_(theta) {}

    Family family_;
    double theta_;
};

/// A point of the unit square; construction outside [0,1]^2 throws DomainError.
class UnitSquarePoint
{
public:
    UnitSquarePoint(double u1, double u2);

    double u1() const noexcept { return u1_; }
    double u2() const noexcept { return u2_; }

    friend bool operator==(const UnitSquarePoint&, const UnitSquarePoint&) = default;

private:
    double u1_;
    double u2_;
};

/// C(u1, u2).
double copula_cdf(const DependenceModel& model, UnitSquarePoint p);

/// c(u1, u2) = d^2 C / du1 du2. Throws NoDensity for the Frechet bounds.
double copula_density(const DependenceModel& model, UnitSquarePoint p);

/// Survival copula u1 + u2 - 1 + C(1 - u1, 1 - u2), derived from copula_cdf for every family.
double survival_copula(const DependenceModel& model, UnitSquarePoint p);

/// h(u2 | u1) = dC/du1, the conditional CDF of U2 given U1 = u1.
/// Throws NoDensity for the Frechet bounds.
double conditional_cdf(const DependenceModel& model, double u1, double u2);

/// Inverse of conditional_cdf in its second argument: the u2 with h(u2 | u1) = v.
/// For the Frechet bounds this returns the comonotone (u1) or countermonotone
/// (1 - u1) partner regardless of v.
double conditional_quantile(const DependenceModel& model, double u1, double v);

/// Pair \p index of the sample stream drawn from \p rng. Pair i consumes
/// counters 2i and 2i + 1, so any chunking of the index range yields the same pairs.
UnitSquarePoint sample_pair(const DependenceModel& model, const CounterRng& rng, std::uint64_t index);

/// n i.i.d. pairs distributed according to the model's copula. Deterministic given seed.
std::vector<UnitSquarePoint> sample_pairs(const DependenceModel& model, std::size_t n, std::uint64_t seed);

} // namespace ddmac
