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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ddmac/dependence.hpp"

namespace ddmac {

/// Average received SNRs of the two users, linear scale.
class AvgSnrPair
{
public:
    AvgSnrPair(double gbar1, double gbar2);

    double first() const noexcept { return gbar1_; }
    double second() const noexcept { return gbar2_; }

private:
    double gbar1_;
    double gbar2_;
};

/// Transmitter distances from the receiver at the origin and the path-loss exponent (> 2).
class Geometry
{
public:
    Geometry(double d1, double d2, double alpha);

    double d1() const noexcept { return d1_; }
    double d2() const noexcept { return d2_; }
    double alpha() const noexcept { return alpha_; }

    /// d1^alpha and d2^alpha.
    double path_loss1() const;
    double path_loss2() const;

private:
    double d1_;
    double d2_;
    double alpha_;
};

// Exponential SNR marginals of Rayleigh fading, mean gbar.
double marginal_cdf(double gbar, double gamma);
double marginal_pdf(double gbar, double gamma);
double marginal_survival(double gbar, double gamma);
double quantile(double gbar, double u);

/// f(g1) f(g2) c(F(g1), F(g2)). Throws NoDensity for the Frechet bounds.
double joint_pdf(const DependenceModel& model, const AvgSnrPair& snrs, double g1, double g2);

/// Pr(gamma1 > g1, gamma2 > g2) through the survival copula.
double joint_survival(const DependenceModel& model, const AvgSnrPair& snrs, double g1, double g2);

struct SnrSample
{
    double g1;
    double g2;
};

SnrSample sample_snr_pair(const DependenceModel& model, const AvgSnrPair& snrs, const CounterRng& rng,
                          std::uint64_t index);

std::vector<SnrSample> sample_snr_pairs(const DependenceModel& model, const AvgSnrPair& snrs, std::size_t n,
                                        std::uint64_t seed);

/// dB -> linear power ratio.
inline double db_to_linear(double db) noexcept
{
    return std::pow(10.0, db / 10.0);
}

} // namespace ddmac
