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

#include "ddmac/fading.hpp"

#include <algorithm>
#include <cmath>

#include "ddmac/errors.hpp"

namespace ddmac {

namespace {

void require_gbar(double gbar)
{
    if (!(gbar > 0.0 && std::isfinite(gbar))) throw DomainError("average SNR must be positive and finite");
}

void require_snr(double gamma)
{
    if (!(gamma >= 0.0)) throw DomainError("SNR must be nonnegative");
}

} // namespace

AvgSnrPair::AvgSnrPair(double gbar1, double gbar2) : gbar1_(gbar1), gbar2_(gbar2)
{
    require_gbar(gbar1);
    require_gbar(gbar2);
}

Geometry::Geometry(double d1, double d2, double alpha) : d1_(d1), d2_(d2), alpha_(alpha)
{
    if (!(d1 > 0.0 && std::isfinite(d1) && d2 > 0.0 && std::isfinite(d2)))
        throw DomainError("distances must be positive and finite");
    if (!(alpha > 2.0 && std::isfinite(alpha))) throw DomainError("path-loss exponent must exceed 2");
}

double Geometry::path_loss1() const
{
    return std::pow(d1_, alpha_);
}

double Geometry::path_loss2() const
{
    return std::pow(d2_, alpha_);
}

double marginal_cdf(double gbar, double gamma)
{
    require_gbar(gbar);
    require_snr(gamma);
    return -std::expm1(-gamma / gbar);
}

double marginal_pdf(double gbar, double gamma)
{
    require_gbar(gbar);
    require_snr(gamma);
    return std::exp(-gamma / gbar) / gbar;
}

double marginal_survival(double gbar, double gamma)
{
    require_gbar(gbar);
    require_snr(gamma);
    return std::exp(-gamma / gbar);
}

double quantile(double gbar, double u)
{
    require_gbar(gbar);
    if (!(u >= 0.0 && u < 1.0)) throw DomainError("quantile level must lie in [0, 1)");
    return -gbar * std::log1p(-u);
}

double joint_pdf(const DependenceModel& model, const AvgSnrPair& snrs, double g1, double g2)
{
    if (!model.has_density()) throw NoDensity("copula " + model.label() + " has no density");
    const double f1 = marginal_pdf(snrs.first(), g1);
    const double f2 = marginal_pdf(snrs.second(), g2);
    const UnitSquarePoint p(marginal_cdf(snrs.first(), g1), marginal_cdf(snrs.second(), g2));
    return f1 * f2 * copula_density(model, p);
}

double joint_survival(const DependenceModel& model, const AvgSnrPair& snrs, double g1, double g2)
{
    const UnitSquarePoint p(marginal_survival(snrs.first(), g1), marginal_survival(snrs.second(), g2));
    return survival_copula(model, p);
}

SnrSample sample_snr_pair(const DependenceModel& model, const AvgSnrPair& snrs, const CounterRng& rng,
                          std::uint64_t index)
{
    // Rotated or clamped partners can round to exactly 1; keep them inside [0, 1).
    constexpr double kBelowOne = 1.0 - 0x1.0p-53;
    const UnitSquarePoint u = sample_pair(model, rng, index);
    return {quantile(snrs.first(), std::min(u.u1(), kBelowOne)), quantile(snrs.second(), std::min(u.u2(), kBelowOne))};
}

std::vector<SnrSample> sample_snr_pairs(const DependenceModel& model, const AvgSnrPair& snrs, std::size_t n,
                                        std::uint64_t seed)
{
    if (n == 0) throw DomainError("sample count must be at least 1");
    const CounterRng rng(seed);
    std::vector<SnrSample> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(sample_snr_pair(model, snrs, rng, i));
    return out;
}

} // namespace ddmac
