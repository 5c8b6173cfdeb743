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

#include "ddmac/outage.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>

#include "ddmac/errors.hpp"

namespace ddmac {

namespace {

// Every closed form below is written in terms of the marginal outage
// probabilities F_i = 1 - s_i = 1 - e^{-beta_i/gbar_i}, evaluated with expm1 so
// that the Ro -> 0 limit keeps full relative precision.
struct Marginals
{
    double s1, s2; // survival
    double f1, f2; // outage
};

Marginals marginals(const AvgSnrPair& snrs, const OutageQuery& q)
{
    const double x1 = q.beta1() / snrs.first();
    const double x2 = q.beta2() / snrs.second();
    return {std::exp(-x1), std::exp(-x2), -std::expm1(-x1), -std::expm1(-x2)};
}

double to_probability(double raw)
{
    assert(raw > -1e-12 && raw < 1.0 + 1e-12);
    return std::clamp(raw, 0.0, 1.0);
}

} // namespace

Thresholds beta_thresholds(const Geometry& geometry, double rate)
{
    if (!(rate > 0.0 && std::isfinite(rate))) throw DomainError("threshold rate must be positive and finite");
    const double snr_needed = std::expm1(2.0 * rate * std::numbers::ln2);
    return {geometry.path_loss1() * snr_needed, geometry.path_loss2() * snr_needed};
}

OutageQuery::OutageQuery(const Geometry& geometry, double rate) : rate_(rate), beta_(beta_thresholds(geometry, rate)) {}

OutageQuery OutageQuery::from_thresholds(double beta1, double beta2)
{
    if (!(beta1 >= 0.0 && beta2 >= 0.0)) throw DomainError("SNR thresholds must be nonnegative");
    return OutageQuery(0.0, {beta1, beta2});
}

double outage_generic(const DependenceModel& model, const AvgSnrPair& snrs, const OutageQuery& q)
{
    const Marginals m = marginals(snrs, q);
    return to_probability(1.0 - survival_copula(model, UnitSquarePoint(m.s1, m.s2)));
}

double outage_lower_fh(const AvgSnrPair& snrs, const OutageQuery& q)
{
    const Marginals m = marginals(snrs, q);
    return to_probability(std::min(m.f1 + m.f2, 1.0));
}

double outage_upper_fh(const AvgSnrPair& snrs, const OutageQuery& q)
{
    const Marginals m = marginals(snrs, q);
    return to_probability(std::max(m.f1, m.f2));
}

double outage_frank(const AvgSnrPair& snrs, const OutageQuery& q, double theta)
{
    const auto model = DependenceModel::frank(theta);
    const Marginals m = marginals(snrs, q);
    // 2 - s1 - s2 = F1 + F2, and the logarithmic term equals -C_fr(F1, F2).
    // Frank is radially symmetric, so 1 - C_fr(s1, s2) is the same number; it
    // avoids the cancellation when both links are almost surely in outage.
    if (m.s1 + m.s2 < m.f1 + m.f2) return to_probability(1.0 - copula_cdf(model, UnitSquarePoint(m.s1, m.s2)));
    return to_probability(m.f1 + m.f2 - copula_cdf(model, UnitSquarePoint(m.f1, m.f2)));
}

double outage_fgm(const AvgSnrPair& snrs, const OutageQuery& q, double theta)
{
    if (!(theta >= -1.0 && theta <= 1.0)) throw DomainError("FGM parameter must lie in [-1, 1]");
    const Marginals m = marginals(snrs, q);
    return to_probability(1.0 - m.s1 * m.s2 * (1.0 + theta * m.f1 * m.f2));
}

double outage_independent(const AvgSnrPair& snrs, const OutageQuery& q)
{
    const Marginals m = marginals(snrs, q);
    return to_probability(m.f1 + m.s1 * m.f2);
}

double outage_closed_form(const DependenceModel& model, const AvgSnrPair& snrs, const OutageQuery& q)
{
    switch (model.family()) {
    case Family::Independence: return outage_independent(snrs, q);
    case Family::LowerFrechet: return outage_lower_fh(snrs, q);
    case Family::UpperFrechet: return outage_upper_fh(snrs, q);
    case Family::Frank: return outage_frank(snrs, q, *model.parameter());
    case Family::FGM: return outage_fgm(snrs, q, *model.parameter());
    }
    return outage_generic(model, snrs, q);
}

} // namespace ddmac
