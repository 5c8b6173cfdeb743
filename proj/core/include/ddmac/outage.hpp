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

#include "ddmac/dependence.hpp"
#include "ddmac/fading.hpp"

namespace ddmac {

struct Thresholds
{
    double beta1;
    double beta2;
};

/// beta_i = d_i^alpha (2^{2 Ro} - 1): the SNR each user needs so that the
/// sum-capacity bottleneck reaches rate Ro (bits per channel use).
Thresholds beta_thresholds(const Geometry& geometry, double rate);

/// A target rate together with the SNR thresholds it induces at a geometry.
class OutageQuery
{
public:
    OutageQuery(const Geometry& geometry, double rate);

    /// Query from explicit thresholds, for callers that work in threshold space.
    static OutageQuery from_thresholds(double beta1, double beta2);

    double rate() const noexcept { return rate_; }
    double beta1() const noexcept { return beta_.beta1; }
    double beta2() const noexcept { return beta_.beta2; }

private:
    OutageQuery(double rate, Thresholds beta) noexcept : rate_(rate), beta_(beta) {}

    double rate_;
    Thresholds beta_;
};

/// 1 - Chat(e^{-beta1/gbar1}, e^{-beta2/gbar2}) for any copula; the reference
/// every family-specific form below must agree with.
double outage_generic(const DependenceModel& model, const AvgSnrPair& snrs, const OutageQuery& q);

/// Countermonotone fading: 1 - max(s1 + s2 - 1, 0).
double outage_lower_fh(const AvgSnrPair& snrs, const OutageQuery& q);

/// Comonotone fading: 1 - min(s1, s2).
double outage_upper_fh(const AvgSnrPair& snrs, const OutageQuery& q);

/// Frank fading: 2 - s1 - s2 + (1/theta) ln[1 + (e^{-theta(1-s1)} - 1)(e^{-theta(1-s2)} - 1) / (e^{-theta} - 1)].
/// Throws DomainError for theta == 0.
double outage_frank(const AvgSnrPair& snrs, const OutageQuery& q, double theta);

/// FGM fading: 1 - s1 s2 (1 + theta (1 - s1)(1 - s2)). Throws DomainError for |theta| > 1.
double outage_fgm(const AvgSnrPair& snrs, const OutageQuery& q, double theta);

/// Independent fading: 1 - s1 s2.
double outage_independent(const AvgSnrPair& snrs, const OutageQuery& q);

/// Dispatches to the family-specific closed form.
double outage_closed_form(const DependenceModel& model, const AvgSnrPair& snrs, const OutageQuery& q);

} // namespace ddmac
