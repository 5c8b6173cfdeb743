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
#include <string_view>
#include <vector>

#include "ddmac/dependence.hpp"
#include "ddmac/fading.hpp"

namespace ddmac {

/// The eight Ei-form integrals whose FGM-weighted combination gives the
/// ergodic sum rate. With w_{p,q} = e^{-p g1/gbar1 - q g2/gbar2} / (2 gbar1 gbar2):
///
///   a_k = int_0^inf int_0^{g2}   w log2(1 + g1/pl1) dg1 dg2
///   b_k = int_0^inf int_{g2}^inf w log2(1 + g2/pl2) dg1 dg2
///
/// for (p, q) = (1,1), (1,2), (2,1), (2,2) as k = 1..4, where pl_i is the path
/// loss d_i^alpha. The split is along g1 = g2.
struct FgmTerms
{
    double a1, a2, a3, a4;
    double b1, b2, b3, b4;

    /// a1 + theta (a1 - 2 a2 - 2 a3 + 4 a4) + b1 + theta (b1 - 2 b2 - 2 b3 + 4 b4).
    double combine(double theta) const noexcept;
};

/// Closed forms of the eight terms, using exp_ei_neg.
FgmTerms fgm_terms(const AvgSnrPair& snrs, double path_loss1, double path_loss2);

/// The same eight terms with e^{x} Ei(-x) replaced by its single-exponential approximation.
FgmTerms fgm_terms_approx(const AvgSnrPair& snrs, double path_loss1, double path_loss2);

/// E[1/2 log2(1 + min(g1/d1^alpha, g2/d2^alpha))] by nested adaptive quadrature
/// against the joint SNR density, split along the line where the two arguments
/// of the min coincide. Absolute accuracy about 1e-9.
/// Throws NoDensity for the Frechet bounds and QuadratureFailure when the
/// tolerance cannot be met.
double sum_rate_quadrature(const DependenceModel& model, const AvgSnrPair& snrs, const Geometry& geometry);

/// Exact FGM sum rate from the eight Ei terms. Since the FGM copula is
/// unchanged by rescaling the marginals, the terms are evaluated at the
/// distance-normalised SNRs gbar_i / d_i^alpha with unit path loss, which makes
/// the g1 = g2 split coincide with the switch of the min for any geometry.
double sum_rate_fgm_exact(const AvgSnrPair& snrs, const Geometry& geometry, double theta);

/// sum_rate_fgm_exact with every e^{x} Ei(-x) replaced by -(sqrt(pi)/2) e^{x (1 - 16/pi^2)}.
double sum_rate_fgm_approx(const AvgSnrPair& snrs, const Geometry& geometry, double theta);

/// The closed-form coverage bound exactly as typeset in the source derivation:
/// Ei arguments scale with d_i^alpha (gbar1 + gbar2)/(gbar1 gbar2) and the
/// (2 gbar1 + gbar2) fraction carries coefficient 1 for gbar2. Kept only to
/// quantify how far the typeset expression is from sum_rate_fgm_approx; see ERRATA.md.
double sum_rate_fgm_approx_as_printed(const AvgSnrPair& snrs, const Geometry& geometry, double theta);

enum class RateMethod
{
    Quadrature,
    Exact,
    Approx,
};

std::string_view to_string(RateMethod method) noexcept;
RateMethod parse_rate_method(std::string_view name);

/// Sum rate by the selected method. Exact and Approx accept FGM and
/// Independence models only (DomainError otherwise).
double sum_rate(const DependenceModel& model, const AvgSnrPair& snrs, const Geometry& geometry, RateMethod method);

/// Square region [0, d1_max] x [0, d2_max] sampled at n1 x n2 cell centres.
struct GridSpec
{
    double d1_max;
    double d2_max;
    std::size_t n1;
    std::size_t n2;

    void validate() const;
    double d1_at(std::size_t i) const noexcept { return (static_cast<double>(i) + 0.5) * d1_max / static_cast<double>(n1); }
    double d2_at(std::size_t j) const noexcept { return (static_cast<double>(j) + 0.5) * d2_max / static_cast<double>(n2); }
    double cell_area() const noexcept { return d1_max * d2_max / static_cast<double>(n1 * n2); }
};

class CoverageResult
{
public:
    CoverageResult(GridSpec grid, std::vector<double> rates, double target_rate);

    const GridSpec& grid() const noexcept { return grid_; }
    double target_rate() const noexcept { return target_rate_; }

    /// Sum rate at cell (i, j), i along d1 and j along d2.
    double rate(std::size_t i, std::size_t j) const { return rates_.at(i * grid_.n2 + j); }

    /// Strict comparison: the cell is covered when its sum rate exceeds the target.
    bool in_region(std::size_t i, std::size_t j) const { return covered_.at(i * grid_.n2 + j) != 0; }

    std::size_t covered_cells() const noexcept { return covered_count_; }
    double area() const noexcept { return grid_.cell_area() * static_cast<double>(covered_count_); }

private:
    GridSpec grid_;
    double target_rate_;
    std::vector<double> rates_;
    std::vector<unsigned char> covered_;
    std::size_t covered_count_ = 0;
};

/// Evaluates the sum rate at every cell centre of \p grid, with the receiver at
/// the origin and \p snrs the average SNRs at unit distance. Cells are
/// independent; \p threads only changes wall time, never the result.
CoverageResult coverage_region(const DependenceModel& model, const AvgSnrPair& snrs, double alpha,
                               double target_rate, const GridSpec& grid, RateMethod method,
                               unsigned threads = 1);

} // namespace ddmac
