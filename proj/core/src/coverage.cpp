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

#include "ddmac/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

#include "ddmac/errors.hpp"
#include "ddmac/specfun.hpp"
#include "quadrature.hpp"

namespace ddmac {

namespace {

constexpr double kTruncation = 40.0;

using ScaledEi = double (*)(double);

// Each term has the shape -scale * e^{x} Ei(-x) / ln 2 with
// x = pl * rate and rate the total exponential decay of the inner weight.
FgmTerms terms_with(const AvgSnrPair& snrs, double pl1, double pl2, ScaledEi scaled_ei)
{
    const double g1 = snrs.first();
    const double g2 = snrs.second();
    const double p = g1 * g2;
    const double r11 = (g1 + g2) / p;
    const double r21 = (2.0 * g1 + g2) / p; // weight e^{-g1/gbar1 - 2 g2/gbar2}
    const double r12 = (g1 + 2.0 * g2) / p; // weight e^{-2 g1/gbar1 - g2/gbar2}
    const double r22 = 2.0 * r11;
    const auto term = [scaled_ei](double coeff, double x) { return -coeff * scaled_ei(x) / std::numbers::ln2; };

    FgmTerms t{};
    t.a1 = term(g2 / (2.0 * (g1 + g2)), pl1 * r11);
    t.a2 = term(g2 / (4.0 * (2.0 * g1 + g2)), pl1 * r21);
    t.a3 = term(g2 / (2.0 * (g1 + 2.0 * g2)), pl1 * r12);
    t.a4 = term(g2 / (8.0 * (g1 + g2)), pl1 * r22);
    t.b1 = term(g1 / (2.0 * (g1 + g2)), pl2 * r11);
    t.b2 = term(g1 / (2.0 * (2.0 * g1 + g2)), pl2 * r21);
    t.b3 = term(g1 / (4.0 * (g1 + 2.0 * g2)), pl2 * r12);
    t.b4 = term(g1 / (8.0 * (g1 + g2)), pl2 * r22);
    return t;
}

void require_fgm_theta(double theta)
{
    if (!(theta >= -1.0 && theta <= 1.0)) throw DomainError("FGM parameter must lie in [-1, 1]");
}

void require_path_loss(double pl1, double pl2)
{
    if (!(pl1 > 0.0 && pl2 > 0.0 && std::isfinite(pl1) && std::isfinite(pl2)))
        throw DomainError("path loss must be positive and finite");
}

// Distance-normalised SNRs: min(g1/pl1, g2/pl2) is the min of two exponentials
// with these means, coupled by the same copula.
AvgSnrPair normalised(const AvgSnrPair& snrs, const Geometry& geometry)
{
    return AvgSnrPair(snrs.first() / geometry.path_loss1(), snrs.second() / geometry.path_loss2());
}

double half_log2_1p(double x)
{
    return 0.5 * std::log1p(x) / std::numbers::ln2;
}

} // namespace

double FgmTerms::combine(double theta) const noexcept
{
    return a1 + theta * (a1 - 2.0 * a2 - 2.0 * a3 + 4.0 * a4) + b1 + theta * (b1 - 2.0 * b2 - 2.0 * b3 + 4.0 * b4);
}

FgmTerms fgm_terms(const AvgSnrPair& snrs, double path_loss1, double path_loss2)
{
    require_path_loss(path_loss1, path_loss2);
    return terms_with(snrs, path_loss1, path_loss2, &exp_ei_neg);
}

FgmTerms fgm_terms_approx(const AvgSnrPair& snrs, double path_loss1, double path_loss2)
{
    require_path_loss(path_loss1, path_loss2);
    return terms_with(snrs, path_loss1, path_loss2, &exp_ei_neg_approx);
}

double sum_rate_quadrature(const DependenceModel& model, const AvgSnrPair& snrs, const Geometry& geometry)
{
    if (!model.has_density()) throw NoDensity("copula " + model.label() + " has no density");
    const AvgSnrPair eff = normalised(snrs, geometry);
    const double g1 = eff.first();
    const double g2 = eff.second();

    constexpr double inner_rel = 1e-11;
    constexpr double inner_abs = 1e-15;
    constexpr double outer_rel = 1e-10;
    constexpr double outer_abs = 1e-15;

    // Scaled coordinates u = x / g1, v = y / g2 keep the density O(1) for any SNR.
    const auto density = [&](double u, double v) {
        const double w = std::exp(-u - v);
        if (w == 0.0) return 0.0;
        return copula_density(model, UnitSquarePoint(-std::expm1(-u), -std::expm1(-v))) * w;
    };
    // x < y: the first user is the bottleneck.
    const auto first_limited = [&](double u) {
        const double v0 = u * g1 / g2;
        if (v0 >= kTruncation) return 0.0;
        const double mass = detail::integrate([&](double v) { return density(u, v); }, v0, kTruncation, inner_rel,
                                              inner_abs, "inner integral, first user limited");
        return half_log2_1p(g1 * u) * mass;
    };
    // y <= x: the second user is the bottleneck.
    const auto second_limited = [&](double v) {
        const double u0 = v * g2 / g1;
        if (u0 >= kTruncation) return 0.0;
        const double mass = detail::integrate([&](double u) { return density(u, v); }, u0, kTruncation, inner_rel,
                                              inner_abs, "inner integral, second user limited");
        return half_log2_1p(g2 * v) * mass;
    };

    // log2(1 + g t) bends at t ~ 1/g; decade-wide panels from there keep
    // large SNRs within the bisection budget.
    const auto outer = [&](const auto& f, double snr, double upper, const char* what) {
        double total = 0.0;
        double a = 0.0;
        for (double b = std::min(upper, 1.0 / snr); a < upper; b = std::min(upper, 10.0 * b)) {
            total += detail::integrate(f, a, b, outer_rel, outer_abs, what);
            a = b;
        }
        return total;
    };
    return outer(first_limited, g1, kTruncation * std::min(1.0, g2 / g1), "first user limited")
           + outer(second_limited, g2, kTruncation * std::min(1.0, g1 / g2), "second user limited");
}

double sum_rate_fgm_exact(const AvgSnrPair& snrs, const Geometry& geometry, double theta)
{
    require_fgm_theta(theta);
    return fgm_terms(normalised(snrs, geometry), 1.0, 1.0).combine(theta);
}

double sum_rate_fgm_approx(const AvgSnrPair& snrs, const Geometry& geometry, double theta)
{
    require_fgm_theta(theta);
    return fgm_terms_approx(normalised(snrs, geometry), 1.0, 1.0).combine(theta);
}

double sum_rate_fgm_approx_as_printed(const AvgSnrPair& snrs, const Geometry& geometry, double theta)
{
    require_fgm_theta(theta);
    const double g1 = snrs.first();
    const double g2 = snrs.second();
    const double p = g1 * g2;
    const double pl1 = geometry.path_loss1();
    const double pl2 = geometry.path_loss2();
    const double c = 1.0 - 16.0 / (std::numbers::pi * std::numbers::pi);
    const auto e = [c](double x) { return std::exp(x * c); };

    const double e1 = e(pl1 * (g1 + g2) / p);
    const double e2 = e(pl2 * (g1 + g2) / p);
    const double first = (g2 * e1 + g1 * e2) / (2.0 * (g1 + g2));
    const double bracket = (g2 * e1 * (1.0 + e1) + g1 * e2 * (1.0 + e2)) / (2.0 * (g1 + g2))
                           - (g2 * e(pl1 * (2.0 * g1 + g2) / p) + g1 * e(pl2 * (2.0 * g1 + g2) / p)) / (2.0 * g1 + g2)
                           - (2.0 * g2 * e(pl1 * (g1 + 2.0 * g2) / p) + g1 * e(pl2 * (g1 + 2.0 * g2) / p))
                                 / (2.0 * (g1 + 2.0 * g2));
    return std::sqrt(std::numbers::pi) / (2.0 * std::numbers::ln2) * (first + theta * bracket);
}

std::string_view to_string(RateMethod method) noexcept
{
    switch (method) {
    case RateMethod::Quadrature: return "quadrature";
    case RateMethod::Exact: return "exact";
    case RateMethod::Approx: return "approx";
    }
    return "unknown";
}

RateMethod parse_rate_method(std::string_view name)
{
    if (name == "quadrature") return RateMethod::Quadrature;
    if (name == "exact") return RateMethod::Exact;
    if (name == "approx") return RateMethod::Approx;
    throw DomainError("unknown rate method '" + std::string(name) + "'");
}

double sum_rate(const DependenceModel& model, const AvgSnrPair& snrs, const Geometry& geometry, RateMethod method)
{
    if (method == RateMethod::Quadrature) return sum_rate_quadrature(model, snrs, geometry);

    double theta = 0.0;
    if (model.family() == Family::FGM) {
        theta = *model.parameter();
    } else if (model.family() != Family::Independence) {
        throw DomainError("closed-form sum rate is available for FGM and independence only, got " + model.label());
    }
    return method == RateMethod::Exact ? sum_rate_fgm_exact(snrs, geometry, theta)
                                       : sum_rate_fgm_approx(snrs, geometry, theta);
}

void GridSpec::validate() const
{
    if (!(d1_max > 0.0 && d2_max > 0.0 && std::isfinite(d1_max) && std::isfinite(d2_max)))
        throw DomainError("grid extents must be positive and finite");
    if (n1 < 2 || n2 < 2) throw DomainError("grid resolution must be at least 2 per axis");
}

CoverageResult::CoverageResult(GridSpec grid, std::vector<double> rates, double target_rate)
    : grid_(grid), target_rate_(target_rate), rates_(std::move(rates)), covered_(rates_.size(), 0)
{
    grid_.validate();
    if (rates_.size() != grid_.n1 * grid_.n2) throw DomainError("rate table does not match grid size");
    for (std::size_t k = 0; k < rates_.size(); ++k) {
        if (rates_[k] > target_rate_) {
            covered_[k] = 1;
            ++covered_count_;
        }
    }
}

CoverageResult coverage_region(const DependenceModel& model, const AvgSnrPair& snrs, double alpha,
                               double target_rate, const GridSpec& grid, RateMethod method, unsigned threads)
{
    if (!(target_rate > 0.0)) throw DomainError("target rate must be positive");
    grid.validate();
    // Validates alpha before any worker starts.
    (void)Geometry(1.0, 1.0, alpha);

    const std::size_t cells = grid.n1 * grid.n2;
    std::vector<double> rates(cells, 0.0);
    std::exception_ptr failure;
    std::mutex failure_mutex;

    const auto work = [&](std::size_t begin, std::size_t end) {
        try {
            for (std::size_t k = begin; k < end; ++k) {
                const Geometry g(grid.d1_at(k / grid.n2), grid.d2_at(k % grid.n2), alpha);
                rates[k] = sum_rate(model, snrs, g, method);
            }
        } catch (...) {
            const std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(threads, 1, cells);
    if (workers == 1) {
        work(0, cells);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w * cells / workers, (w + 1) * cells / workers);
    }
    if (failure) std::rethrow_exception(failure);
    return CoverageResult(grid, std::move(rates), target_rate);
}

} // namespace ddmac
