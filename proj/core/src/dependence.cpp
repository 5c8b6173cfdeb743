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

#include "ddmac/dependence.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <limits>

#include "ddmac/errors.hpp"

namespace ddmac {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_add_exp(double a, double b)
{
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// log(1 - e^{-t}) for t >= 0.
double log_one_minus_exp_neg(double t)
{
    if (t <= 0.0) return kNegInf;
    return t < 0.6931471805599453 ? std::log(-std::expm1(-t)) : std::log1p(-std::exp(-t));
}

// Frank kernels for theta > 0. Negative parameters are handled by the rotation
// C_{-t}(u1, u2) = u1 - C_t(u1, 1 - u2).
//
// With a_i = e^{-t u_i} the Frank denominator 1 - a1 - a2 + a1 a2 - (1 - e^{-t})
// has the cancellation-free form a1 (1 - a2) + a2 (1 - e^{-t(1-u2)}), whose log
// is returned here.
double frank_log_neg_n(double t, double u1, double u2)
{
    return log_add_exp(-t * u1 + log_one_minus_exp_neg(t * u2), -t * u2 + log_one_minus_exp_neg(t * (1.0 - u2)));
}

double frank_cdf_pos(double t, double u1, double u2)
{
    const double x = std::expm1(-t * u1) * std::expm1(-t * u2) / std::expm1(-t);
    if (x > -0.5) return -std::log1p(x) / t;
    return -(frank_log_neg_n(t, u1, u2) - log_one_minus_exp_neg(t)) / t;
}

double frank_density_pos(double t, double u1, double u2)
{
    return std::exp(std::log(t) + log_one_minus_exp_neg(t) - t * (u1 + u2) - 2.0 * frank_log_neg_n(t, u1, u2));
}

double frank_conditional_pos(double t, double u1, double u2)
{
    if (u2 <= 0.0) return 0.0;
    const double h = std::exp(-t * u1 + log_one_minus_exp_neg(t * u2) - frank_log_neg_n(t, u1, u2));
    return std::min(h, 1.0);
}

// Solves h(u2 | u1) = v for theta > 0. With w = e^{-t u2}:
//   w = ((1 - v) e^{-t u1} + v e^{-t}) / (v + (1 - v) e^{-t u1}).
double frank_quantile_pos(double t, double u1, double v)
{
    if (v <= 0.0) return 0.0;
    if (v >= 1.0) return 1.0;
    const double a = std::exp(-t * u1);
    const double one_minus_w = -v * std::expm1(-t) / (v + (1.0 - v) * a);
    double u2;
    if (one_minus_w < 0.5) {
        u2 = -std::log1p(-one_minus_w) / t;
    } else {
        const double log_v = std::log(v);
        const double log_1mv = std::log1p(-v);
        const double log_w = log_add_exp(log_1mv - t * u1, log_v - t) - log_add_exp(log_v, log_1mv - t * u1);
        u2 = -log_w / t;
    }
    return std::clamp(u2, 0.0, 1.0);
}

double fgm_cdf(double theta, double u1, double u2)
{
    return u1 * u2 * (1.0 + theta * (1.0 - u1) * (1.0 - u2));
}

[[noreturn]] void throw_no_density(const DependenceModel& model)
{
    throw NoDensity("copula " + model.label() + " has no density");
}

} // namespace

DependenceModel DependenceModel::frank(double theta)
{
    if (!std::isfinite(theta) || theta == 0.0)
        throw DomainError("Frank parameter must be finite and nonzero");
    if (std::abs(theta) < kFrankIndependenceCutoff) return independence();
    return DependenceModel(Family::Frank, theta);
}

DependenceModel DependenceModel::fgm(double theta)
{
    if (!(theta >= -1.0 && theta <= 1.0)) throw DomainError("FGM parameter must lie in [-1, 1]");
    return DependenceModel(Family::FGM, theta);
}

std::optional<double> DependenceModel::parameter() const noexcept
{
    if (family_ == Family::Frank || family_ == Family::FGM) return theta_;
    return std::nullopt;
}

std::string DependenceModel::label() const
{
    const auto with_parameter = [this](const char* name) {
        char buf[32];
        const auto res = std::to_chars(buf, buf + sizeof buf, theta_);
        return std::string(name) + "(" + std::string(buf, res.ptr) + ")";
    };
    switch (family_) {
    case Family::Independence: return "independence";
    case Family::LowerFrechet: return "lower_fh";
    case Family::UpperFrechet: return "upper_fh";
    case Family::Frank: return with_parameter("frank");
    case Family::FGM: return with_parameter("fgm");
    }
    return "unknown";
}

UnitSquarePoint::UnitSquarePoint(double u1, double u2) : u1_(u1), u2_(u2)
{
    if (!(u1 >= 0.0 && u1 <= 1.0 && u2 >= 0.0 && u2 <= 1.0))
        throw DomainError("unit-square point outside [0,1]^2");
}

double copula_cdf(const DependenceModel& model, UnitSquarePoint p)
{
    const double u1 = p.u1();
    const double u2 = p.u2();
    double c = 0.0;
    switch (model.family()) {
    case Family::Independence: c = u1 * u2; break;
    case Family::LowerFrechet: c = std::max(u1 + u2 - 1.0, 0.0); break;
    case Family::UpperFrechet: c = std::min(u1, u2); break;
    case Family::FGM: c = fgm_cdf(*model.parameter(), u1, u2); break;
    case Family::Frank: {
        const double theta = *model.parameter();
        c = theta > 0.0 ? frank_cdf_pos(theta, u1, u2) : u1 - frank_cdf_pos(-theta, u1, 1.0 - u2);
        break;
    }
    }
    assert(c >= std::max(u1 + u2 - 1.0, 0.0) - 1e-12 && c <= std::min(u1, u2) + 1e-12);
    return c;
}

double copula_density(const DependenceModel& model, UnitSquarePoint p)
{
    const double u1 = p.u1();
    const double u2 = p.u2();
    switch (model.family()) {
    case Family::Independence: return 1.0;
    case Family::FGM: return 1.0 + *model.parameter() * (1.0 - 2.0 * u1) * (1.0 - 2.0 * u2);
    case Family::Frank: {
        const double theta = *model.parameter();
        return theta > 0.0 ? frank_density_pos(theta, u1, u2) : frank_density_pos(-theta, u1, 1.0 - u2);
    }
    case Family::LowerFrechet:
    case Family::UpperFrechet: break;
    }
    throw_no_density(model);
}

double survival_copula(const DependenceModel& model, UnitSquarePoint p)
{
    return p.u1() + p.u2() - 1.0 + copula_cdf(model, UnitSquarePoint(1.0 - p.u1(), 1.0 - p.u2()));
}

double conditional_cdf(const DependenceModel& model, double u1, double u2)
{
    const UnitSquarePoint p(u1, u2);
    switch (model.family()) {
    case Family::Independence: return p.u2();
    case Family::FGM: {
        const double a = *model.parameter() * (1.0 - 2.0 * u1);
        return u2 * (1.0 + a * (1.0 - u2));
    }
    case Family::Frank: {
        const double theta = *model.parameter();
        return theta > 0.0 ? frank_conditional_pos(theta, u1, u2) : 1.0 - frank_conditional_pos(-theta, u1, 1.0 - u2);
    }
    case Family::LowerFrechet:
    case Family::UpperFrechet: break;
    }
    throw_no_density(model);
}

double conditional_quantile(const DependenceModel& model, double u1, double v)
{
    const UnitSquarePoint p(u1, v);
    switch (model.family()) {
    case Family::Independence: return v;
    case Family::LowerFrechet: return 1.0 - u1;
    case Family::UpperFrechet: return u1;
    case Family::FGM: {
        // Root in [0,1] of a u^2 - (1 + a) u + v = 0, written in conjugate form
        // so that a -> 0 reduces smoothly to u = v.
        const double a = *model.parameter() * (1.0 - 2.0 * u1);
        if (v <= 0.0) return 0.0;
        const double b = 1.0 + a;
        const double root = 2.0 * v / (b + std::sqrt(std::max(b * b - 4.0 * a * v, 0.0)));
        return std::clamp(root, 0.0, 1.0);
    }
    case Family::Frank: {
        const double theta = *model.parameter();
        return theta > 0.0 ? frank_quantile_pos(theta, u1, v) : 1.0 - frank_quantile_pos(-theta, u1, 1.0 - v);
    }
    }
    return v;
}

UnitSquarePoint sample_pair(const DependenceModel& model, const CounterRng& rng, std::uint64_t index)
{
    const double u1 = rng.uniform(2 * index);
    const double v = rng.uniform(2 * index + 1);
    return UnitSquarePoint(u1, conditional_quantile(model, u1, v));
}

std::vector<UnitSquarePoint> sample_pairs(const DependenceModel& model, std::size_t n, std::uint64_t seed)
{
    if (n == 0) throw DomainError("sample count must be at least 1");
    const CounterRng rng(seed);
    std::vector<UnitSquarePoint> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(sample_pair(model, rng, i));
    return out;
}

} // namespace ddmac
