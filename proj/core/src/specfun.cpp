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

#include "ddmac/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "ddmac/errors.hpp"

namespace ddmac {

namespace {

void require_positive(double x)
{
    if (!(x > 0.0)) throw DomainError("Ei(-x) requires x > 0");
}

constexpr int kMaxIterations = 500;

} // namespace

namespace detail {

double ei_neg_series(double x)
{
    // Accumulated in long double: at x = 6 the largest term is ~65 while the
    // result is ~-3.6e-4.
    long double term = 1.0L;
    long double sum = 0.0L;
    const long double lx = x;
    for (int k = 1; k < kMaxIterations; ++k) {
        term *= -lx / k;
        const long double add = term / k;
        sum += add;
        if (std::fabs(add) <= std::numeric_limits<long double>::epsilon() * std::fabs(sum)) break;
    }
    return static_cast<double>(static_cast<long double>(kEulerGamma) + std::log(lx) + sum);
}

double exp_e1_continued_fraction(double x)
{
    constexpr double tiny = 1e-300;
    constexpr double eps = 1e-16;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxIterations; ++i) {
        const double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < eps) return h;
    }
    throw QuadratureFailure("continued fraction for E1 did not converge", std::abs(h));
}

} // namespace detail

double ei_neg(double x)
{
    require_positive(x);
    if (x <= detail::kEiSeriesCutoff) return detail::ei_neg_series(x);
    return -std::exp(-x) * detail::exp_e1_continued_fraction(x);
}

double exp_ei_neg(double x)
{
    require_positive(x);
    if (x <= detail::kEiSeriesCutoff) return std::exp(x) * detail::ei_neg_series(x);
    return -detail::exp_e1_continued_fraction(x);
}

double ei_neg_approx(double x)
{
    require_positive(x);
    return -0.5 * std::sqrt(std::numbers::pi) * std::exp(-16.0 * x / (std::numbers::pi * std::numbers::pi));
}

double exp_ei_neg_approx(double x)
{
    require_positive(x);
    return -0.5 * std::sqrt(std::numbers::pi) * std::exp(x * (1.0 - 16.0 / (std::numbers::pi * std::numbers::pi)));
}

} // namespace ddmac
