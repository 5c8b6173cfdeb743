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

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "ddmac/errors.hpp"

namespace ddmac::detail {

inline constexpr std::size_t kMaxSegments = 4096;

/// Globally adaptive 61-point Gauss-Kronrod over [a, b]: the segment with the
/// largest error estimate is halved until the total error is within
/// rel_tol * |I| or abs_tol. Fails if the segment budget runs out first.
///
/// Each segment is mapped to [-1, 1] before calling the Boost rule, whose
/// adaptive driver (1.74) leaves error estimates unscaled by the half-width.
template <class F>
double integrate(F&& f, double a, double b, double rel_tol, double abs_tol, const char* what)
{
    using Rule = boost::math::quadrature::gauss_kronrod<double, 61>;
    if (!(b > a)) return 0.0;

    struct Segment {
        double a, b, value, error;
        bool operator<(const Segment& other) const { return error < other.error; }
    };
    const auto rule = [&](double lo, double hi) {
        const double half = 0.5 * (hi - lo);
        const double mid = 0.5 * (hi + lo);
        double error = 0.0;
        const double value = Rule::integrate([&](double x) { return f(mid + half * x); }, -1.0, 1.0, 0, 0.0, &error);
        return Segment{lo, hi, half * value, half * error};
    };

    std::priority_queue<Segment> segments;
    segments.push(rule(a, b));
    double value = segments.top().value;
    double error = segments.top().error;
    const auto converged = [&] { return error <= rel_tol * std::abs(value) || error <= abs_tol; };
    while (!converged() && segments.size() < kMaxSegments) {
        const Segment worst = segments.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) break;
        segments.pop();
        const Segment left = rule(worst.a, mid);
        const Segment right = rule(mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        segments.push(left);
        segments.push(right);
    }
    // Running sums drift; settle the final figures from the segments.
    value = 0.0;
    error = 0.0;
    for (auto rest = std::move(segments); !rest.empty(); rest.pop()) {
        value += rest.top().value;
        error += rest.top().error;
    }
    if (!converged()) throw QuadratureFailure(std::string("quadrature did not converge: ") + what, error);
    return value;
}

} // namespace ddmac::detail
