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

namespace ddmac {

/// Euler-Mascheroni constant, 20 significant digits.
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Ei(-x) for x > 0. Negative, increasing towards 0, with a logarithmic
/// singularity at x -> 0+. Throws DomainError for x <= 0 or NaN.
///
/// Uses the power series below kEiSeriesCutoff and a continued fraction for
/// E1 above it; relative error is about 1e-14 over (0, 700].
double ei_neg(double x);

/// e^{x} Ei(-x) for x > 0, evaluated without forming e^{x} so that it stays
/// finite where Ei(-x) underflows. This is the combination that appears in the
/// closed-form expectations of log(1 + SNR).
double exp_ei_neg(double x);

/// -(sqrt(pi)/2) e^{-16 x / pi^2}: a single-exponential approximation of Ei(-x).
double ei_neg_approx(double x);

/// e^{x} times ei_neg_approx(x).
double exp_ei_neg_approx(double x);

namespace detail {

inline constexpr double kEiSeriesCutoff = 6.0;

/// gamma + ln x + sum_{k>=1} (-x)^k / (k k!), usable for any x > 0 but only
/// accurate for moderate x.
double ei_neg_series(double x);

/// e^{x} E1(x) by modified Lentz evaluation of the continued fraction
/// 1/(x + 1 - 1^2/(x + 3 - 2^2/(x + 5 - ...))). Converges for x > 0, fast for x >~ 1.
double exp_e1_continued_fraction(double x);

} // namespace detail

} // namespace ddmac
