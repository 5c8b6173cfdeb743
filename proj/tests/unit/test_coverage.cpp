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

#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "ddmac/coverage.hpp"
#include "ddmac/errors.hpp"
#include "ddmac/specfun.hpp"

using namespace ddmac;

namespace {

constexpr double kLn2 = std::numbers::ln2;

template <class F>
double gk(F f, double a, double b, double tol = 1e-12, unsigned depth = 15)
{
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, depth, tol);
}

// Defining double integrals of the eight terms, straight from their
// exponential weights (no copula code involved).
struct TermOracle
{
    double g1, g2, pl1, pl2;

    double weight(int p, int q, double x1, double x2) const
    {
        return std::exp(-p * x1 / g1 - q * x2 / g2) / (2.0 * g1 * g2);
    }

    // each exponential is negligible past 50 of its own decay lengths
    double a(int p, int q) const
    {
        const double t1 = 50.0 * g1 / p;
        const double t2 = 50.0 * g2 / q;
        return gk(
            [&](double x2) {
                return gk([&](double x1) { return weight(p, q, x1, x2) * std::log2(1.0 + x1 / pl1); }, 0.0,
                          std::min(x2, t1), 1e-10, 8);
            },
            0.0, t2, 1e-10, 8);
    }

    double b(int p, int q) const
    {
        const double t1 = 50.0 * g1 / p;
        const double t2 = 50.0 * g2 / q;
        return gk(
            [&](double x2) {
                return std::log2(1.0 + x2 / pl2)
                       * gk([&](double x1) { return weight(p, q, x1, x2); }, x2, x2 + t1, 1e-10, 8);
            },
            0.0, t2, 1e-10, 8);
    }
};

double rel(double a, double b)
{
    return std::abs(a - b) / std::abs(b);
}

} // namespace

TEST(FgmTerms, FirstTermExample)
{
    // -e^2 Ei(-2) / (4 ln 2), mpmath
    EXPECT_NEAR(fgm_terms(AvgSnrPair(1.0, 1.0), 1.0, 1.0).a1, 0.130321750928976719, 1e-14);
}

TEST(FgmTerms, EachTermMatchesItsDefiningIntegral)
{
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> log_gbar(std::log(0.2), std::log(50.0));
    std::uniform_real_distribution<double> log_pl(std::log(0.05), std::log(20.0));
    for (int trial = 0; trial < 20; ++trial) {
        const TermOracle o{std::exp(log_gbar(rng)), std::exp(log_gbar(rng)), std::exp(log_pl(rng)),
                           std::exp(log_pl(rng))};
        const FgmTerms t = fgm_terms(AvgSnrPair(o.g1, o.g2), o.pl1, o.pl2);
        EXPECT_LE(rel(t.a1, o.a(1, 1)), 1e-6);
        EXPECT_LE(rel(t.a2, o.a(1, 2)), 1e-6);
        EXPECT_LE(rel(t.a3, o.a(2, 1)), 1e-6);
        EXPECT_LE(rel(t.a4, o.a(2, 2)), 1e-6);
        EXPECT_LE(rel(t.b1, o.b(1, 1)), 1e-6);
        EXPECT_LE(rel(t.b2, o.b(1, 2)), 1e-6);
        EXPECT_LE(rel(t.b3, o.b(2, 1)), 1e-6);
        EXPECT_LE(rel(t.b4, o.b(2, 2)), 1e-6);
    }
}

TEST(FgmTerms, PrintedSecondTermCoefficientIsOffByTwo)
{
    // The typeset a2 has 2(2 gbar1 + gbar2) in the denominator; the defining
    // integral has 4(2 gbar1 + gbar2).
    const TermOracle o{1.3, 2.1, 0.8, 1.7};
    const double x = o.pl1 * (2.0 * o.g1 + o.g2) / (o.g1 * o.g2);
    const double printed = -o.g2 * exp_ei_neg(x) / (2.0 * (2.0 * o.g1 + o.g2) * kLn2);
    EXPECT_NEAR(printed / o.a(1, 2), 2.0, 1e-6);
}

TEST(IntegralIdentities, AntiderivativeDefiniteAndEiTransform)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.1, 4.0);
    for (int trial = 0; trial < 10; ++trial) {
        const double zeta = u(rng);
        const double eta = u(rng);
        const double kappa = u(rng);
        const double x0 = 0.25 * u(rng);
        const double x1 = x0 + u(rng);

        const auto antiderivative = [&](double x) {
            return (std::exp(zeta / eta) * ei_neg(zeta / eta + zeta * x) - std::exp(-zeta * x) * std::log1p(eta * x))
                   / (zeta * kLn2);
        };
        const double direct = gk([&](double x) { return std::exp(-zeta * x) * std::log2(1.0 + eta * x); }, x0, x1);
        EXPECT_LE(rel(antiderivative(x1) - antiderivative(x0), direct), 1e-8);

        const double tail = 60.0 / zeta;
        const double definite = gk([&](double x) { return std::exp(-zeta * x) * std::log2(1.0 + eta * x); }, 0.0, tail);
        EXPECT_LE(rel(-std::exp(zeta / eta) * ei_neg(zeta / eta) / (zeta * kLn2), definite), 1e-8);

        const double transform = gk([&](double x) { return std::exp(-zeta * x) * ei_neg(kappa + eta * x); }, 0.0, tail);
        const double closed = (ei_neg(kappa) - std::exp(zeta * kappa / eta) * ei_neg((zeta + eta) * kappa / eta)) / zeta;
        EXPECT_LE(rel(closed, transform), 1e-8);
    }
}

TEST(SumRateQuadrature, IndependentOneDimensionalReduction)
{
    // min of two i.i.d. exponentials with mean 2 is exponential with mean 1:
    // E[1/2 log2(1 + Z)] = -e Ei(-1) / (2 ln 2), mpmath
    constexpr double expected = 0.430173691135442976;
    for (double alpha : {2.5, 3.5}) {
        EXPECT_NEAR(sum_rate_quadrature(DependenceModel::independence(), AvgSnrPair(2.0, 2.0), Geometry(1.0, 1.0, alpha)),
                    expected, 1e-8);
    }
    const double reduced = gk([](double z) { return std::exp(-z) * 0.5 * std::log2(1.0 + z); }, 0.0, 60.0);
    EXPECT_NEAR(reduced, expected, 1e-12);
}

TEST(SumRateQuadrature, FgmZeroIsIndependence)
{
    const AvgSnrPair s(1.7, 0.4);
    const Geometry g(0.9, 1.3, 3.1);
    EXPECT_EQ(sum_rate_quadrature(DependenceModel::fgm(0.0), s, g),
              sum_rate_quadrature(DependenceModel::independence(), s, g));
}

TEST(SumRateQuadrature, VanishesWithSnr)
{
    EXPECT_LT(sum_rate_quadrature(DependenceModel::frank(4.0), AvgSnrPair(1e-7, 1e-7), Geometry(1.0, 1.0, 3.0)), 1e-6);
    EXPECT_THROW(sum_rate_quadrature(DependenceModel::upper_frechet(), AvgSnrPair(1.0, 1.0), Geometry(1.0, 1.0, 3.0)),
                 NoDensity);
}

TEST(SumRateQuadrature, LargeNormalisedSnr)
{
    // gbar / d^alpha reaches ~1e7 at the corner of a coverage grid.
    for (double d : {0.02, 0.005}) {
        const Geometry g(d, 2.0 * d, 3.5);
        for (double theta : {-1.0, 1.0}) {
            const double exact = sum_rate_fgm_exact(AvgSnrPair(10.0, 10.0), g, theta);
            EXPECT_NEAR(sum_rate_quadrature(DependenceModel::fgm(theta), AvgSnrPair(10.0, 10.0), g), exact,
                        1e-9 * exact);
        }
    }
}

TEST(SumRateFgmExact, Examples)
{
    EXPECT_NEAR(sum_rate_fgm_exact(AvgSnrPair(2.0, 2.0), Geometry(1.0, 1.0, 3.5), 0.0), 0.430173691135442976, 1e-12);
    const AvgSnrPair s(1.0, 4.0);
    const Geometry g(1.0, 2.0, 3.5);
    for (double theta : {-1.0, 1.0}) {
        EXPECT_NEAR(sum_rate_fgm_exact(s, g, theta), sum_rate_quadrature(DependenceModel::fgm(theta), s, g), 1e-6)
            << theta;
    }
    EXPECT_THROW(sum_rate_fgm_exact(s, g, -1.01), DomainError);
}

TEST(SumRateFgmExact, AgreesWithQuadratureOnGrid)
{
    const Geometry geometries[] = {Geometry(1.0, 1.0, 3.5), Geometry(0.8, 1.5, 3.0)};
    for (const auto& g : geometries) {
        for (double g1 : {0.5, 5.0, 50.0}) {
            for (double g2 : {0.5, 5.0, 50.0}) {
                const AvgSnrPair s(g1, g2);
                for (double theta : {-1.0, 0.0, 1.0}) {
                    const double quad = sum_rate_quadrature(DependenceModel::fgm(theta), s, g);
                    EXPECT_LE(rel(sum_rate_fgm_exact(s, g, theta), quad), 1e-6) << g1 << " " << g2 << " " << theta;
                }
            }
        }
    }
}

TEST(SumRateFgmApprox, Examples)
{
    // (sqrt(pi) / (2 ln 2)) (1/2) e^{1 - 16/pi^2}, mpmath
    const double approx = sum_rate_fgm_approx(AvgSnrPair(2.0, 2.0), Geometry(1.0, 1.0, 3.5), 0.0);
    EXPECT_NEAR(approx, 0.343504373273632602, 1e-12);
    EXPECT_NEAR(approx / 0.430173691135442976 - 1.0, -0.2015, 1e-3);

    const AvgSnrPair s(3.0, 3.0);
    const Geometry g(1.2, 1.2, 3.5);
    EXPECT_NEAR(sum_rate_fgm_approx(s, g, 0.0), sum_rate_fgm_approx_as_printed(s, g, 0.0), 1e-14);
    EXPECT_GT(std::abs(sum_rate_fgm_approx(s, g, 1.0) - sum_rate_fgm_approx_as_printed(s, g, 1.0)), 1e-4);
}

TEST(SumRate, SwapSymmetry)
{
    const AvgSnrPair s(1.3, 6.0);
    const AvgSnrPair swapped(6.0, 1.3);
    const Geometry g(0.7, 1.4, 3.2);
    const Geometry gs(1.4, 0.7, 3.2);
    for (double theta : {-1.0, 0.4, 1.0}) {
        EXPECT_NEAR(sum_rate_fgm_exact(s, g, theta), sum_rate_fgm_exact(swapped, gs, theta), 1e-13);
        EXPECT_NEAR(sum_rate_fgm_approx(s, g, theta), sum_rate_fgm_approx(swapped, gs, theta), 1e-13);
        // the typeset form mixes path losses across users and is not symmetric
        EXPECT_GT(std::abs(sum_rate_fgm_approx_as_printed(s, g, theta)
                           - sum_rate_fgm_approx_as_printed(swapped, gs, theta)),
                  1e-3);
        EXPECT_NEAR(sum_rate_quadrature(DependenceModel::fgm(theta), s, g),
                    sum_rate_quadrature(DependenceModel::fgm(theta), swapped, gs), 1e-9);
    }
    EXPECT_NEAR(sum_rate_quadrature(DependenceModel::frank(-7.0), s, g),
                sum_rate_quadrature(DependenceModel::frank(-7.0), swapped, gs), 1e-9);
}

TEST(SumRate, PositiveDependenceHelpsWithEqualSnrs)
{
    for (double gbar : {0.3, 3.0, 30.0}) {
        for (double d2 : {0.8, 1.0, 1.3}) {
            const Geometry g(1.0, d2, 3.5);
            double prev = -1.0;
            for (int k = -10; k <= 10; ++k) {
                const double r = sum_rate_fgm_exact(AvgSnrPair(gbar, gbar), g, k / 10.0);
                EXPECT_GE(r, prev);
                prev = r;
            }
        }
    }
}

TEST(SumRate, MethodDispatch)
{
    const AvgSnrPair s(2.0, 2.0);
    const Geometry g(1.0, 1.0, 3.5);
    EXPECT_EQ(parse_rate_method("exact"), RateMethod::Exact);
    EXPECT_EQ(to_string(RateMethod::Approx), "approx");
    EXPECT_THROW(parse_rate_method("simpson"), DomainError);
    EXPECT_EQ(sum_rate(DependenceModel::independence(), s, g, RateMethod::Exact), sum_rate_fgm_exact(s, g, 0.0));
    EXPECT_THROW(sum_rate(DependenceModel::frank(3.0), s, g, RateMethod::Exact), DomainError);
    EXPECT_NO_THROW(sum_rate(DependenceModel::frank(3.0), s, g, RateMethod::Quadrature));
}

TEST(CoverageRegion, ExtremeTargets)
{
    const GridSpec grid{3.0, 3.0, 6, 5};
    const AvgSnrPair s(10.0, 10.0);
    const auto all = coverage_region(DependenceModel::fgm(0.5), s, 3.5, 1e-9, grid, RateMethod::Exact);
    EXPECT_EQ(all.covered_cells(), 30u);
    EXPECT_NEAR(all.area(), 9.0, 1e-12);
    const auto none = coverage_region(DependenceModel::fgm(0.5), s, 3.5, 100.0, grid, RateMethod::Exact);
    EXPECT_EQ(none.covered_cells(), 0u);
    EXPECT_EQ(none.area(), 0.0);
    EXPECT_THROW(coverage_region(DependenceModel::fgm(0.5), s, 3.5, 0.0, grid, RateMethod::Exact), DomainError);
    EXPECT_THROW(coverage_region(DependenceModel::fgm(0.5), s, 3.5, 1.0, GridSpec{1.0, 1.0, 1, 4}, RateMethod::Exact),
                 DomainError);
}

TEST(CoverageRegion, StrictComparisonAtCellCentres)
{
    const GridSpec grid{2.0, 2.0, 2, 2};
    const AvgSnrPair s(5.0, 5.0);
    const double at_centre = sum_rate_fgm_exact(s, Geometry(0.5, 0.5, 3.5), 0.0);
    const auto r = coverage_region(DependenceModel::independence(), s, 3.5, at_centre, grid, RateMethod::Exact);
    EXPECT_EQ(r.rate(0, 0), at_centre);
    EXPECT_FALSE(r.in_region(0, 0));
}

TEST(CoverageRegion, MonotoneNestedAndOrderedByDependence)
{
    const GridSpec grid{2.0, 2.0, 30, 30};
    const AvgSnrPair s(10.0, 10.0);
    const double target = 0.5;
    const auto pos = coverage_region(DependenceModel::fgm(1.0), s, 3.5, target, grid, RateMethod::Exact);
    const auto ind = coverage_region(DependenceModel::fgm(0.0), s, 3.5, target, grid, RateMethod::Exact);
    const auto neg = coverage_region(DependenceModel::fgm(-1.0), s, 3.5, target, grid, RateMethod::Exact);
    const auto steeper = coverage_region(DependenceModel::fgm(0.0), s, 4.0, target, grid, RateMethod::Exact);
    const auto harder = coverage_region(DependenceModel::fgm(0.0), s, 3.5, 0.7, grid, RateMethod::Exact);
    EXPECT_GE(pos.area(), ind.area());
    EXPECT_GE(ind.area(), neg.area());
    EXPECT_GT(pos.area(), neg.area());
    for (std::size_t i = 0; i < grid.n1; ++i) {
        for (std::size_t j = 0; j < grid.n2; ++j) {
            if (neg.in_region(i, j)) EXPECT_TRUE(ind.in_region(i, j));
            if (ind.in_region(i, j)) EXPECT_TRUE(pos.in_region(i, j));
            if (steeper.in_region(i, j)) EXPECT_TRUE(ind.in_region(i, j));
            if (harder.in_region(i, j)) EXPECT_TRUE(ind.in_region(i, j));
            if (ind.in_region(i, j)) {
                for (std::size_t a = 0; a <= i; ++a)
                    for (std::size_t b = 0; b <= j; ++b) EXPECT_TRUE(ind.in_region(a, b));
            }
            // symmetric parameters give a region symmetric about d1 = d2
            EXPECT_EQ(ind.in_region(i, j), ind.in_region(j, i));
        }
    }
}

TEST(CoverageRegion, ThreadCountDoesNotChangeResult)
{
    const GridSpec grid{2.0, 3.0, 7, 9};
    const AvgSnrPair s(4.0, 8.0);
    const auto one = coverage_region(DependenceModel::fgm(-0.3), s, 3.0, 0.4, grid, RateMethod::Exact, 1);
    const auto four = coverage_region(DependenceModel::fgm(-0.3), s, 3.0, 0.4, grid, RateMethod::Exact, 4);
    for (std::size_t i = 0; i < grid.n1; ++i)
        for (std::size_t j = 0; j < grid.n2; ++j) EXPECT_EQ(one.rate(i, j), four.rate(i, j));
}

TEST(CoverageRegion, QuadratureMethodMatchesExact)
{
    const GridSpec grid{2.0, 2.0, 4, 4};
    const AvgSnrPair s(10.0, 5.0);
    const auto quad = coverage_region(DependenceModel::fgm(0.7), s, 3.5, 0.3, grid, RateMethod::Quadrature);
    const auto exact = coverage_region(DependenceModel::fgm(0.7), s, 3.5, 0.3, grid, RateMethod::Exact);
    for (std::size_t i = 0; i < grid.n1; ++i)
        for (std::size_t j = 0; j < grid.n2; ++j) EXPECT_NEAR(quad.rate(i, j), exact.rate(i, j), 1e-8);
}
