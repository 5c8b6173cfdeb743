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

#include "ddmac/cli/checks.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/expint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "ddmac/cli/csv.hpp"
#include "ddmac/coverage.hpp"
#include "ddmac/dependence.hpp"
#include "ddmac/errors.hpp"
#include "ddmac/montecarlo.hpp"
#include "ddmac/outage.hpp"
#include "ddmac/rng.hpp"
#include "ddmac/specfun.hpp"

namespace ddmac::cli {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// Fixed stream for randomised parameter points; independent of --seed so
// the deterministic suites never change.
constexpr std::uint64_t kParameterStream = 0x5eed'0f'c0ffeeULL;

class Recorder
{
public:
    explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

    void at_most(const std::string& name, double measured, double tol) { add(name, measured, Relation::AtMost, tol); }
    void at_least(const std::string& name, double measured, double tol) { add(name, measured, Relation::AtLeast, tol); }
    void above(const std::string& name, double measured, double tol) { add(name, measured, Relation::Above, tol); }
    void info(const std::string& name, double measured) { add(name, measured, Relation::Info, 0.0); }

    CheckList take() { return std::move(checks_); }

private:
    void add(const std::string& name, double measured, Relation r, double tol)
    {
        checks_.push_back({suite_, name, measured, r, tol});
    }

    std::string suite_;
    CheckList checks_;
};

template <class F>
double gk(F f, double a, double b, double tol, unsigned depth)
{
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, depth, tol);
}

double relative(double value, double reference)
{
    return std::abs(value - reference) / std::abs(reference);
}

std::vector<DependenceModel> reference_models()
{
    return {DependenceModel::independence(), DependenceModel::lower_frechet(), DependenceModel::upper_frechet(),
            DependenceModel::fgm(-1.0),      DependenceModel::fgm(0.5),        DependenceModel::fgm(1.0),
            DependenceModel::frank(-30.0),   DependenceModel::frank(-5.0),     DependenceModel::frank(5.0),
            DependenceModel::frank(30.0)};
}

double unit_grid(int k)
{
    return k / 20.0;
}

double cdf(const DependenceModel& m, double u1, double u2)
{
    return copula_cdf(m, UnitSquarePoint(u1, u2));
}

double sup_over_grid(const auto& f)
{
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i)
        for (int j = 0; j <= 20; ++j) worst = std::max(worst, f(unit_grid(i), unit_grid(j)));
    return worst;
}

// ---------------------------------------------------------------- outage --

struct OutagePoint
{
    AvgSnrPair snrs;
    Geometry geometry;
    double rate;
};

std::vector<OutagePoint> agreement_grid()
{
    const std::array<double, 6> gbars{0.1, 0.5, 1.0, 5.0, 10.0, 50.0};
    const std::array<double, 5> rates{0.1, 0.5, 1.0, 2.0, 4.0};
    const std::array<Geometry, 3> geometries{Geometry(1.0, 1.0, 3.5), Geometry(0.7, 1.6, 3.0),
                                             Geometry(1.4, 0.9, 4.5)};
    std::vector<OutagePoint> pts;
    for (const auto& g : geometries)
        for (double g1 : gbars)
            for (double g2 : gbars)
                for (double r : rates) pts.push_back({AvgSnrPair(g1, g2), g, r});
    return pts;
}

// ---------------------------------------------------------------- coverage --

// Defining double integral of one Ei-form term with weight
// e^{-p x1/g1 - q x2/g2} / (2 g1 g2); first user limited when \p first.
double term_by_quadrature(double g1, double g2, double pl1, double pl2, int p, int q, bool first)
{
    const double t1 = 50.0 * g1 / p;
    const double t2 = 50.0 * g2 / q;
    const auto weight = [&](double x1, double x2) { return std::exp(-p * x1 / g1 - q * x2 / g2) / (2.0 * g1 * g2); };
    if (first) {
        return gk(
            [&](double x2) {
                return gk([&](double x1) { return weight(x1, x2) * std::log2(1.0 + x1 / pl1); }, 0.0,
                          std::min(x2, t1), 1e-10, 8);
            },
            0.0, t2, 1e-10, 8);
    }
    return gk(
        [&](double x2) {
            return std::log2(1.0 + x2 / pl2) * gk([&](double x1) { return weight(x1, x2); }, x2, x2 + t1, 1e-10, 8);
        },
        0.0, t2, 1e-10, 8);
}

double log_uniform(const CounterRng& rng, std::uint64_t counter, double lo, double hi)
{
    return std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * rng.uniform(counter));
}

} // namespace

std::string_view to_string(Relation r) noexcept
{
    switch (r) {
    case Relation::AtMost: return "<=";
    case Relation::AtLeast: return ">=";
    case Relation::Above: return ">";
    case Relation::Info: return "info";
    }
    return "?";
}

bool Check::passed() const noexcept
{
    switch (relation) {
    case Relation::AtMost: return measured <= tolerance;
    case Relation::AtLeast: return measured >= tolerance;
    case Relation::Above: return measured > tolerance;
    case Relation::Info: return true;
    }
    return false;
}

CheckList copula_checks()
{
    Recorder rec("copula");
    for (const auto& m : reference_models()) {
        const std::string tag = "[" + m.label() + "]";

        const double boundary = sup_over_grid([&](double u, double) {
            return std::max({std::abs(cdf(m, u, 0.0)), std::abs(cdf(m, 0.0, u)), std::abs(cdf(m, u, 1.0) - u),
                             std::abs(cdf(m, 1.0, u) - u)});
        });
        rec.at_most("boundary" + tag, boundary, 1e-12);

        double negative_volume = 0.0;
        for (int i = 0; i < 20; ++i) {
            for (int j = 0; j < 20; ++j) {
                const double a1 = unit_grid(i), b1 = unit_grid(i + 1), a2 = unit_grid(j), b2 = unit_grid(j + 1);
                const double vol = cdf(m, b1, b2) - cdf(m, a1, b2) - cdf(m, b1, a2) + cdf(m, a1, a2);
                negative_volume = std::max(negative_volume, -vol);
            }
        }
        rec.at_most("two_increasing" + tag, negative_volume, 1e-12);

        rec.at_most("sandwich" + tag, sup_over_grid([&](double u1, double u2) {
                        const double c = cdf(m, u1, u2);
                        return std::max({0.0, std::max(u1 + u2 - 1.0, 0.0) - c, c - std::min(u1, u2)});
                    }),
                    1e-12);

        rec.at_most("radial_symmetry" + tag, sup_over_grid([&](double u1, double u2) {
                        const UnitSquarePoint p(u1, u2);
                        return std::abs(survival_copula(m, p) - copula_cdf(m, p));
                    }),
                    1e-12);

        if (m.has_density()) {
            double worst = 0.0;
            for (int i = 1; i < 20; ++i) {
                for (int j = 1; j < 20; ++j) {
                    const double u1 = unit_grid(i), v = unit_grid(j);
                    worst = std::max(worst, std::abs(conditional_cdf(m, u1, conditional_quantile(m, u1, v)) - v));
                }
            }
            rec.at_most("conditional_inverse" + tag, worst, 1e-10);
        }
    }

    const auto indep = DependenceModel::independence();
    const auto tiny = DependenceModel::frank(1e-6);
    rec.at_most("frank_limit[1e-06 vs independence]",
                sup_over_grid([&](double u1, double u2) { return std::abs(cdf(tiny, u1, u2) - cdf(indep, u1, u2)); }),
                1e-4);
    const auto pos = DependenceModel::frank(50.0);
    rec.at_most("frank_limit[50 vs upper_fh]",
                sup_over_grid([&](double u1, double u2) { return std::abs(cdf(pos, u1, u2) - std::min(u1, u2)); }),
                0.02);
    const auto neg = DependenceModel::frank(-50.0);
    rec.at_most("frank_limit[-50 vs lower_fh]", sup_over_grid([&](double u1, double u2) {
                    return std::abs(cdf(neg, u1, u2) - std::max(u1 + u2 - 1.0, 0.0));
                }),
                0.02);
    return rec.take();
}

CheckList outage_checks()
{
    Recorder rec("outage");
    const auto grid = agreement_grid();

    struct Closed
    {
        std::string family;
        std::vector<double> thetas;
    };
    const std::vector<Closed> closed{{"independence", {0.0}},
                                     {"lower_fh", {0.0}},
                                     {"upper_fh", {0.0}},
                                     {"fgm", {-1.0, -0.5, 0.5, 1.0}},
                                     {"frank", {-30.0, -5.0, -0.5, 0.5, 5.0, 30.0}}};
    for (const auto& c : closed) {
        double worst = 0.0;
        std::size_t points = 0;
        for (double theta : c.thetas) {
            for (const auto& p : grid) {
                const OutageQuery q(p.geometry, p.rate);
                double fast = 0.0;
                DependenceModel model = DependenceModel::independence();
                if (c.family == "independence") {
                    fast = outage_independent(p.snrs, q);
                } else if (c.family == "lower_fh") {
                    model = DependenceModel::lower_frechet();
                    fast = outage_lower_fh(p.snrs, q);
                } else if (c.family == "upper_fh") {
                    model = DependenceModel::upper_frechet();
                    fast = outage_upper_fh(p.snrs, q);
                } else if (c.family == "fgm") {
                    model = DependenceModel::fgm(theta);
                    fast = outage_fgm(p.snrs, q, theta);
                } else {
                    model = DependenceModel::frank(theta);
                    fast = outage_frank(p.snrs, q, theta);
                }
                worst = std::max(worst, std::abs(fast - outage_generic(model, p.snrs, q)));
                ++points;
            }
        }
        rec.at_most("closed_form[" + c.family + "]", worst, 1e-12);
        rec.at_least("closed_form_points[" + c.family + "]", static_cast<double>(points), 400.0);
    }

    const auto models = reference_models();
    double sandwich = 0.0;
    double fgm_order = 0.0;
    for (const auto& p : grid) {
        const OutageQuery q(p.geometry, p.rate);
        const double lo = outage_upper_fh(p.snrs, q);
        const double hi = outage_lower_fh(p.snrs, q);
        for (const auto& m : models) {
            const double op = outage_closed_form(m, p.snrs, q);
            sandwich = std::max({sandwich, lo - op, op - hi});
        }
        const double pos = outage_fgm(p.snrs, q, 1.0);
        const double zero = outage_fgm(p.snrs, q, 0.0);
        const double neg = outage_fgm(p.snrs, q, -1.0);
        fgm_order = std::max({fgm_order, pos - zero, zero - neg});
    }
    rec.at_most("sandwich_upper_le_any_le_lower", sandwich, 1e-12);
    rec.at_most("ordering_fgm_1_le_0_le_-1", fgm_order, 0.0);

    // one-at-a-time sweeps from a central point
    double monotone = 0.0;
    for (const auto& m : models) {
        double prev = 2.0;
        for (int k = 0; k <= 40; ++k) {
            const double g = std::pow(10.0, -1.0 + k / 10.0);
            const double op = outage_closed_form(m, AvgSnrPair(g, 3.0), OutageQuery(Geometry(1.0, 1.0, 3.5), 1.0));
            monotone = std::max(monotone, op - prev);
            prev = op;
        }
        prev = -1.0;
        for (int k = 1; k <= 40; ++k) {
            const double op =
                outage_closed_form(m, AvgSnrPair(5.0, 3.0), OutageQuery(Geometry(1.0, 1.0, 3.5), 0.1 * k));
            monotone = std::max(monotone, prev - op);
            prev = op;
        }
        prev = -1.0;
        for (int k = 1; k <= 40; ++k) {
            const double op =
                outage_closed_form(m, AvgSnrPair(5.0, 3.0), OutageQuery(Geometry(0.1 * k, 1.0, 3.5), 1.0));
            monotone = std::max(monotone, prev - op);
            prev = op;
        }
    }
    rec.at_most("monotone_in_gbar_rate_distance", monotone, 1e-12);

    double near_zero = 0.0;
    double near_zero_10db = 0.0;
    double near_one = 1.0;
    for (double mu : {1.0, 2.0}) {
        for (const auto& m : models) {
            const double g1 = db_to_linear(30.0);
            near_zero = std::max(
                near_zero, outage_closed_form(m, AvgSnrPair(g1, mu * g1), OutageQuery(Geometry(1.0, 1.0, 3.5), 1e-4)));
            near_zero_10db = std::max(near_zero_10db, outage_closed_form(m, AvgSnrPair(10.0, mu * 10.0),
                                                                         OutageQuery(Geometry(1.0, 1.0, 3.5), 1e-4)));
            for (int db = 0; db <= 30; ++db) {
                const double g = db_to_linear(db);
                near_one = std::min(near_one, outage_closed_form(m, AvgSnrPair(g, mu * g),
                                                                 OutageQuery(Geometry(1.0, 1.0, 3.5), 20.0)));
            }
        }
    }
    rec.at_most("limit_rate_1e-4_at_30dB", near_zero, 1e-6);
    rec.info("limit_rate_1e-4_at_10dB", near_zero_10db);
    rec.at_least("limit_rate_20", near_one, 0.999);
    return rec.take();
}

CheckList coverage_checks()
{
    Recorder rec("coverage");
    const CounterRng rng(kParameterStream);
    std::uint64_t counter = 0;

    double ei_worst = 0.0;
    for (int k = 0; k <= 200; ++k) {
        const double x = std::pow(10.0, -6.0 + k * (std::log10(50.0) + 6.0) / 200.0);
        ei_worst = std::max(ei_worst, relative(ei_neg(x), boost::math::expint(-x)));
    }
    rec.at_most("ei_neg_relative_error", ei_worst, 1e-10);

    std::array<double, 8> term_worst{};
    for (int trial = 0; trial < 20; ++trial) {
        const double g1 = log_uniform(rng, counter++, 0.2, 50.0);
        const double g2 = log_uniform(rng, counter++, 0.2, 50.0);
        const double pl1 = log_uniform(rng, counter++, 0.05, 20.0);
        const double pl2 = log_uniform(rng, counter++, 0.05, 20.0);
        const FgmTerms t = fgm_terms(AvgSnrPair(g1, g2), pl1, pl2);
        const std::array<double, 8> closed{t.a1, t.a2, t.a3, t.a4, t.b1, t.b2, t.b3, t.b4};
        for (int i = 0; i < 8; ++i) {
            const int p = (i % 4 == 2 || i % 4 == 3) ? 2 : 1;
            const int q = (i % 4 == 1 || i % 4 == 3) ? 2 : 1;
            const double oracle = term_by_quadrature(g1, g2, pl1, pl2, p, q, i < 4);
            term_worst[i] = std::max(term_worst[i], relative(closed[i], oracle));
        }
    }
    const std::array<const char*, 8> term_names{"A1", "A2", "A3", "A4", "B1", "B2", "B3", "B4"};
    for (int i = 0; i < 8; ++i) rec.at_most(std::string("term[") + term_names[i] + "]", term_worst[i], 1e-6);

    std::array<double, 3> identity_worst{};
    for (int trial = 0; trial < 10; ++trial) {
        const double zeta = 0.1 + 3.9 * rng.uniform(counter++);
        const double eta = 0.1 + 3.9 * rng.uniform(counter++);
        const double kappa = 0.1 + 3.9 * rng.uniform(counter++);
        const double x0 = 0.5 * rng.uniform(counter++);
        const double x1 = x0 + 0.1 + 3.9 * rng.uniform(counter++);
        const double tail = 60.0 / zeta;
        const auto integrand = [&](double x) { return std::exp(-zeta * x) * std::log2(1.0 + eta * x); };
        const auto antiderivative = [&](double x) {
            return (std::exp(zeta / eta) * ei_neg(zeta / eta + zeta * x) - std::exp(-zeta * x) * std::log1p(eta * x))
                   / (zeta * kLn2);
        };
        identity_worst[0] = std::max(identity_worst[0], relative(antiderivative(x1) - antiderivative(x0),
                                                                 gk(integrand, x0, x1, 1e-13, 15)));
        identity_worst[1] = std::max(identity_worst[1], relative(-std::exp(zeta / eta) * ei_neg(zeta / eta) / (zeta * kLn2),
                                                                 gk(integrand, 0.0, tail, 1e-13, 15)));
        const double closed = (ei_neg(kappa) - std::exp(zeta * kappa / eta) * ei_neg((zeta + eta) * kappa / eta)) / zeta;
        identity_worst[2] = std::max(
            identity_worst[2],
            relative(closed, gk([&](double x) { return std::exp(-zeta * x) * ei_neg(kappa + eta * x); }, 0.0, tail,
                                1e-13, 15)));
    }
    rec.at_most("identity[antiderivative]", identity_worst[0], 1e-8);
    rec.at_most("identity[half_line]", identity_worst[1], 1e-8);
    rec.at_most("identity[ei_transform]", identity_worst[2], 1e-8);

    const std::array<Geometry, 2> geometries{Geometry(1.0, 1.0, 3.5), Geometry(0.8, 1.5, 3.0)};
    const std::array<double, 5> thetas{-1.0, -0.5, 0.0, 0.5, 1.0};
    double exact_worst = 0.0;
    for (const auto& g : geometries)
        for (double g1 : {0.5, 5.0, 50.0})
            for (double g2 : {0.5, 5.0, 50.0})
                for (double theta : thetas) {
                    const AvgSnrPair s(g1, g2);
                    exact_worst = std::max(exact_worst, relative(sum_rate_fgm_exact(s, g, theta),
                                                                 sum_rate_quadrature(DependenceModel::fgm(theta), s, g)));
                }
    rec.at_most("exact_vs_quadrature", exact_worst, 1e-6);

    // min of two i.i.d. exponentials with mean 2 is exponential with mean 1
    const double reduced = gk([](double z) { return std::exp(-z) * 0.5 * std::log2(1.0 + z); }, 0.0, 60.0, 1e-14, 15);
    const AvgSnrPair sym(2.0, 2.0);
    const Geometry unit(1.0, 1.0, 3.5);
    rec.at_most("reduction[exact]", relative(sum_rate_fgm_exact(sym, unit, 0.0), reduced), 1e-6);
    rec.at_most("reduction[quadrature]",
                relative(sum_rate_quadrature(DependenceModel::independence(), sym, unit), reduced), 1e-6);

    // approximation audit
    double swap_worst = 0.0;
    double min_approx = 1e300;
    double order_mismatch = 0.0;
    const std::array<std::pair<double, double>, 5> pairs{{{1.0, 1.0}, {10.0, 10.0}, {100.0, 100.0}, {1.0, 10.0},
                                                          {10.0, 1.0}}};
    for (const auto& g : geometries) {
        const Geometry swapped(g.d2(), g.d1(), g.alpha());
        for (const auto& [g1, g2] : pairs) {
            const AvgSnrPair s(g1, g2);
            const AvgSnrPair ss(g2, g1);
            double worst_rel = 0.0;
            for (std::size_t k = 0; k < thetas.size(); ++k) {
                const double exact = sum_rate_fgm_exact(s, g, thetas[k]);
                const double approx = sum_rate_fgm_approx(s, g, thetas[k]);
                worst_rel = std::max(worst_rel, relative(approx, exact));
                min_approx = std::min(min_approx, approx);
                swap_worst = std::max({swap_worst, relative(sum_rate_fgm_exact(ss, swapped, thetas[k]), exact),
                                       relative(sum_rate_fgm_approx(ss, swapped, thetas[k]), approx)});
                if (k > 0) {
                    const double de = exact - sum_rate_fgm_exact(s, g, thetas[k - 1]);
                    const double da = approx - sum_rate_fgm_approx(s, g, thetas[k - 1]);
                    if ((de > 0.0) != (da > 0.0) || (de < 0.0) != (da < 0.0)) order_mismatch += 1.0;
                }
            }
            rec.info("approx_relative_error[gbar=" + format_number(g1) + "," + format_number(g2)
                         + " d=" + format_number(g.d1()) + "," + format_number(g.d2()) + "]",
                     worst_rel);
        }
    }
    rec.above("approx_positive", min_approx, 0.0);
    rec.at_most("approx_theta_order_mismatches", order_mismatch, 0.0);
    rec.at_most("swap_symmetry", swap_worst, 1e-12);

    // region ordering on a 50x50 grid
    const GridSpec grid{2.0, 2.0, 50, 50};
    const double g10 = db_to_linear(10.0);
    const auto region = [&](double theta, double gbar1) {
        return coverage_region(DependenceModel::fgm(theta), AvgSnrPair(gbar1, gbar1), 3.5, 0.5, grid,
                               RateMethod::Exact);
    };
    const auto pos = region(1.0, g10);
    const auto ind = region(0.0, g10);
    const auto neg = region(-1.0, g10);
    const auto louder = region(0.0, db_to_linear(13.0));
    double not_nested = 0.0;
    for (std::size_t i = 0; i < grid.n1; ++i) {
        for (std::size_t j = 0; j < grid.n2; ++j) {
            if (neg.in_region(i, j) && !ind.in_region(i, j)) not_nested += 1.0;
            if (ind.in_region(i, j) && !pos.in_region(i, j)) not_nested += 1.0;
            if (ind.in_region(i, j) && !louder.in_region(i, j)) not_nested += 1.0;
        }
    }
    rec.at_least("region_area_fgm_1_minus_0", pos.area() - ind.area(), 0.0);
    rec.at_least("region_area_fgm_0_minus_-1", ind.area() - neg.area(), 0.0);
    rec.at_most("region_not_nested_cells", not_nested, 0.0);
    rec.above("region_area_gain_from_3dB", louder.area() - ind.area(), 0.0);
    return rec.take();
}

CheckList mc_outage_checks(std::uint64_t seed, unsigned threads)
{
    Recorder rec("mc");
    const McOptions opts{McOptions{}.chunk_size, threads};
    const Geometry g(1.0, 1.0, 3.5);
    const std::vector<DependenceModel> models{DependenceModel::lower_frechet(), DependenceModel::upper_frechet(),
                                              DependenceModel::frank(-30.0),    DependenceModel::frank(30.0),
                                              DependenceModel::fgm(-1.0),       DependenceModel::fgm(1.0)};
    constexpr double rate = 1.0;
    for (const auto& m : models) {
        double worst = 0.0;
        for (double mu : {1.0, 2.0}) {
            for (double db : {0.0, 10.0, 20.0}) {
                const double g1 = db_to_linear(db);
                const AvgSnrPair s(g1, mu * g1);
                const McEstimate e = estimate_outage(m, s, g, rate, 1'000'000, seed, opts);
                const double closed = outage_closed_form(m, s, OutageQuery(g, rate));
                worst = std::max(worst, std::abs(e.mean - closed) / std::max(4.0 * e.std_error, 5e-3));
            }
        }
        rec.at_most("outage_error_over_allowance[" + m.label() + "]", worst, 1.0);
    }
    return rec.take();
}

CheckList mc_other_checks(std::uint64_t seed, unsigned threads)
{
    Recorder rec("mc");
    const McOptions opts{McOptions{}.chunk_size, threads};

    const McEstimate ind = estimate_sum_rate(DependenceModel::independence(), AvgSnrPair(2.0, 2.0),
                                             Geometry(1.0, 1.0, 3.5), 1'000'000, seed, opts);
    rec.at_most("sum_rate_sigmas[independence]",
                std::abs(ind.mean - sum_rate_fgm_exact(AvgSnrPair(2.0, 2.0), Geometry(1.0, 1.0, 3.5), 0.0))
                    / ind.std_error,
                4.0);
    const AvgSnrPair s(10.0, 5.0);
    const Geometry g(0.9, 1.1, 3.5);
    const McEstimate fgm = estimate_sum_rate(DependenceModel::fgm(1.0), s, g, 1'000'000, seed, opts);
    rec.at_most("sum_rate_sigmas[fgm(1)]", std::abs(fgm.mean - sum_rate_fgm_exact(s, g, 1.0)) / fgm.std_error, 4.0);

    // empirical copula on a 10x10 grid, counted in one pass per family
    constexpr std::uint64_t n = 1'000'000;
    for (const auto& m : reference_models()) {
        const CounterRng rng(seed);
        std::array<std::array<double, 11>, 11> counts{};
        for (std::uint64_t i = 0; i < n; ++i) {
            const UnitSquarePoint p = sample_pair(m, rng, i);
            const auto bin = [](double u) { return std::min<std::size_t>(10, static_cast<std::size_t>(std::ceil(u * 10.0))); };
            counts[bin(p.u1())][bin(p.u2())] += 1.0;
        }
        for (std::size_t i = 0; i <= 10; ++i)
            for (std::size_t j = 0; j <= 10; ++j) {
                if (i > 0) counts[i][j] += counts[i - 1][j];
            }
        for (std::size_t i = 0; i <= 10; ++i)
            for (std::size_t j = 1; j <= 10; ++j) counts[i][j] += counts[i][j - 1];
        double sup = 0.0;
        for (std::size_t i = 1; i <= 10; ++i)
            for (std::size_t j = 1; j <= 10; ++j)
                sup = std::max(sup, std::abs(counts[i][j] / static_cast<double>(n) - cdf(m, i / 10.0, j / 10.0)));
        rec.at_most("empirical_copula_sup[" + m.label() + "]", sup, 0.005);
    }

    const auto model = DependenceModel::frank(-4.0);
    const double one = estimate_sum_rate(model, s, g, 200'003, seed, McOptions{4096, 1}).mean;
    const double many = estimate_sum_rate(model, s, g, 200'003, seed, McOptions{4096, 4}).mean;
    rec.at_most("thread_count_difference", std::abs(one - many), 0.0);
    return rec.take();
}

CheckList run_suite(std::string_view suite, std::uint64_t seed, unsigned threads)
{
    CheckList all;
    const auto append = [&all](CheckList more) {
        all.insert(all.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    };
    const bool every = suite == "all";
    if (!every && suite != "copula" && suite != "outage" && suite != "coverage" && suite != "mc")
        throw DomainError("unknown suite '" + std::string(suite) + "' (copula, outage, coverage, mc, all)");
    if (every || suite == "copula") append(copula_checks());
    if (every || suite == "outage") append(outage_checks());
    if (every || suite == "coverage") append(coverage_checks());
    if (every || suite == "mc") {
        append(mc_outage_checks(seed, threads));
        append(mc_other_checks(seed, threads));
    }
    return all;
}

} // namespace ddmac::cli
