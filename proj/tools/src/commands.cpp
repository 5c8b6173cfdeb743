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

#include "ddmac/cli/commands.hpp"

#include <string>
#include <vector>

#include "ddmac/cli/checks.hpp"
#include "ddmac/cli/csv.hpp"
#include "ddmac/errors.hpp"
#include "ddmac/montecarlo.hpp"
#include "ddmac/outage.hpp"

#ifndef DDMAC_VERSION
#define DDMAC_VERSION "unknown"
#endif

namespace ddmac::cli {

namespace {

struct Column
{
    std::string tag;
    DependenceModel model;
};

std::vector<Column> outage_columns(const Settings& s)
{
    std::vector<Column> cols;
    for (FamilyKind f : s.families) {
        switch (f) {
        case FamilyKind::Independence: cols.push_back({"independence", DependenceModel::independence()}); break;
        case FamilyKind::LowerFrechet: cols.push_back({"lower_fh", DependenceModel::lower_frechet()}); break;
        case FamilyKind::UpperFrechet: cols.push_back({"upper_fh", DependenceModel::upper_frechet()}); break;
        case FamilyKind::Fgm:
            for (double t : s.theta_fgm) cols.push_back({"fgm_" + format_number(t), DependenceModel::fgm(t)});
            break;
        case FamilyKind::Frank:
            for (double t : s.theta_frank) cols.push_back({"frank_" + format_number(t), DependenceModel::frank(t)});
            break;
        }
    }
    return cols;
}

void write_preamble(CsvWriter& csv, std::string_view command, const Settings& s)
{
    csv.comment("ddmac " DDMAC_VERSION " " + std::string(command));
    for (const auto& [key, value] : s.echo()) csv.comment(key + "=" + value);
}


} // namespace

void outage_sweep(const Settings& s, std::ostream& out)
{
    if (s.gbar1_db.is_sweep() && s.ro.is_sweep())
        throw DomainError("sweep either gbar1-db or ro, not both");
    if (s.families.empty()) throw DomainError("no families selected");

    const Geometry geom(s.d1, s.d2, s.alpha);
    const auto cols = outage_columns(s);
    const McOptions mc_opts{McOptions{}.chunk_size, s.threads};

    CsvWriter csv(out);
    write_preamble(csv, "outage-sweep", s);
    csv.comment(std::string("sweep=") + (s.ro.is_sweep() ? "ro" : "gbar1-db"));

    std::vector<std::string> header{"mu", "gbar1_db", "ro"};
    for (const auto& c : cols) header.push_back("op_" + c.tag);
    if (s.mc > 0) {
        for (const auto& c : cols) {
            header.push_back("mc_" + c.tag);
            header.push_back("mc_se_" + c.tag);
        }
    }
    csv.row(header);

    for (double mu : s.mu) {
        for (double g_db : s.gbar1_db.points()) {
            const double g1 = db_to_linear(g_db);
            const AvgSnrPair snrs(g1, mu * g1);
            for (double rate : s.ro.points()) {
                const OutageQuery q(geom, rate);
                std::vector<std::string> row{format_number(mu), format_number(g_db), format_number(rate)};
                for (const auto& c : cols) row.push_back(format_number(outage_closed_form(c.model, snrs, q)));
                if (s.mc > 0) {
                    for (const auto& c : cols) {
                        const McEstimate e = estimate_outage(c.model, snrs, geom, rate, s.mc, s.seed, mc_opts);
                        row.push_back(format_number(e.mean));
                        row.push_back(format_number(e.std_error));
                    }
                }
                csv.row(row);
            }
        }
    }
}

void coverage_grid(const Settings& s, std::ostream& out)
{
    if (s.theta_fgm.empty()) throw DomainError("no FGM parameters selected");
    const GridSpec grid{s.d_max, s.d_max, s.grid_n1, s.grid_n2};
    grid.validate();

    struct Region
    {
        double g_db, mu, theta;
        CoverageResult result;
    };
    std::vector<Region> regions;
    for (double g_db : s.gbar1_db.points()) {
        const double g1 = db_to_linear(g_db);
        for (double mu : s.mu) {
            for (double theta : s.theta_fgm) {
                regions.push_back({g_db, mu, theta,
                                   coverage_region(DependenceModel::fgm(theta), AvgSnrPair(g1, mu * g1), s.alpha,
                                                   s.target_rate, grid, s.method, s.threads)});
            }
        }
    }

    CsvWriter csv(out);
    write_preamble(csv, "coverage-grid", s);
    for (const auto& r : regions) {
        csv.comment("area gbar1_db=" + format_number(r.g_db) + " mu=" + format_number(r.mu)
                    + " theta_fgm=" + format_number(r.theta) + " cells=" + std::to_string(r.result.covered_cells())
                    + " area=" + format_number(r.result.area()));
    }
    csv.row({"gbar1_db", "mu", "theta_fgm", "d1", "d2", "sum_rate", "in_region"});
    for (const auto& r : regions) {
        for (std::size_t i = 0; i < grid.n1; ++i) {
            for (std::size_t j = 0; j < grid.n2; ++j) {
                csv.row({format_number(r.g_db), format_number(r.mu), format_number(r.theta),
                         format_number(grid.d1_at(i)), format_number(grid.d2_at(j)),
                         format_number(r.result.rate(i, j)), r.result.in_region(i, j) ? "1" : "0"});
            }
        }
    }
}

int validate(std::string_view suite, const Settings& s, std::ostream& report, std::ostream* csv_out)
{
    const CheckList checks = run_suite(suite, s.seed, s.threads);

    int failed = 0;
    report << "ddmac " DDMAC_VERSION " validate " << suite << " seed=" << s.seed << '\n';
    for (const auto& c : checks) {
        const bool ok = c.passed();
        failed += ok ? 0 : 1;
        report << (c.relation == Relation::Info ? "INFO" : ok ? "PASS" : "FAIL") << "  " << c.suite << "  " << c.name
               << "  measured=" << format_number(c.measured);
        if (c.relation != Relation::Info) report << "  (" << to_string(c.relation) << ' ' << format_number(c.tolerance) << ')';
        report << '\n';
    }
    report << checks.size() << " checks, " << failed << " failed\n";

    if (csv_out) {
        CsvWriter csv(*csv_out);
        csv.comment("ddmac " DDMAC_VERSION " validate");
        csv.comment("suite=" + std::string(suite));
        csv.comment("seed=" + std::to_string(s.seed));
        csv.row({"suite", "check", "measured", "relation", "tolerance", "status"});
        for (const auto& c : checks) {
            csv.row({c.suite, '"' + c.name + '"', format_number(c.measured), std::string(to_string(c.relation)),
                     format_number(c.tolerance), c.relation == Relation::Info ? "info" : c.passed() ? "pass" : "fail"});
        }
    }
    return failed;
}

} // namespace ddmac::cli
