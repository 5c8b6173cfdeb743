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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "ddmac/cli/commands.hpp"
#include "ddmac/cli/settings.hpp"
#include "ddmac/errors.hpp"

namespace {

using ddmac::cli::Settings;

struct Flags
{
    std::map<std::string, std::string> values;
    std::string config_path;
    std::string out = "-";
};

void add_setting_flags(CLI::App& cmd, Flags& flags)
{
    const std::map<std::string, std::string> help{
        {"preset", "fig2 | fig3 | fig4"},
        {"alpha", "path-loss exponent (> 2)"},
        {"d1", "distance of user 1"},
        {"d2", "distance of user 2"},
        {"mu", "gbar2 / gbar1, comma-separated list"},
        {"gbar1-db", "average SNR of user 1 in dB: value or start:stop:step"},
        {"ro", "threshold rate: value or start:stop:step"},
        {"theta-fgm", "FGM parameters in [-1, 1], comma-separated"},
        {"theta-frank", "Frank parameters, comma-separated"},
        {"families", "all, or a subset of independence,lower_fh,upper_fh,fgm,frank"},
        {"mc", "Monte-Carlo samples per point (0 = off)"},
        {"seed", "Monte-Carlo seed"},
        {"grid", "coverage grid resolution, e.g. 50x50"},
        {"method", "quadrature | exact | approx"},
        {"target-rate", "coverage target sum rate"},
        {"d-max", "coverage grid extent along both distances"},
        {"threads", "worker threads (results do not depend on it)"},
    };
    for (const auto& key : ddmac::cli::setting_keys()) {
        cmd.add_option_function<std::string>(
               "--" + key, [&flags, key](const std::string& v) { flags.values[key] = v; }, help.at(key))
            ->allow_extra_args(false);
    }
    cmd.add_option("--config", flags.config_path, "key = value file; flags take precedence");
    cmd.add_option("--out", flags.out, "output path, '-' for stdout");
}

Settings load(const Flags& flags)
{
    std::map<std::string, std::string> config;
    if (!flags.config_path.empty()) {
        std::ifstream in(flags.config_path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot read config file " + flags.config_path);
        std::ostringstream text;
        text << in.rdbuf();
        config = ddmac::cli::parse_config(text.str());
    }
    return ddmac::cli::resolve_settings(flags.values, config);
}

template <class Write>
void emit(const std::string& path, Write&& write)
{
    if (path == "-") {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write(out);
    if (!out.flush()) throw std::runtime_error("write to " + path + " failed");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Outage and coverage analysis for a two-user MAC with dependent Rayleigh fading"};
    app.require_subcommand(1);

    Flags sweep_flags;
    auto* sweep = app.add_subcommand("outage-sweep", "outage probability vs gbar1 or threshold rate (CSV)");
    add_setting_flags(*sweep, sweep_flags);

    Flags grid_flags;
    auto* grid = app.add_subcommand("coverage-grid", "coverage region over a (d1, d2) grid (CSV)");
    add_setting_flags(*grid, grid_flags);

    Flags validate_flags;
    std::string suite = "all";
    std::string report_path;
    auto* validate = app.add_subcommand("validate", "run invariant suites; exit status 1 on any failure");
    validate->add_option("suite", suite, "copula | outage | coverage | mc | all")->capture_default_str();
    add_setting_flags(*validate, validate_flags);
    validate->add_option("--report", report_path, "also write a CSV report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*sweep) {
            const Settings s = load(sweep_flags);
            emit(sweep_flags.out, [&](std::ostream& o) { ddmac::cli::outage_sweep(s, o); });
        } else if (*grid) {
            const Settings s = load(grid_flags);
            emit(grid_flags.out, [&](std::ostream& o) { ddmac::cli::coverage_grid(s, o); });
        } else {
            const Settings s = load(validate_flags);
            int failed = 0;
            emit(validate_flags.out, [&](std::ostream& o) {
                if (report_path.empty()) {
                    failed = ddmac::cli::validate(suite, s, o, nullptr);
                } else {
                    emit(report_path, [&](std::ostream& csv) { failed = ddmac::cli::validate(suite, s, o, &csv); });
                }
            });
            return failed == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "ddmac: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
