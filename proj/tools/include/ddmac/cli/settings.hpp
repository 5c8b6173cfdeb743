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

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ddmac/coverage.hpp"

namespace ddmac::cli {

/// A scalar ("10") or an inclusive sweep ("0:30:1").
struct Range
{
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    bool is_sweep() const noexcept { return stop > start; }
    std::vector<double> points() const;
    std::string to_string() const;
};

Range parse_range(std::string_view text);

enum class FamilyKind
{
    Independence,
    LowerFrechet,
    UpperFrechet,
    Fgm,
    Frank,
};

std::string_view to_string(FamilyKind kind) noexcept;

struct Settings
{
    std::string preset;
    double alpha = 3.5;
    double d1 = 1.0;
    double d2 = 1.0;
    std::vector<double> mu{1.0};
    Range gbar1_db{10.0, 10.0, 1.0};
    Range ro{1.0, 1.0, 1.0};
    std::vector<double> theta_fgm{-1.0, 0.0, 1.0};
    std::vector<double> theta_frank{-30.0, 30.0};
    std::vector<FamilyKind> families{FamilyKind::Independence, FamilyKind::LowerFrechet, FamilyKind::UpperFrechet,
                                     FamilyKind::Fgm, FamilyKind::Frank};
    std::uint64_t mc = 0;
    std::uint64_t seed = 42;
    std::size_t grid_n1 = 50;
    std::size_t grid_n2 = 50;
    RateMethod method = RateMethod::Exact;
    double target_rate = 0.5;
    double d_max = 2.0;
    unsigned threads = 1;

    /// Assigns one option by its flag name without dashes, e.g. "gbar1-db".
    void set(std::string_view key, std::string_view value);

    /// Every option that can change the numbers, in a fixed order.
    std::vector<std::pair<std::string, std::string>> echo() const;
};

/// Option names accepted by Settings::set, in echo order.
const std::vector<std::string>& setting_keys();

/// Built-in defaults with a named preset applied ("" means none).
Settings preset_settings(std::string_view name);

/// Parses "key = value" lines; blank lines and lines starting with '#' are skipped.
std::map<std::string, std::string> parse_config(std::string_view text);

/// Precedence: flags > config file > preset > built-in defaults. A preset may
/// be named by either the flags or the config file.
Settings resolve_settings(const std::map<std::string, std::string>& flags,
                          const std::map<std::string, std::string>& config);

} // namespace ddmac::cli
