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

#include "ddmac/cli/settings.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "ddmac/cli/csv.hpp"
#include "ddmac/errors.hpp"
#include "ddmac/montecarlo.hpp"

namespace ddmac::cli {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        const auto next = s.find(sep, pos);
        parts.push_back(trim(s.substr(pos, next - pos)));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return parts;
}

double parse_double(std::string_view text, std::string_view what)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value))
        throw DomainError(std::string(what) + ": not a finite number: '" + std::string(text) + "'");
    return value;
}

std::uint64_t parse_u64(std::string_view text, std::string_view what)
{
    text = trim(text);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw DomainError(std::string(what) + ": not an unsigned integer: '" + std::string(text) + "'");
    return value;
}

std::vector<double> parse_list(std::string_view text, std::string_view what)
{
    std::vector<double> values;
    for (auto part : split(text, ',')) values.push_back(parse_double(part, what));
    return values;
}

std::string join(const std::vector<double>& values)
{
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ',';
        s += format_number(values[i]);
    }
    return s;
}

void require(bool ok, std::string_view message)
{
    if (!ok) throw DomainError(std::string(message));
}

FamilyKind parse_family(std::string_view name)
{
    if (name == "independence") return FamilyKind::Independence;
    if (name == "lower_fh") return FamilyKind::LowerFrechet;
    if (name == "upper_fh") return FamilyKind::UpperFrechet;
    if (name == "fgm") return FamilyKind::Fgm;
    if (name == "frank") return FamilyKind::Frank;
    throw DomainError("families: unknown family '" + std::string(name) + "'");
}

void apply_preset(Settings& s, std::string_view name)
{
    if (name.empty() || name == "none") {
        s.preset.clear();
        return;
    }
    if (name == "fig2") {
        s.mu = {1.0, 2.0};
        s.gbar1_db = {0.0, 30.0, 1.0};
        s.ro = {1.0, 1.0, 1.0};
    } else if (name == "fig3") {
        s.mu = {1.0, 2.0};
        s.gbar1_db = {10.0, 10.0, 1.0};
        s.ro = {0.1, 5.0, 0.1};
    } else if (name == "fig4") {
        s.mu = {1.0};
        s.gbar1_db = {0.0, 10.0, 5.0};
        s.target_rate = 0.5;
        s.d_max = 2.0;
        s.grid_n1 = s.grid_n2 = 50;
        s.method = RateMethod::Exact;
    } else {
        throw DomainError("preset: unknown preset '" + std::string(name) + "' (fig2, fig3, fig4)");
    }
    s.alpha = 3.5;
    s.d1 = s.d2 = 1.0;
    s.theta_fgm = {-1.0, 0.0, 1.0};
    s.theta_frank = {-30.0, 30.0};
    s.preset = std::string(name);
}

} // namespace

std::vector<double> Range::points() const
{
    if (!is_sweep()) return {start};
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> pts(count);
    for (std::size_t k = 0; k < count; ++k) pts[k] = start + static_cast<double>(k) * step;
    return pts;
}

std::string Range::to_string() const
{
    if (!is_sweep()) return format_number(start);
    return format_number(start) + ":" + format_number(stop) + ":" + format_number(step);
}

Range parse_range(std::string_view text)
{
    const auto parts = split(text, ':');
    if (parts.size() == 1) {
        const double v = parse_double(parts[0], "range");
        return {v, v, 1.0};
    }
    require(parts.size() == 3, "range must be 'value' or 'start:stop:step'");
    const Range r{parse_double(parts[0], "range start"), parse_double(parts[1], "range stop"),
                  parse_double(parts[2], "range step")};
    require(r.step > 0.0, "range step must be positive");
    require(r.start < r.stop, "range start must be below stop");
    require((r.stop - r.start) / r.step < 1e6, "range has too many points");
    return r;
}

std::string_view to_string(FamilyKind kind) noexcept
{
    switch (kind) {
    case FamilyKind::Independence: return "independence";
    case FamilyKind::LowerFrechet: return "lower_fh";
    case FamilyKind::UpperFrechet: return "upper_fh";
    case FamilyKind::Fgm: return "fgm";
    case FamilyKind::Frank: return "frank";
    }
    return "unknown";
}

const std::vector<std::string>& setting_keys()
{
    static const std::vector<std::string> keys{"preset", "alpha",    "d1",   "d2",     "mu",          "gbar1-db",
                                               "ro",     "theta-fgm", "theta-frank", "families", "mc", "seed",
                                               "grid",   "method",   "target-rate", "d-max", "threads"};
    return keys;
}

void Settings::set(std::string_view key, std::string_view value)
{
    value = trim(value);
    if (key == "preset") {
        apply_preset(*this, value);
    } else if (key == "alpha") {
        const double a = parse_double(value, key);
        require(a > 2.0, "alpha must exceed 2");
        alpha = a;
    } else if (key == "d1" || key == "d2") {
        const double d = parse_double(value, key);
        require(d > 0.0, "distances must be positive");
        (key == "d1" ? d1 : d2) = d;
    } else if (key == "mu") {
        auto list = parse_list(value, key);
        require(std::all_of(list.begin(), list.end(), [](double m) { return m > 0.0; }), "mu must be positive");
        mu = std::move(list);
    } else if (key == "gbar1-db") {
        gbar1_db = parse_range(value);
    } else if (key == "ro") {
        const Range r = parse_range(value);
        require(r.start > 0.0, "ro must be positive");
        ro = r;
    } else if (key == "theta-fgm") {
        auto list = parse_list(value, key);
        require(std::all_of(list.begin(), list.end(), [](double t) { return t >= -1.0 && t <= 1.0; }),
                "theta-fgm must lie in [-1, 1]");
        theta_fgm = std::move(list);
    } else if (key == "theta-frank") {
        theta_frank = parse_list(value, key);
    } else if (key == "families") {
        std::vector<FamilyKind> list;
        if (value == "all") {
            list = Settings{}.families;
        } else {
            for (auto name : split(value, ',')) {
                const FamilyKind f = parse_family(name);
                require(std::find(list.begin(), list.end(), f) == list.end(), "families: duplicate family");
                list.push_back(f);
            }
        }
        families = std::move(list);
    } else if (key == "mc") {
        const auto n = parse_u64(value, key);
        require(n == 0 || n >= kMinMcSamples, "mc must be 0 (off) or at least 1000");
        mc = n;
    } else if (key == "seed") {
        seed = parse_u64(value, key);
    } else if (key == "grid") {
        const auto x = value.find('x');
        require(x != std::string_view::npos, "grid must look like 50x50");
        const auto n1 = parse_u64(value.substr(0, x), key);
        const auto n2 = parse_u64(value.substr(x + 1), key);
        require(n1 >= 2 && n2 >= 2 && n1 <= 100000 && n2 <= 100000, "grid sides must be in [2, 100000]");
        grid_n1 = n1;
        grid_n2 = n2;
    } else if (key == "method") {
        method = parse_rate_method(value);
    } else if (key == "target-rate") {
        const double r = parse_double(value, key);
        require(r > 0.0, "target-rate must be positive");
        target_rate = r;
    } else if (key == "d-max") {
        const double d = parse_double(value, key);
        require(d > 0.0, "d-max must be positive");
        d_max = d;
    } else if (key == "threads") {
        const auto t = parse_u64(value, key);
        require(t >= 1 && t <= 1024, "threads must be in [1, 1024]");
        threads = static_cast<unsigned>(t);
    } else {
        throw DomainError("unknown option '" + std::string(key) + "'");
    }
}

std::vector<std::pair<std::string, std::string>> Settings::echo() const
{
    std::string fams;
    for (std::size_t i = 0; i < families.size(); ++i) {
        if (i) fams += ',';
        fams += to_string(families[i]);
    }
    return {
        {"preset", preset.empty() ? "none" : preset},
        {"alpha", format_number(alpha)},
        {"d1", format_number(d1)},
        {"d2", format_number(d2)},
        {"mu", join(mu)},
        {"gbar1-db", gbar1_db.to_string()},
        {"ro", ro.to_string()},
        {"theta-fgm", join(theta_fgm)},
        {"theta-frank", join(theta_frank)},
        {"families", fams},
        {"mc", std::to_string(mc)},
        {"seed", std::to_string(seed)},
        {"grid", std::to_string(grid_n1) + "x" + std::to_string(grid_n2)},
        {"method", std::string(to_string(method))},
        {"target-rate", format_number(target_rate)},
        {"d-max", format_number(d_max)},
    };
}

Settings preset_settings(std::string_view name)
{
    Settings s;
    apply_preset(s, name);
    return s;
}

std::map<std::string, std::string> parse_config(std::string_view text)
{
    std::map<std::string, std::string> entries;
    std::size_t line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw DomainError("config line " + std::to_string(line_no) + ": expected key = value");
        const std::string key(trim(line.substr(0, eq)));
        const auto& keys = setting_keys();
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw DomainError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        entries[key] = std::string(trim(line.substr(eq + 1)));
    }
    return entries;
}

Settings resolve_settings(const std::map<std::string, std::string>& flags,
                          const std::map<std::string, std::string>& config)
{
    std::string preset;
    if (auto it = config.find("preset"); it != config.end()) preset = it->second;
    if (auto it = flags.find("preset"); it != flags.end()) preset = it->second;

    Settings s = preset_settings(preset);
    for (const auto& layer : {&config, &flags}) {
        for (const auto& key : setting_keys()) {
            if (key == "preset") continue;
            if (auto it = layer->find(key); it != layer->end()) s.set(key, it->second);
        }
    }
    return s;
}

} // namespace ddmac::cli
