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

#include <ostream>
#include <string_view>

#include "ddmac/cli/settings.hpp"

namespace ddmac::cli {

/// Outage probability table over a gbar1 (dB) or rate sweep, one column per
/// family and parameter, plus Monte-Carlo columns when settings.mc > 0.
void outage_sweep(const Settings& settings, std::ostream& out);

/// Long-format coverage table over a (d1, d2) grid for every FGM parameter,
/// with one area line per region in the comment header.
void coverage_grid(const Settings& settings, std::ostream& out);

/// Runs a validation suite (copula, outage, coverage, mc or all). Writes a
/// human report to \p report and, if non-null, a CSV report to \p csv.
/// Returns the number of failed checks.
int validate(std::string_view suite, const Settings& settings, std::ostream& report, std::ostream* csv);

} // namespace ddmac::cli
