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

#include <stdexcept>
#include <string>

namespace ddmac {

/// Raised when an argument lies outside the mathematical domain of an operation
/// (negative SNR, copula parameter out of range, nonpositive rate, ...).
class DomainError : public std::invalid_argument
{
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// The Frechet-Hoeffding bounds are copulas without a density.
class NoDensity : public std::domain_error
{
public:
    explicit NoDensity(const std::string& what) : std::domain_error(what) {}
};

/// Adaptive quadrature could not reach the requested tolerance within its budget.
class QuadratureFailure : public std::runtime_error
{
public:
    QuadratureFailure(const std::string& what, double estimated_error)
        : std::runtime_error(what), estimated_error_(estimated_error)
    {
    }

    double estimated_error() const noexcept { return estimated_error_; }

private:
    double estimated_error_;
};

} // namespace ddmac
