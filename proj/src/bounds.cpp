// SPDX-License-Identifier: Apache-2.0
//
// mpfade: capacity bounds for noncoherent multipath fading channels
// Copyright (C) 2026 The mpfade authors
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

#include "mpfade/bounds.hpp"

#include "mpfade/error.hpp"
#include "mpfade/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mpfade
{
double rho_tilde(double rho, std::size_t l0, const VarianceProfile &profile)
{
    require(l0 >= 1, "rho_tilde: l0 must be at least 1");
    require(rho > 0.0 && rho < 1.0, "rho_tilde: rho must lie in (0, 1)");
    const double anchor = alpha(profile, l0);
    require(anchor > 0.0, "rho_tilde: alpha_{l0} must be positive");

    double head = 0.0;
    for (std::size_t l = 0; l < l0; ++l)
        head = std::max(head, alpha(profile, l));

    const double l0d = static_cast<double>(l0);
    return std::min(std::pow(rho, l0d - 1.0) * anchor / head, std::pow(rho, l0d));
}

double upper_bound_exponential(const VarianceProfile &profile, const GainModel &model)
{
    const auto verdict = classify(profile);
    if (verdict.verdict != Verdict::BoundedCapacity)
        throw std::domain_error("upper_bound_exponential: ratio condition not certified for " + profile.describe());
    const double rt = rho_tilde(verdict.witness->rho, verdict.witness->l0, profile);
    return std::log(2.0 * std::numbers::pi * std::numbers::pi / std::sqrt(rt)) - inf_h_minus_logalpha(profile, model);
}

double psi(double snr, double total_variance)
{
    require(snr >= 0.0, "psi: snr must be nonnegative");
    require(total_variance > 0.0 && std::isfinite(total_variance), "psi: total variance must be positive");
    if (std::isinf(snr))
        return 0.0;
    const double xi = 1.0 / (1.0 + std::log1p(total_variance * snr));
    // log(1/xi) enters with a minus sign: log Gamma(xi) + log xi - xi log xi
    return log_gamma(xi) + std::log(xi) - xi * std::log(xi);
}

double upper_bound_duality(double snr, const VarianceProfile &profile, const GainModel &model)
{
    require(snr >= 0.0 && std::isfinite(snr), "upper_bound_duality: snr must be nonnegative and finite");
    const double total = total_sum(profile);
    return -inf_h_minus_logalpha(profile, model) + std::log1p(std::log1p(total * snr)) + psi(snr, total) +
           std::log(std::numbers::pi) + 1.0;
}

double upsilon(double alpha0, double total_variance, double noise_variance, double expected_log_gain0)
{
    require(alpha0 > 0.0, "upsilon: alpha0 must be positive");
    require(total_variance >= alpha0, "upsilon: total variance cannot be below alpha0");
    require(noise_variance > 0.0, "upsilon: noise variance must be positive");
    return expected_log_gain0 - 1.0 - 2.0 * std::log(std::sqrt(alpha0) + std::sqrt(total_variance + 2.0 * noise_variance));
}

double lower_bound_closed_form_log(double log_power, std::size_t guard_length, std::size_t data_symbols,
                                   double upsilon_value)
{
    require(log_power > 0.0, "lower bound: power must exceed 1");
    require(data_symbols >= 1, "lower bound: tau must be at least 1");
    const double tau = static_cast<double>(data_symbols);
    const double weight = preloglog_lower(guard_length, data_symbols);
    return weight * std::log(log_power / tau) + weight * upsilon_value;
}

double lower_bound_closed_form(double power, std::size_t guard_length, std::size_t data_symbols, double upsilon_value)
{
    require(power > 1.0 && std::isfinite(power), "lower bound: power must exceed 1");
    return lower_bound_closed_form_log(std::log(power), guard_length, data_symbols, upsilon_value);
}

double preloglog_lower(std::size_t guard_length, std::size_t data_symbols)
{
    require(data_symbols >= 1, "preloglog_lower: tau must be at least 1");
    return static_cast<double>(data_symbols) / static_cast<double>(guard_length + data_symbols);
}

double flat_fading_asymptote(double alpha0, double entropy_rate0, double expected_log_gain0)
{
    require(alpha0 > 0.0, "flat_fading_asymptote: alpha0 must be positive");
    return std::log(std::numbers::pi) + expected_log_gain0 - entropy_rate0;
}

std::optional<double> BoundReport::tightest_upper() const
{
    if (upper_exponential && upper_duality)
        return std::min(*upper_exponential, *upper_duality);
    return upper_exponential ? upper_exponential : upper_duality;
}
} // namespace mpfade
