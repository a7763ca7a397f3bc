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

#pragma once

#include "mpfade/gains.hpp"
#include "mpfade/profiles.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace mpfade
{
// ================================================================================================
// Capacity bounds (all values in nats per channel use)
// ================================================================================================

/// min{ rho^(l0-1) alpha_{l0} / max_{l'<l0} alpha_{l'}, rho^l0 }.
/// The caller certifies alpha_{l+1} / alpha_l >= rho for l >= l0 (see classify). Requires l0 >= 1,
/// 0 < rho < 1 and alpha_{l0} > 0.
double rho_tilde(double rho, std::size_t l0, const VarianceProfile &profile);

/// SNR-independent upper bound log(2 pi^2 / sqrt(rho_tilde)) - inf_l (h_l - log alpha_l) for
/// profiles whose ratio condition is certified by classify(). The proof constant K of the
/// bounded-capacity argument is the same quantity. Throws std::domain_error otherwise.
double upper_bound_exponential(const VarianceProfile &profile, const GainModel &model);

/// Psi = log Gamma(xi) - log(1/xi) - xi log xi at xi = 1 / (1 + log(1 + alpha snr)).
/// Psi(0) = 0 and Psi -> 0 as snr -> infinity, but the decay is only of order xi log(1/xi).
double psi(double snr, double total_variance);

/// Finite-SNR duality bound
///   -inf(h - log alpha) + log(1 + log(1 + alpha snr)) + Psi(snr) + log pi + 1
/// with alpha = total_sum(profile). Throws std::domain_error for non-summable profiles.
double upper_bound_duality(double snr, const VarianceProfile &profile, const GainModel &model);

/// Upsilon = E log|H_1^(0)|^2 - 1 - 2 log(sqrt(alpha0) + sqrt(alpha + 2 sigma^2)).
double upsilon(double alpha0, double total_variance, double noise_variance, double expected_log_gain0);

/// (tau / (L + tau)) (log log P^(1/tau) + Upsilon) for P > 1. May be negative.
double lower_bound_closed_form(double power, std::size_t guard_length, std::size_t data_symbols, double upsilon_value);

/// Same bound with the power given as log P > 0, for SNRs beyond double range.
double lower_bound_closed_form_log(double log_power, std::size_t guard_length, std::size_t data_symbols,
                                   double upsilon_value);

/// tau / (L + tau), the pre-loglog achieved by the block scheme.
double preloglog_lower(std::size_t guard_length, std::size_t data_symbols);

/// Offset log pi + E log|H_1^(0)|^2 - h_0 of the single-path double-logarithmic asymptote.
double flat_fading_asymptote(double alpha0, double entropy_rate0, double expected_log_gain0);

// ================================================================================================
// Per-SNR record
// ================================================================================================

struct BoundReport
{
    double snr = 0.0; ///< P / sigma^2
    double power = 0.0;
    double noise_variance = 0.0;

    std::optional<double> upper_exponential;
    std::optional<double> upper_duality;

    std::optional<std::size_t> guard_length;  ///< L(P)
    std::optional<std::size_t> data_symbols;  ///< tau
    std::optional<double> lower_closed_form_raw;
    std::optional<double> lower_closed_form;  ///< clamped at 0
    std::optional<double> lower_mc;
    std::optional<double> lower_mc_stderr;

    std::string profile_id;
    std::string model_id;

    /// min of the present upper bounds, if any.
    std::optional<double> tightest_upper() const;
};
} // namespace mpfade
