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
#include "mpfade/signaling.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>

namespace mpfade
{
/// Sample mean with its standard error (sample standard deviation / sqrt(samples)).
struct McEstimate
{
    double value = 0.0;
    double standard_error = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

inline constexpr std::size_t min_mc_samples = 1000;

/// True when tail_sum(profile, L) * P <= sigma^2.
bool tail_condition_holds(const VarianceProfile &profile, double power, double noise_variance, std::size_t guard_length);

/// E|W|^2 for data symbol nu (1-based) of block b, where W collects every path except path 0
/// plus the noise. Guard zeros contribute nothing; earlier symbols enter through their second
/// moments. With block = nullopt the full past is used (the limit b -> infinity), which is the
/// largest value over all blocks.
double interference_power(const SignalingScheme &scheme, const VarianceProfile &profile, double noise_variance,
                          std::size_t symbol, std::optional<std::size_t> block = std::nullopt);

/// Per-symbol bound log log P^(1/tau) + Upsilon, using the relaxation E|W|^2 <= (alpha + 2 sigma^2)|X|^2.
/// Independent of nu and b. Throws std::invalid_argument if the tail condition fails for L.
double lemma1_bound_exact(const SignalingScheme &scheme, const VarianceProfile &profile, const GainModel &model,
                          double noise_variance, std::size_t symbol);

/// Monte Carlo estimate of E log(pi e (sqrt(alpha0) + sqrt(interference / |X|^2))^2) over the law of |X|^2.
/// `stream` selects an independent random stream for the same seed.
McEstimate lemma1_penalty_mc(const MagnitudeLaw &law, double alpha0, double interference, std::size_t samples,
                             std::uint64_t seed, std::uint64_t stream = 0);

/// Per-symbol bound h(X) - E log|X|^2 + E log|H|^2 - E log(pi e (sigma_H + sigma_W/|X|)^2) with the
/// exact interference power of symbol nu, which is never looser than lemma1_bound_exact.
McEstimate lemma1_bound_mc(const SignalingScheme &scheme, const VarianceProfile &profile, const GainModel &model,
                           double noise_variance, std::size_t symbol, std::size_t samples, std::uint64_t seed,
                           std::optional<std::size_t> block = std::nullopt);

/// Rate achieved by the block scheme, (1 / (L + tau)) sum_nu lemma1_bound_mc(nu), with `samples`
/// split evenly across the tau symbols (at least min_mc_samples each).
McEstimate scheme_lower_bound_mc(const SignalingScheme &scheme, const VarianceProfile &profile, const GainModel &model,
                                 double noise_variance, std::size_t samples, std::uint64_t seed);

struct OracleResult
{
    double value = 0.0;          ///< mutual information in nats at the finest resolution
    double last_change = 0.0;    ///< |I(N) - I(N/2)| at acceptance
    std::size_t resolution = 0;  ///< grid points per axis at acceptance
};

/// Mutual information I(X; H X + Z) of the scalar memoryless channel with H ~ CN(0, alpha0),
/// Z ~ CN(0, sigma^2) and circularly-symmetric X, by trapezoidal quadrature on log-spaced grids in
/// |X|^2 and |Y|^2. The grid is doubled until successive values differ by less than `tolerance`;
/// throws NumericError with the refinement history otherwise.
OracleResult mi_oracle_scalar(const MagnitudeLaw &law, double alpha0, double noise_variance, std::size_t resolution = 65,
                              double tolerance = 1e-3, std::size_t max_refinements = 8);
} // namespace mpfade
