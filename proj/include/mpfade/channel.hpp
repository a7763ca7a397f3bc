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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace mpfade
{
using Signal = std::vector<std::complex<double>>;

struct ChannelConfig
{
    double noise_variance = 1.0;
    /// Neglected tail power relative to the noise floor, in (0, 1e-3].
    double truncation_tolerance = 1e-6;
    std::uint64_t seed = 0;
};

void validate(const ChannelConfig &config);

/// Output split into the multipath part sum_l H_k^(l) x_{k-l} and the additive noise Z_k.
struct ChannelComponents
{
    Signal interference;
    Signal noise;

    Signal output() const;
};

/// Number of the last simulated path. Finite profiles use their last stored path; infinite
/// profiles use the smallest L with tail_sum(L) * max_k |x_k|^2 <= tolerance * noise_variance.
std::size_t truncation_depth(const VarianceProfile &profile, std::span<const std::complex<double>> input,
                             const ChannelConfig &config);

/// Y_k = sum_{l=0}^{min(k-1, depth)} H_k^(l) x_{k-l} + Z_k for k = 1..n (stored 0-based), with
/// depth = truncation_depth(...). Bit-reproducible for fixed arguments.
Signal simulate(std::span<const std::complex<double>> input, const VarianceProfile &profile, const GainModel &model,
                const ChannelConfig &config);

ChannelComponents simulate_components(std::span<const std::complex<double>> input, const VarianceProfile &profile,
                                      const GainModel &model, const ChannelConfig &config);

/// As simulate_components but with an explicit last path index instead of the truncation rule.
ChannelComponents simulate_components(std::span<const std::complex<double>> input, const VarianceProfile &profile,
                                      const GainModel &model, const ChannelConfig &config, std::size_t depth);

/// E|Y_k|^2 = sigma^2 + sum_{l=0}^{min(k-1, depth)} alpha_l |x_{k-l}|^2 for the 1-based time index k.
double theoretical_output_power(std::span<const std::complex<double>> input, const VarianceProfile &profile,
                                const ChannelConfig &config, std::size_t k);
} // namespace mpfade
