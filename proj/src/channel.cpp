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

#include "mpfade/channel.hpp"

#include "mpfade/error.hpp"
#include "mpfade/parallel.hpp"
#include "mpfade/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mpfade
{
namespace
{
// Paths per work item. Fixed so the reduction order is independent of the thread count.
constexpr std::size_t paths_per_chunk = 4;

double peak_power(std::span<const std::complex<double>> input)
{
    double peak = 0.0;
    for (const auto &x : input)
        peak = std::max(peak, std::norm(x));
    return peak;
}
} // namespace

void validate(const ChannelConfig &config)
{
    require(std::isfinite(config.noise_variance) && config.noise_variance > 0.0, "channel: noise variance must be positive");
    require(config.truncation_tolerance > 0.0 && config.truncation_tolerance <= 1e-3,
            "channel: truncation tolerance must lie in (0, 1e-3]");
}

Signal ChannelComponents::output() const
{
    Signal y(interference.size());
    for (std::size_t k = 0; k < y.size(); ++k)
        y[k] = interference[k] + noise[k];
    return y;
}

std::size_t truncation_depth(const VarianceProfile &profile, std::span<const std::complex<double>> input,
                             const ChannelConfig &config)
{
    validate(config);
    if (!profile.summable())
        throw std::domain_error("channel: profile " + profile.describe() + " has no summable tail");
    if (const auto last = last_path(profile))
        return *last;

    const double peak = peak_power(input);
    const double floor = config.truncation_tolerance * config.noise_variance;
    if (tail_sum(profile, 0) * peak <= floor)
        return 0;
    return choose_L(profile, peak, floor);
}

ChannelComponents simulate_components(std::span<const std::complex<double>> input, const VarianceProfile &profile,
                                      const GainModel &model, const ChannelConfig &config, std::size_t depth)
{
    validate(config);
    validate(model);
    require(!input.empty(), "simulate: input must contain at least one symbol");

    const std::size_t n = input.size();
    const std::size_t paths = std::min(depth, n - 1) + 1;
    const std::size_t chunks = (paths + paths_per_chunk - 1) / paths_per_chunk;

    std::vector<Signal> partial(chunks, Signal(n));
    parallel_for(chunks, [&](std::size_t chunk) {
        Signal &acc = partial[chunk];
        const std::size_t end = std::min(paths, (chunk + 1) * paths_per_chunk);
        for (std::size_t l = chunk * paths_per_chunk; l < end; ++l)
        {
            const double variance = alpha(profile, l);
            if (variance == 0.0)
                continue;
            const auto gains = sample_path({model, variance}, n, config.seed, l);
            for (std::size_t k = l; k < n; ++k)
                acc[k] += gains[k] * input[k - l];
        }
    });

    ChannelComponents out{Signal(n), Signal(n)};
    for (const auto &acc : partial)
        for (std::size_t k = 0; k < n; ++k)
            out.interference[k] += acc[k];

    // Unit-variance draws scaled afterwards: changing sigma^2 rescales the noise and nothing else.
    auto engine = rng::stream(config.seed, rng::Domain::Noise);
    rng::ComplexGaussian draw;
    const double scale = std::sqrt(config.noise_variance);
    for (auto &z : out.noise)
        z = scale * draw(engine, 1.0);
    return out;
}

ChannelComponents simulate_components(std::span<const std::complex<double>> input, const VarianceProfile &profile,
                                      const GainModel &model, const ChannelConfig &config)
{
    return simulate_components(input, profile, model, config, truncation_depth(profile, input, config));
}

Signal simulate(std::span<const std::complex<double>> input, const VarianceProfile &profile, const GainModel &model,
                const ChannelConfig &config)
{
    return simulate_components(input, profile, model, config).output();
}

double theoretical_output_power(std::span<const std::complex<double>> input, const VarianceProfile &profile,
                                const ChannelConfig &config, std::size_t k)
{
    require(k >= 1 && k <= input.size(), "theoretical_output_power: time index must lie in [1, n]");
    const std::size_t depth = std::min(truncation_depth(profile, input, config), k - 1);
    double power = config.noise_variance;
    for (std::size_t l = 0; l <= depth; ++l)
        power += alpha(profile, l) * std::norm(input[k - 1 - l]);
    return power;
}
} // namespace mpfade
