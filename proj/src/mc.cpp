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

#include "mpfade/mc.hpp"

#include "mpfade/bounds.hpp"
#include "mpfade/error.hpp"
#include "mpfade/format.hpp"
#include "mpfade/parallel.hpp"
#include "mpfade/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpfade
{
namespace
{
constexpr std::size_t shard_size = 4096;

// Relative size of the neglected interference tail in the steady-state sum.
constexpr double interference_tail_tolerance = 1e-17;

struct Moments
{
    std::size_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x)
    {
        ++count;
        const double delta = x - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (x - mean);
    }

    // Chan et al. pairwise combination.
    void merge(const Moments &other)
    {
        if (other.count == 0)
            return;
        const double n = static_cast<double>(count + other.count);
        const double delta = other.mean - mean;
        mean += delta * static_cast<double>(other.count) / n;
        m2 += other.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(other.count) / n;
        count += other.count;
    }
};

McEstimate to_estimate(const Moments &m, std::uint64_t seed)
{
    const double n = static_cast<double>(m.count);
    const double variance = m.count > 1 ? m.m2 / (n - 1.0) : 0.0;
    return {m.mean, std::sqrt(variance / n), m.count, seed};
}

void require_tail_condition(const SignalingScheme &scheme, const VarianceProfile &profile, double noise_variance)
{
    if (!tail_condition_holds(profile, scheme.power(), noise_variance, scheme.guard_length()))
        throw std::invalid_argument("lemma-1 bound: tail beyond L = " + std::to_string(scheme.guard_length()) +
                                    " carries more than the noise power at P = " + format_real(scheme.power()));
}
} // namespace

bool tail_condition_holds(const VarianceProfile &profile, double power, double noise_variance, std::size_t guard_length)
{
    return tail_sum(profile, guard_length) * power <= noise_variance;
}

double interference_power(const SignalingScheme &scheme, const VarianceProfile &profile, double noise_variance,
                          std::size_t symbol, std::optional<std::size_t> block)
{
    require(noise_variance > 0.0, "interference_power: noise variance must be positive");
    require(symbol >= 1 && symbol <= scheme.data_symbols(), "interference_power: symbol must lie in [1, tau]");
    if (!profile.summable())
        throw std::domain_error("interference_power: profile " + profile.describe() + " has no summable tail");

    const std::size_t guard = scheme.guard_length();
    const std::size_t period = scheme.block_length();
    const std::size_t position = guard + symbol - 1; // 0-based offset inside the block

    std::vector<double> moments(scheme.data_symbols());
    for (std::size_t nu = 1; nu <= moments.size(); ++nu)
        moments[nu - 1] = symbol_second_moment(scheme, nu);
    const double peak_moment = moments.back();

    // Lags available before time k = b (L + tau) + L + nu.
    constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();
    const std::size_t history = block ? *block * period + position : unlimited;
    const std::size_t last = last_path(profile).value_or(unlimited);

    double sum = 0.0;
    for (std::size_t lag = 1;; ++lag)
    {
        if (lag > history || lag > last)
            break;
        const std::size_t offset = (position + period - lag % period) % period;
        if (offset >= guard)
            sum += alpha(profile, lag) * moments[offset - guard];
        if (last == unlimited && tail_sum(profile, lag) * peak_moment <= interference_tail_tolerance * (sum + noise_variance))
            break;
    }
    return sum + noise_variance;
}

double lemma1_bound_exact(const SignalingScheme &scheme, const VarianceProfile &profile, const GainModel &model,
                          double noise_variance, std::size_t symbol)
{
    require(symbol >= 1 && symbol <= scheme.data_symbols(), "lemma1_bound_exact: symbol must lie in [1, tau]");
    require_tail_condition(scheme, profile, noise_variance);
    const double e_log = expected_log_sq({model, profile.alpha0()});
    const double tau = static_cast<double>(scheme.data_symbols());
    return std::log(std::log(scheme.power()) / tau) +
           upsilon(profile.alpha0(), total_sum(profile), noise_variance, e_log);
}

McEstimate lemma1_penalty_mc(const MagnitudeLaw &law, double alpha0, double interference, std::size_t samples,
                             std::uint64_t seed, std::uint64_t stream)
{
    validate(law);
    require(alpha0 > 0.0, "lemma1_penalty_mc: alpha0 must be positive");
    require(interference >= 0.0, "lemma1_penalty_mc: interference power must be nonnegative");
    require(samples >= min_mc_samples, "lemma1_penalty_mc: at least 1000 samples are required");

    const double log_pi_e = std::log(std::numbers::pi * std::numbers::e);
    const double sigma_h = std::sqrt(alpha0);
    const std::size_t shards = (samples + shard_size - 1) / shard_size;

    std::vector<Moments> partial(shards);
    parallel_for(shards, [&](std::size_t shard) {
        auto engine = rng::stream(seed, rng::Domain::MonteCarlo, stream, shard);
        const std::size_t count = std::min(shard_size, samples - shard * shard_size);
        Moments &m = partial[shard];
        for (std::size_t i = 0; i < count; ++i)
        {
            const double squared = sample_squared_magnitude(law, engine);
            m.add(log_pi_e + 2.0 * std::log(sigma_h + std::sqrt(interference / squared)));
        }
    });

    Moments total;
    for (const auto &m : partial)
        total.merge(m);
    return to_estimate(total, seed);
}

McEstimate lemma1_bound_mc(const SignalingScheme &scheme, const VarianceProfile &profile, const GainModel &model,
                           double noise_variance, std::size_t symbol, std::size_t samples, std::uint64_t seed,
                           std::optional<std::size_t> block)
{
    require_tail_condition(scheme, profile, noise_variance);
    const double interference = interference_power(scheme, profile, noise_variance, symbol, block);
    const double e_log = expected_log_sq({model, profile.alpha0()});
    const McEstimate penalty =
        lemma1_penalty_mc(scheme.symbol_law(symbol), profile.alpha0(), interference, samples, seed, symbol);
    return {entropy_identity(scheme, symbol) + e_log - penalty.value, penalty.standard_error, penalty.samples, seed};
}

McEstimate scheme_lower_bound_mc(const SignalingScheme &scheme, const VarianceProfile &profile, const GainModel &model,
                                 double noise_variance, std::size_t samples, std::uint64_t seed)
{
    const std::size_t tau = scheme.data_symbols();
    const std::size_t per_symbol = std::max(min_mc_samples, samples / tau);
    const double period = static_cast<double>(scheme.block_length());

    double sum = 0.0;
    double variance = 0.0;
    std::size_t used = 0;
    for (std::size_t nu = 1; nu <= tau; ++nu)
    {
        const McEstimate e = lemma1_bound_mc(scheme, profile, model, noise_variance, nu, per_symbol, seed);
        sum += e.value;
        variance += e.standard_error * e.standard_error;
        used += e.samples;
    }
    return {sum / period, std::sqrt(variance) / period, used, seed};
}

OracleResult mi_oracle_scalar(const MagnitudeLaw &law, double alpha0, double noise_variance, std::size_t resolution,
                              double tolerance, std::size_t max_refinements)
{
    validate(law);
    require(alpha0 > 0.0, "mi_oracle_scalar: alpha0 must be positive");
    require(noise_variance > 0.0 && std::isfinite(noise_variance), "mi_oracle_scalar: noise variance must be positive");
    require(resolution >= 3, "mi_oracle_scalar: resolution must be at least 3");
    require(tolerance > 0.0, "mi_oracle_scalar: tolerance must be positive");

    // I = h(|Y|^2) - E h(|Y|^2 given |X|), where |Y|^2 given |X|^2 = s is exponential with mean alpha0 s + sigma^2.
    auto evaluate = [&](std::size_t n) {
        std::vector<double> means;
        std::vector<double> weights;
        if (const auto *c = std::get_if<ConstantMagnitude>(&law))
        {
            means = {alpha0 * c->squared + noise_variance};
            weights = {1.0};
        }
        else
        {
            const auto &u = std::get<LogUniformMagnitude>(law);
            const double lo = std::log(u.lower);
            const double width = std::log(u.upper) - lo;
            const double step = width / static_cast<double>(n - 1);
            means.resize(n);
            weights.assign(n, step / width);
            weights.front() *= 0.5;
            weights.back() *= 0.5;
            for (std::size_t i = 0; i < n; ++i)
                means[i] = alpha0 * std::exp(lo + step * static_cast<double>(i)) + noise_variance;
        }

        const auto [min_it, max_it] = std::minmax_element(means.begin(), means.end());
        // Below e^-36 of the smallest mean and above 60x the largest the integrand is under 1e-14.
        const double t_lo = std::log(*min_it) - 36.0;
        const double t_hi = std::log(*max_it) + std::log(60.0);
        const double dt = (t_hi - t_lo) / static_cast<double>(n - 1);

        std::vector<double> output_entropy(n);
        parallel_for(n, [&](std::size_t j) {
            const double v = std::exp(t_lo + dt * static_cast<double>(j));
            double density = 0.0;
            for (std::size_t i = 0; i < means.size(); ++i)
                density += weights[i] * std::exp(-v / means[i]) / means[i];
            const double w = (j == 0 || j == n - 1) ? 0.5 * dt : dt;
            output_entropy[j] = density > 0.0 ? -w * density * std::log(density) * v : 0.0;
        });

        double h_output = 0.0;
        for (double term : output_entropy)
            h_output += term;
        double h_conditional = 1.0;
        for (std::size_t i = 0; i < means.size(); ++i)
            h_conditional += weights[i] * std::log(means[i]);
        return h_output - h_conditional;
    };

    std::string history;
    double previous = evaluate(resolution);
    history += format_real(previous, 10);
    for (std::size_t refinement = 0; refinement < max_refinements; ++refinement)
    {
        resolution = 2 * resolution - 1;
        const double current = evaluate(resolution);
        history += ", " + format_real(current, 10);
        const double change = std::abs(current - previous);
        if (change < tolerance)
            return {current, change, resolution};
        previous = current;
    }
    throw NumericError("mi_oracle_scalar: no convergence to " + format_real(tolerance) +
                       " nats; refinement history: " + history);
}
} // namespace mpfade
