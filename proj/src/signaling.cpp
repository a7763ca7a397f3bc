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

#include "mpfade/signaling.hpp"

#include "mpfade/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mpfade
{
namespace
{
void require_symbol(const SignalingScheme &scheme, std::size_t symbol)
{
    require(symbol >= 1 && symbol <= scheme.data_symbols(), "signaling: data symbol index must lie in [1, tau]");
}
} // namespace

void validate(const MagnitudeLaw &law)
{
    if (const auto *c = std::get_if<ConstantMagnitude>(&law))
    {
        require(std::isfinite(c->squared) && c->squared > 0.0, "constant magnitude must be positive");
        return;
    }
    const auto &u = std::get<LogUniformMagnitude>(law);
    require(std::isfinite(u.lower) && std::isfinite(u.upper) && u.lower > 0.0 && u.upper > u.lower,
            "log-uniform magnitude: require 0 < lower < upper");
}

double second_moment(const MagnitudeLaw &law)
{
    validate(law);
    if (const auto *c = std::get_if<ConstantMagnitude>(&law))
        return c->squared;
    // E e^U for U ~ Uniform[a, b] is (e^b - e^a) / (b - a); written with expm1 for narrow intervals.
    const auto &u = std::get<LogUniformMagnitude>(law);
    const double width = std::log(u.upper / u.lower);
    return u.lower * std::expm1(width) / width;
}

double sample_squared_magnitude(const MagnitudeLaw &law, rng::Engine &engine)
{
    if (const auto *c = std::get_if<ConstantMagnitude>(&law))
        return c->squared;
    const auto &u = std::get<LogUniformMagnitude>(law);
    std::uniform_real_distribution<double> exponent(std::log(u.lower), std::log(u.upper));
    // Clamp guards the endpoints against exp/log rounding.
    return std::clamp(std::exp(exponent(engine)), u.lower, u.upper);
}

SignalingScheme::SignalingScheme(std::size_t guard_length, std::size_t data_symbols, double power)
    : guard_(guard_length), data_(data_symbols), power_(power)
{
    require(data_symbols >= 1, "signaling: at least one data symbol per block is required");
    require(std::isfinite(power) && power > 1.0, "signaling: power must exceed 1");
}

LogUniformMagnitude SignalingScheme::symbol_law(std::size_t symbol) const
{
    require_symbol(*this, symbol);
    const double tau = static_cast<double>(data_);
    return {std::pow(power_, static_cast<double>(symbol - 1) / tau), std::pow(power_, static_cast<double>(symbol) / tau)};
}

std::vector<std::complex<double>> sample_block(const SignalingScheme &scheme, std::uint64_t seed, std::uint64_t block)
{
    std::vector<std::complex<double>> out(scheme.block_length());
    auto engine = rng::stream(seed, rng::Domain::Signaling, block);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    for (std::size_t nu = 1; nu <= scheme.data_symbols(); ++nu)
    {
        const double magnitude = std::sqrt(sample_squared_magnitude(scheme.symbol_law(nu), engine));
        out[scheme.guard_length() + nu - 1] = std::polar(magnitude, phase(engine));
    }
    return out;
}

double symbol_second_moment(const SignalingScheme &scheme, std::size_t symbol)
{
    require_symbol(scheme, symbol);
    const double tau = static_cast<double>(scheme.data_symbols());
    const double step = std::log(scheme.power()) / tau;
    // tau (P^(nu/tau) - P^((nu-1)/tau)) / log P = P^((nu-1)/tau) expm1(step) / step
    return std::exp(step * static_cast<double>(symbol - 1)) * std::expm1(step) / step;
}

double entropy_identity(const SignalingScheme &scheme, std::size_t symbol)
{
    require_symbol(scheme, symbol);
    return std::log(std::log(scheme.power()) / static_cast<double>(scheme.data_symbols())) + std::log(std::numbers::pi);
}
} // namespace mpfade
