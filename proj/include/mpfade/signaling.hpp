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

#include "mpfade/rng.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

namespace mpfade
{
// ================================================================================================
// Magnitude laws of a circularly-symmetric scalar input
// ================================================================================================

/// |X|^2 = squared, deterministically.
struct ConstantMagnitude
{
    double squared;
};

/// log|X|^2 uniform on [log lower, log upper].
struct LogUniformMagnitude
{
    double lower;
    double upper;
};

using MagnitudeLaw = std::variant<ConstantMagnitude, LogUniformMagnitude>;

void validate(const MagnitudeLaw &law);

/// E|X|^2
double second_moment(const MagnitudeLaw &law);

/// One draw of |X|^2.
double sample_squared_magnitude(const MagnitudeLaw &law, rng::Engine &engine);

// ================================================================================================
// Block signaling: L guard zeros followed by tau log-uniform data symbols
// ================================================================================================

class SignalingScheme
{
public:
    /// Requires power > 1 and data_symbols >= 1.
    SignalingScheme(std::size_t guard_length, std::size_t data_symbols, double power);

    std::size_t guard_length() const { return guard_; }
    std::size_t data_symbols() const { return data_; }
    std::size_t block_length() const { return guard_ + data_; }
    double power() const { return power_; }

    /// Law of |X_nu|^2 for the 1-based data symbol nu: log-uniform on [P^((nu-1)/tau), P^(nu/tau)].
    LogUniformMagnitude symbol_law(std::size_t symbol) const;

private:
    std::size_t guard_;
    std::size_t data_;
    double power_;
};

/// Block b of the input: guard zeros, then data symbols with independent uniform phases.
/// Deterministic in (seed, b); distinct blocks are independent.
std::vector<std::complex<double>> sample_block(const SignalingScheme &scheme, std::uint64_t seed, std::uint64_t block);

/// E|X_nu|^2 = tau (P^(nu/tau) - P^((nu-1)/tau)) / log P
double symbol_second_moment(const SignalingScheme &scheme, std::size_t symbol);

/// h(X_nu) - E log|X_nu|^2 = log log P^(1/tau) + log pi, the same for every symbol.
double entropy_identity(const SignalingScheme &scheme, std::size_t symbol);
} // namespace mpfade
