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

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace mpfade
{
// ================================================================================================
// Variance profile {alpha_l}: the per-path power gains E|H_k^(l)|^2
// ================================================================================================

/// Behavior of a table profile beyond its stored values.
enum class TailTag
{
    Zero,       ///< alpha_l = 0 beyond the table
    Undeclared, ///< nothing is known; queries beyond the table are errors
};

/// alpha_l = alpha0 * ratio^l, 0 < ratio < 1
struct Geometric
{
    double ratio;
};

/// alpha_l = alpha0 * exp(-l^exponent), exponent > 1
struct SuperExponential
{
    double exponent;
};

/// alpha_0 .. alpha_L stored explicitly, zero beyond
struct Finite
{
    std::vector<double> values;
};

/// Numeric table with a declared tail behavior
struct Table
{
    std::vector<double> values;
    TailTag tail;
};

using ProfileFamily = std::variant<Geometric, SuperExponential, Finite, Table>;

/// Immutable sequence of path-gain variances. Every constructor enforces alpha_0 > 0,
/// alpha_l >= 0 and a finite supremum.
class VarianceProfile
{
public:
    static VarianceProfile geometric(double ratio, double alpha0 = 1.0);
    static VarianceProfile super_exponential(double exponent, double alpha0 = 1.0);
    static VarianceProfile finite(std::vector<double> values);
    static VarianceProfile table(std::vector<double> values, TailTag tail);

    double alpha0() const { return alpha0_; }
    const ProfileFamily &family() const { return family_; }

    /// True when sum_l alpha_l is finite and computable.
    bool summable() const;

    /// True when alpha_l = 0 for all l beyond some finite index.
    bool has_finite_paths() const;

    /// Short identifier, e.g. "geometric(rho=0.5,alpha0=1)".
    std::string describe() const;

private:
    VarianceProfile(ProfileFamily family, double alpha0);

    ProfileFamily family_;
    double alpha0_;
};

/// alpha_l. Throws std::out_of_range for a table with undeclared tail queried past its end.
double alpha(const VarianceProfile &profile, std::size_t path);

/// sum_{l > path} alpha_l. Throws std::domain_error for non-summable profiles.
double tail_sum(const VarianceProfile &profile, std::size_t path);

/// sum_{l >= 0} alpha_l
double total_sum(const VarianceProfile &profile);

/// Index of the last stored path for finite-path profiles, nullopt for infinite ones.
std::optional<std::size_t> last_path(const VarianceProfile &profile);

// ================================================================================================
// Bounded / unbounded capacity classification
// ================================================================================================

enum class Verdict
{
    BoundedCapacity,
    UnboundedCapacity,
    Indeterminate,
};

/// (rho, l0) with alpha_{l0} > 0 and alpha_{l+1} / alpha_l >= rho for all l >= l0.
struct RatioWitness
{
    double rho;
    std::size_t l0;
};

/// Why (1/l) log(1/alpha_l) diverges.
enum class Divergence
{
    FinitePaths,
    SuperExponentialDecay,
};

struct Classification
{
    Verdict verdict;
    std::optional<RatioWitness> witness;   // set iff BoundedCapacity
    std::optional<Divergence> divergence;  // set iff UnboundedCapacity
};

/// Certifies the ratio conditions from the family's closed form. Numeric tables without a
/// declared zero tail are never guessed at: they come back Indeterminate.
Classification classify(const VarianceProfile &profile);

/// Smallest positive L with tail_sum(profile, L) * power <= noise_variance.
std::size_t choose_L(const VarianceProfile &profile, double power, double noise_variance);

/// ceil( log(power / noise_variance * varrho / (1 - varrho)) / log(1 / varrho) ), raised to at
/// least 1. The result satisfies varrho^(L+1) / (1 - varrho) * power <= noise_variance, so it meets
/// the tail condition for every profile with alpha_l < varrho^l beyond L.
std::size_t choose_L_geometric(double varrho, double power, double noise_variance);
} // namespace mpfade
