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

#include "mpfade/gains.hpp"

#include "mpfade/error.hpp"
#include "mpfade/format.hpp"
#include "mpfade/rng.hpp"
#include "mpfade/special.hpp"

#include <cmath>
#include <numbers>

namespace mpfade
{
namespace
{
// Innovation variance relative to the marginal variance.
double innovation_fraction(const GainModel &model)
{
    if (const auto *gm = std::get_if<GaussMarkov>(&model))
        return 1.0 - gm->correlation * gm->correlation;
    return 1.0;
}

void require_positive_variance(const GainProcessSpec &spec, const char *what)
{
    require(std::isfinite(spec.variance) && spec.variance > 0.0,
            std::string(what) + ": gain variance must be positive (zero-variance paths are outside the set of active paths)");
}
} // namespace

void validate(const GainModel &model)
{
    if (const auto *gm = std::get_if<GaussMarkov>(&model))
        require(std::isfinite(gm->correlation) && std::abs(gm->correlation) < 1.0,
                "Gauss-Markov model: |correlation| must be below 1");
}

std::string describe(const GainModel &model)
{
    if (const auto *gm = std::get_if<GaussMarkov>(&model))
        return "gauss-markov(a=" + format_real(gm->correlation) + ")";
    return "memoryless";
}

double entropy_rate(const GainProcessSpec &spec)
{
    validate(spec.model);
    require_positive_variance(spec, "entropy_rate");
    return std::log(std::numbers::pi * std::numbers::e * spec.variance * innovation_fraction(spec.model));
}

double expected_log_sq(const GainProcessSpec &spec)
{
    validate(spec.model);
    require_positive_variance(spec, "expected_log_sq");
    return std::log(spec.variance) - euler_gamma;
}

std::vector<std::complex<double>> sample_path(const GainProcessSpec &spec, std::size_t n, std::uint64_t seed,
                                              std::uint64_t path_index)
{
    validate(spec.model);
    require(n >= 1, "sample_path: horizon must be at least 1");
    require(std::isfinite(spec.variance) && spec.variance >= 0.0, "sample_path: variance must be nonnegative");

    std::vector<std::complex<double>> path(n);
    if (spec.variance == 0.0)
        return path;

    auto engine = rng::stream(seed, rng::Domain::PathGain, path_index);
    rng::ComplexGaussian draw;

    if (const auto *gm = std::get_if<GaussMarkov>(&spec.model))
    {
        const double a = gm->correlation;
        const double innovation = spec.variance * (1.0 - a * a);
        path[0] = draw(engine, spec.variance);
        for (std::size_t k = 1; k < n; ++k)
            path[k] = a * path[k - 1] + draw(engine, innovation);
    }
    else
    {
        for (auto &h : path)
            h = draw(engine, spec.variance);
    }
    return path;
}

double inf_h_minus_logalpha([[maybe_unused]] const VarianceProfile &profile, const GainModel &model)
{
    validate(model);
    // h_l - log alpha_l = log(pi e * innovation fraction) on every active path; alpha_0 > 0 keeps the set nonempty.
    return std::log(std::numbers::pi * std::numbers::e * innovation_fraction(model));
}
} // namespace mpfade
