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

#include "mpfade/profiles.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace mpfade
{
/// IID circularly-symmetric complex Gaussian gains.
struct MemorylessGaussian
{
};

/// Stationary first-order Gauss-Markov gains: H_k = a H_{k-1} + U_k, |a| < 1.
struct GaussMarkov
{
    double correlation;
};

/// One model family shared by every path; the variance of path l comes from the profile.
using GainModel = std::variant<MemorylessGaussian, GaussMarkov>;

struct GainProcessSpec
{
    GainModel model;
    double variance;
};

/// Throws std::invalid_argument unless |correlation| < 1 for Gauss-Markov models.
void validate(const GainModel &model);

std::string describe(const GainModel &model);

/// Differential entropy rate h_l in nats: log(pi e) plus the log of the one-step innovation
/// variance. Requires variance > 0.
double entropy_rate(const GainProcessSpec &spec);

/// E log|H_1|^2 = log(variance) - euler_gamma. Requires variance > 0.
double expected_log_sq(const GainProcessSpec &spec);

/// n consecutive gains of one path. Deterministic in (seed, path_index); a zero-variance spec
/// yields zeros.
std::vector<std::complex<double>> sample_path(const GainProcessSpec &spec, std::size_t n, std::uint64_t seed,
                                              std::uint64_t path_index = 0);

/// inf over paths with alpha_l > 0 of (h_l - log alpha_l). For a single Gaussian family this is
/// independent of the profile.
double inf_h_minus_logalpha(const VarianceProfile &profile, const GainModel &model);
} // namespace mpfade
