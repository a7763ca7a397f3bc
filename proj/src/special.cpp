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

#include "mpfade/special.hpp"

#include "mpfade/error.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace mpfade
{
namespace
{
constexpr double stirling_threshold = 15.0;

// B_{2k} / (2k (2k - 1)) for k = 1..7
constexpr std::array<double, 7> stirling_coefficients = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
};

double stirling(double z)
{
    const double inv = 1.0 / z;
    const double inv_sq = inv * inv;
    double series = 0.0;
    double power = inv;
    for (double c : stirling_coefficients)
    {
        series += c * power;
        power *= inv_sq;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}
} // namespace

double log_gamma(double x)
{
    require(x > 0.0 && std::isfinite(x), "log_gamma: argument must be positive and finite");

    double shift = 0.0;
    while (x < stirling_threshold)
    {
        shift += std::log(x);
        x += 1.0;
    }
    return stirling(x) - shift;
}
} // namespace mpfade
