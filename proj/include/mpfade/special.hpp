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

namespace mpfade
{
/// Euler-Mascheroni constant.
inline constexpr double euler_gamma = 0.57721566490153286061;

/// Natural logarithm of the Gamma function for x > 0.
///
/// Shifts the argument up to x >= 15 with the recurrence Gamma(x+1) = x Gamma(x) and evaluates
/// the Stirling series there. Absolute error is below 1e-13 on (0, 1].
double log_gamma(double x);
} // namespace mpfade
