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

#include <stdexcept>
#include <string>

namespace mpfade
{
// Invalid arguments and violated preconditions throw std::invalid_argument.
// A bound that does not apply to a profile (e.g. a non-summable tail) throws std::domain_error.
// NumericError is reserved for numerical procedures that fail to converge.
class NumericError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string &message)
{
    if (!condition)
        throw std::invalid_argument(message);
}
} // namespace mpfade
