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

#include <charconv>
#include <stdexcept>
#include <string>

namespace mpfade
{
/// Locale-independent decimal rendering with the given number of significant digits.
inline std::string format_real(double value, int significant_digits = 12)
{
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, significant_digits);
    if (result.ec != std::errc())
        throw std::runtime_error("format_real: conversion failed");
    return std::string(buffer, result.ptr);
}
} // namespace mpfade
