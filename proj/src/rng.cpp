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

#include "mpfade/rng.hpp"

#include <cmath>

namespace mpfade::rng
{
namespace
{
std::uint64_t mix(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
} // namespace

std::uint64_t stream_key(std::uint64_t seed, Domain domain, std::uint64_t index0, std::uint64_t index1)
{
    std::uint64_t key = mix(seed);
    key = mix(key ^ static_cast<std::uint64_t>(domain));
    key = mix(key ^ index0);
    key = mix(key ^ index1);
    return key;
}

Engine stream(std::uint64_t seed, Domain domain, std::uint64_t index0, std::uint64_t index1)
{
    const std::uint64_t key = stream_key(seed, domain, index0, index1);
    std::seed_seq seq{static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)};
    return Engine(seq);
}

std::complex<double> ComplexGaussian::operator()(Engine &engine, double variance)
{
    const double scale = std::sqrt(0.5 * variance);
    const double re = standard_(engine);
    const double im = standard_(engine);
    return {scale * re, scale * im};
}
} // namespace mpfade::rng
