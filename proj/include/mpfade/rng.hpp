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

#include <complex>
#include <cstdint>
#include <random>

namespace mpfade::rng
{
// Stream domains keep the random sequences of different consumers disjoint.
enum class Domain : std::uint64_t
{
    PathGain = 1,
    Noise = 2,
    Signaling = 3,
    MonteCarlo = 4,
};

using Engine = std::mt19937_64;

// Mixes a seed with up to three indices into a 64-bit stream key (SplitMix64 finalizer chain).
std::uint64_t stream_key(std::uint64_t seed, Domain domain, std::uint64_t index0 = 0, std::uint64_t index1 = 0);

// Engine for the stream (seed, domain, index0, index1). Streams are a pure function of their key,
// so workers can reconstruct any stream without coordination.
Engine stream(std::uint64_t seed, Domain domain, std::uint64_t index0 = 0, std::uint64_t index1 = 0);

// Circularly-symmetric complex Gaussian: two independent real N(0, variance/2) components.
class ComplexGaussian
{
public:
    std::complex<double> operator()(Engine &engine, double variance);

private:
    std::normal_distribution<double> standard_{0.0, 1.0};
};
} // namespace mpfade::rng
