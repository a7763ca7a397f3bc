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
#include "mpfade/signaling.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace mpfade;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("scheme construction checks its parameters", "[signaling]")
{
    CHECK_THROWS_AS(SignalingScheme(1, 1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(SignalingScheme(1, 1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(SignalingScheme(1, 0, 10.0), std::invalid_argument);
    const SignalingScheme s(3, 5, 10.0);
    CHECK(s.block_length() == 8);
    CHECK_THROWS_AS(symbol_second_moment(s, 0), std::invalid_argument);
    CHECK_THROWS_AS(symbol_second_moment(s, 6), std::invalid_argument);
}

TEST_CASE("symbol laws have the stated endpoints", "[signaling]")
{
    const SignalingScheme unit(0, 1, std::numbers::e);
    CHECK(unit.symbol_law(1).lower == 1.0);
    CHECK(unit.symbol_law(1).upper == std::numbers::e);
    const SignalingScheme two(0, 2, 100.0);
    CHECK(two.symbol_law(2).lower == 10.0);
    CHECK(two.symbol_law(2).upper == 100.0);
    CHECK(two.symbol_law(1).lower == 1.0);
}

TEST_CASE("sampled blocks respect guard zeros and magnitude intervals", "[signaling][property]")
{
    // Exact interval check on |X|^2 draws; polar() rounding allows a few ulps on complex entries.
    const double ulps = 8.0 * std::numeric_limits<double>::epsilon();
    struct Case
    {
        std::size_t L, tau;
        double P;
    };
    for (const auto &c : {Case{0, 1, std::numbers::e}, Case{3, 4, 50.0}, Case{1, 2, 100.0}, Case{5, 7, 1e12}})
    {
        const SignalingScheme scheme(c.L, c.tau, c.P);
        for (std::uint64_t b = 0; b < 20000; ++b)
        {
            const auto block = sample_block(scheme, 17, b);
            REQUIRE(block.size() == c.L + c.tau);
            for (std::size_t i = 0; i < c.L; ++i)
                REQUIRE(block[i] == std::complex<double>(0.0, 0.0));
            for (std::size_t nu = 1; nu <= c.tau; ++nu)
            {
                const auto law = scheme.symbol_law(nu);
                const double s = std::norm(block[c.L + nu - 1]);
                REQUIRE(s >= law.lower * (1.0 - ulps));
                REQUIRE(s <= law.upper * (1.0 + ulps));
            }
        }
    }

    auto engine = rng::stream(3, rng::Domain::Signaling);
    const SignalingScheme two(0, 2, 100.0);
    for (int i = 0; i < 200000; ++i)
    {
        const double s = sample_squared_magnitude(two.symbol_law(2), engine);
        REQUIRE(s >= 10.0);
        REQUIRE(s <= 100.0);
        const double t = sample_squared_magnitude(LogUniformMagnitude{1.0, std::numbers::e}, engine);
        REQUIRE(t >= 1.0);
        REQUIRE(t <= std::numbers::e);
    }
}

TEST_CASE("blocks are deterministic per (seed, block) and independent across blocks", "[signaling][property]")
{
    const SignalingScheme scheme(2, 3, 1e4);
    CHECK(sample_block(scheme, 5, 9) == sample_block(scheme, 5, 9));
    CHECK(sample_block(scheme, 5, 9) != sample_block(scheme, 5, 10));
    CHECK(sample_block(scheme, 5, 9) != sample_block(scheme, 6, 9));
}

TEST_CASE("phases are circularly symmetric", "[signaling][statistics]")
{
    const SignalingScheme scheme(0, 1, 1e3);
    std::complex<double> sum = 0.0;
    const std::size_t n = 100000;
    for (std::uint64_t b = 0; b < n; ++b)
    {
        const auto x = sample_block(scheme, 23, b)[0];
        sum += x / std::abs(x);
    }
    sum /= static_cast<double>(n);
    // each unit phasor component has variance 1/2
    CHECK(std::abs(sum.real()) < 3.0 * std::sqrt(0.5 / n));
    CHECK(std::abs(sum.imag()) < 3.0 * std::sqrt(0.5 / n));
}

TEST_CASE("symbol_second_moment examples", "[signaling]")
{
    CHECK_THAT(symbol_second_moment(SignalingScheme(0, 1, std::numbers::e), 1), WithinRel(std::numbers::e - 1.0, 1e-14));
    CHECK_THAT(symbol_second_moment(SignalingScheme(0, 1, 1.0 + 1e-9), 1), WithinAbs(1.0, 1e-8));
    // 2 (10 - 1) / log 100, 20-digit reference
    CHECK_THAT(symbol_second_moment(SignalingScheme(4, 2, 100.0), 1), WithinRel(3.9086503371292664489, 1e-13));
    CHECK_THAT(symbol_second_moment(SignalingScheme(4, 2, 100.0), 1), WithinRel(18.0 / std::log(100.0), 1e-13));
    CHECK_THAT(symbol_second_moment(SignalingScheme(0, 2, 100.0), 2), WithinRel(180.0 / std::log(100.0), 1e-13));
}

TEST_CASE("entropy_identity examples", "[signaling]")
{
    const double log_pi = std::log(std::numbers::pi);
    CHECK_THAT(entropy_identity(SignalingScheme(0, 1, std::exp(std::numbers::e)), 1), WithinAbs(1.0 + log_pi, 1e-14));
    CHECK_THAT(entropy_identity(SignalingScheme(2, 2, std::exp(2.0)), 2), WithinAbs(log_pi, 1e-14));
    CHECK_THAT(entropy_identity(SignalingScheme(0, 1, 1e6), 1), WithinRel(3.7705218003254109748, 1e-14));
    CHECK_THAT(entropy_identity(SignalingScheme(0, 1, 1e6), 1), WithinRel(std::log(6.0 * std::log(10.0)) + log_pi, 1e-14));
}

TEST_CASE("average block power never exceeds P", "[signaling][property]")
{
    std::mt19937_64 gen(77);
    std::uniform_int_distribution<std::size_t> guard(0, 40), data(1, 60);
    std::uniform_real_distribution<double> exponent(1e-6, 30.0);
    for (int i = 0; i < 2000; ++i)
    {
        const SignalingScheme s(guard(gen), data(gen), std::pow(10.0, exponent(gen)));
        double total = 0.0;
        for (std::size_t nu = 1; nu <= s.data_symbols(); ++nu)
        {
            const double m = symbol_second_moment(s, nu);
            CHECK(m <= s.power() * (1.0 + 1e-12));
            total += m;
        }
        CHECK(total / static_cast<double>(s.block_length()) <= s.power() * (1.0 + 1e-12));
    }
}

TEST_CASE("empirical second moment matches the closed form", "[signaling][statistics]")
{
    const SignalingScheme s(0, 3, 1e4);
    const std::size_t n = 1000000;
    for (std::size_t nu = 1; nu <= 3; ++nu)
    {
        auto engine = rng::stream(31, rng::Domain::Signaling, nu);
        double sum = 0.0, sum_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i)
        {
            const double v = sample_squared_magnitude(s.symbol_law(nu), engine);
            sum += v;
            sum_sq += v * v;
        }
        const double mean = sum / n;
        const double sd = std::sqrt((sum_sq / n - mean * mean) * n / (n - 1.0));
        INFO("nu " << nu << " mean " << mean);
        CHECK(std::abs(mean - symbol_second_moment(s, nu)) < 3.0 * sd / std::sqrt(static_cast<double>(n)));
    }
}

TEST_CASE("log-magnitudes pass a Kolmogorov-Smirnov test against the uniform law", "[signaling][statistics]")
{
    const SignalingScheme s(1, 4, 1e8);
    const std::size_t n = 100000;
    const double critical = std::sqrt(-0.5 * std::log(1e-3 / 2.0)) / std::sqrt(static_cast<double>(n));
    for (std::size_t nu = 1; nu <= 4; ++nu)
    {
        const auto law = s.symbol_law(nu);
        const double lo = std::log(law.lower), hi = std::log(law.upper);
        std::vector<double> u(n);
        for (std::size_t b = 0; b < n; ++b)
        {
            const auto block = sample_block(s, 41, b);
            u[b] = (std::log(std::norm(block[s.guard_length() + nu - 1])) - lo) / (hi - lo);
        }
        std::sort(u.begin(), u.end());
        double d = 0.0;
        for (std::size_t i = 0; i < n; ++i)
        {
            const double x = std::clamp(u[i], 0.0, 1.0);
            d = std::max({d, static_cast<double>(i + 1) / n - x, x - static_cast<double>(i) / n});
        }
        INFO("nu " << nu << " D = " << d << " critical " << critical);
        CHECK(d < critical);
    }
}
