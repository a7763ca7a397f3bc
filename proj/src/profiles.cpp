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

#include "mpfade/profiles.hpp"

#include "mpfade/error.hpp"
#include "mpfade/format.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mpfade
{
namespace
{
template <class... Ts>
struct overloaded : Ts...
{
    using Ts::operator()...;
};

constexpr double super_exponential_relative_tolerance = 1e-16;

void validate_values(const std::vector<double> &values, const char *what)
{
    require(!values.empty(), std::string(what) + ": at least one value is required");
    for (double v : values)
        require(std::isfinite(v) && v >= 0.0, std::string(what) + ": values must be finite and nonnegative");
    require(values.front() > 0.0, std::string(what) + ": alpha_0 must be positive");
}

double stored_tail(const std::vector<double> &values, std::size_t path)
{
    double sum = 0.0;
    for (std::size_t l = path + 1; l < values.size(); ++l)
        sum += values[l];
    return sum;
}
} // namespace

VarianceProfile::VarianceProfile(ProfileFamily family, double alpha0) : family_(std::move(family)), alpha0_(alpha0) {}

VarianceProfile VarianceProfile::geometric(double ratio, double alpha0)
{
    require(ratio > 0.0 && ratio < 1.0, "geometric profile: ratio must lie in (0, 1)");
    require(alpha0 > 0.0 && std::isfinite(alpha0), "geometric profile: alpha0 must be positive and finite");
    return VarianceProfile(Geometric{ratio}, alpha0);
}

VarianceProfile VarianceProfile::super_exponential(double exponent, double alpha0)
{
    require(exponent > 1.0 && std::isfinite(exponent), "super-exponential profile: exponent must exceed 1");
    require(alpha0 > 0.0 && std::isfinite(alpha0), "super-exponential profile: alpha0 must be positive and finite");
    return VarianceProfile(SuperExponential{exponent}, alpha0);
}

VarianceProfile VarianceProfile::finite(std::vector<double> values)
{
    validate_values(values, "finite profile");
    const double a0 = values.front();
    return VarianceProfile(Finite{std::move(values)}, a0);
}

VarianceProfile VarianceProfile::table(std::vector<double> values, TailTag tail)
{
    validate_values(values, "table profile");
    const double a0 = values.front();
    return VarianceProfile(Table{std::move(values), tail}, a0);
}

bool VarianceProfile::summable() const
{
    if (const auto *t = std::get_if<Table>(&family_))
        return t->tail == TailTag::Zero;
    return true;
}

bool VarianceProfile::has_finite_paths() const
{
    if (std::holds_alternative<Finite>(family_))
        return true;
    if (const auto *t = std::get_if<Table>(&family_))
        return t->tail == TailTag::Zero;
    return false;
}

std::string VarianceProfile::describe() const
{
    auto join = [](const std::vector<double> &values) {
        std::string out;
        for (std::size_t i = 0; i < values.size(); ++i)
            out += (i ? ";" : "") + format_real(values[i]);
        return out;
    };
    return std::visit(overloaded{
                          [&](const Geometric &g) {
                              return "geometric(rho=" + format_real(g.ratio) + ",alpha0=" + format_real(alpha0_) + ")";
                          },
                          [&](const SuperExponential &s) {
                              return "superexp(kappa=" + format_real(s.exponent) + ",alpha0=" + format_real(alpha0_) + ")";
                          },
                          [&](const Finite &f) { return "finite(" + join(f.values) + ")"; },
                          [&](const Table &t) {
                              return "table(" + join(t.values) + (t.tail == TailTag::Zero ? ",tail=zero)" : ",tail=undeclared)");
                          },
                      },
                      family_);
}

double alpha(const VarianceProfile &profile, std::size_t path)
{
    const double l = static_cast<double>(path);
    return std::visit(overloaded{
                          [&](const Geometric &g) { return profile.alpha0() * std::pow(g.ratio, l); },
                          [&](const SuperExponential &s) { return profile.alpha0() * std::exp(-std::pow(l, s.exponent)); },
                          [&](const Finite &f) { return path < f.values.size() ? f.values[path] : 0.0; },
                          [&](const Table &t) {
                              if (path < t.values.size())
                                  return t.values[path];
                              if (t.tail == TailTag::Zero)
                                  return 0.0;
                              throw std::out_of_range("alpha: table profile queried beyond its length with undeclared tail");
                          },
                      },
                      profile.family());
}

double tail_sum(const VarianceProfile &profile, std::size_t path)
{
    if (!profile.summable())
        throw std::domain_error("tail_sum: profile " + profile.describe() + " has no summable tail");

    return std::visit(overloaded{
                          [&](const Geometric &g) {
                              return profile.alpha0() * std::pow(g.ratio, static_cast<double>(path) + 1.0) / (1.0 - g.ratio);
                          },
                          [&](const SuperExponential &) {
                              // Terms decay faster than geometrically, so the truncation error is below the
                              // first neglected term.
                              double sum = 0.0;
                              for (std::size_t l = path + 1;; ++l)
                              {
                                  const double term = alpha(profile, l);
                                  if (term == 0.0 || term < super_exponential_relative_tolerance * sum)
                                      break;
                                  sum += term;
                              }
                              return sum;
                          },
                          [&](const Finite &f) { return stored_tail(f.values, path); },
                          [&](const Table &t) { return stored_tail(t.values, path); },
                      },
                      profile.family());
}

double total_sum(const VarianceProfile &profile)
{
    return profile.alpha0() + tail_sum(profile, 0);
}

std::optional<std::size_t> last_path(const VarianceProfile &profile)
{
    if (const auto *f = std::get_if<Finite>(&profile.family()))
        return f->values.size() - 1;
    if (const auto *t = std::get_if<Table>(&profile.family()); t && t->tail == TailTag::Zero)
        return t->values.size() - 1;
    return std::nullopt;
}

Classification classify(const VarianceProfile &profile)
{
    return std::visit(overloaded{
                          [](const Geometric &g) {
                              return Classification{Verdict::BoundedCapacity, RatioWitness{g.ratio, 1}, std::nullopt};
                          },
                          [](const SuperExponential &) {
                              return Classification{Verdict::UnboundedCapacity, std::nullopt, Divergence::SuperExponentialDecay};
                          },
                          [](const Finite &) {
                              return Classification{Verdict::UnboundedCapacity, std::nullopt, Divergence::FinitePaths};
                          },
                          [](const Table &t) {
                              if (t.tail == TailTag::Zero)
                                  return Classification{Verdict::UnboundedCapacity, std::nullopt, Divergence::FinitePaths};
                              return Classification{Verdict::Indeterminate, std::nullopt, std::nullopt};
                          },
                      },
                      profile.family());
}

std::size_t choose_L(const VarianceProfile &profile, double power, double noise_variance)
{
    require(power > 0.0 && std::isfinite(power), "choose_L: power must be positive and finite");
    require(noise_variance > 0.0 && std::isfinite(noise_variance), "choose_L: noise variance must be positive and finite");
    if (!profile.summable())
        throw std::domain_error("choose_L: profile " + profile.describe() + " has no summable tail");

    auto satisfied = [&](std::size_t L) { return tail_sum(profile, L) * power <= noise_variance; };

    if (satisfied(1))
        return 1;

    // tail_sum is nonincreasing in L: gallop to a satisfying bound, then bisect.
    std::size_t lo = 1;
    std::size_t hi = 2;
    while (!satisfied(hi))
    {
        lo = hi;
        if (hi > (std::size_t{1} << 40))
            throw NumericError("choose_L: tail does not fall below the noise floor");
        hi *= 2;
    }
    while (hi - lo > 1)
    {
        const std::size_t mid = lo + (hi - lo) / 2;
        (satisfied(mid) ? hi : lo) = mid;
    }
    return hi;
}

std::size_t choose_L_geometric(double varrho, double power, double noise_variance)
{
    require(varrho > 0.0 && varrho < 1.0, "choose_L_geometric: varrho must lie in (0, 1)");
    require(power > 0.0 && std::isfinite(power), "choose_L_geometric: power must be positive and finite");
    require(noise_variance > 0.0 && std::isfinite(noise_variance), "choose_L_geometric: noise variance must be positive");

    const double x = std::log(power / noise_variance * varrho / (1.0 - varrho)) / std::log(1.0 / varrho);
    std::size_t L = x < 1.0 ? 1 : static_cast<std::size_t>(std::ceil(x));

    // Same arithmetic as tail_sum for Geometric(varrho); rounding in the closed form can land one short.
    auto tail = [&](std::size_t n) { return std::pow(varrho, static_cast<double>(n) + 1.0) / (1.0 - varrho) * power; };
    while (tail(L) > noise_variance)
        ++L;
    return L;
}
} // namespace mpfade
