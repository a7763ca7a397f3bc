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

#include "mpfade/bounds.hpp"
#include "mpfade/gains.hpp"
#include "mpfade/profiles.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mpfade
{
// ================================================================================================
// Textual specs
//
//   profile:  "geometric rho=0.5 [alpha0=1]" | "superexp kappa=2 [alpha0=1]" | "finite 1,0.5"
//             | "table 1,0.5,0.25 tail=zero|undeclared"
//   model:    "memoryless" | "gauss-markov a=0.9"
//   L rule:   "min" (smallest L meeting the tail condition) | "varrho:0.5" (closed-form selector)
//   tau rule: "L" | "fixed:100" | "scaled:4" (tau = ceil(4 L))
// ================================================================================================

VarianceProfile parse_profile(const std::string &text);
std::string profile_spec(const VarianceProfile &profile);

GainModel parse_model(const std::string &text);
std::string model_spec(const GainModel &model);

struct LRule
{
    std::optional<double> varrho;
};

struct TauRule
{
    enum class Kind
    {
        EqualL,
        Fixed,
        Scaled,
    };
    Kind kind = Kind::EqualL;
    double value = 1.0;
};

LRule parse_l_rule(const std::string &text);
std::string l_rule_spec(const LRule &rule);
TauRule parse_tau_rule(const std::string &text);
std::string tau_rule_spec(const TauRule &rule);

std::size_t select_guard_length(const LRule &rule, const VarianceProfile &profile, double power, double noise_variance);
std::size_t select_data_symbols(const TauRule &rule, std::size_t guard_length);

// ================================================================================================
// SNR sweeps
// ================================================================================================

/// Log-spaced grid: points values 10^e for e from start to end inclusive.
struct SnrGrid
{
    double start_exponent = 0.0;
    double end_exponent = 16.0;
    std::size_t points = 17;
};

struct SweepSpec
{
    VarianceProfile profile = VarianceProfile::geometric(0.36787944117144233);
    GainModel model = MemorylessGaussian{};
    double noise_variance = 1.0;
    SnrGrid grid;
    LRule l_rule;
    TauRule tau_rule;
    std::size_t mc_samples = 0; ///< per grid point; 0 disables the Monte Carlo column
    std::uint64_t seed = 1;
};

/// Throws std::invalid_argument for a malformed spec: grid not strictly increasing (a single point
/// needs start == end), fewer than 1000 MC samples when enabled, nonpositive noise variance.
void validate(const SweepSpec &spec);

std::vector<double> grid_exponents(const SnrGrid &grid);

/// Every bound applicable at SNR = 10^exponent. Inapplicable entries stay empty.
BoundReport evaluate_point(const SweepSpec &spec, double exponent, std::size_t index);

/// Grid points are evaluated concurrently and returned in grid order.
std::vector<BoundReport> run_sweep(const SweepSpec &spec);

/// Resolved configuration as ordered key/value pairs (the keys accepted by apply_config).
std::vector<std::pair<std::string, std::string>> resolved_config(const SweepSpec &spec);

/// Parses "key = value" lines; '#' starts a comment. Throws std::invalid_argument on malformed lines.
std::vector<std::pair<std::string, std::string>> parse_config(const std::string &text);

/// Applies key/value settings on top of spec. Unknown keys throw std::invalid_argument.
SweepSpec apply_config(SweepSpec spec, const std::vector<std::pair<std::string, std::string>> &settings);

inline const std::vector<std::string> csv_columns = {
    "snr",          "log10_snr",    "upper_exponential",         "upper_duality",
    "L",            "tau",          "lower_closed_form_raw",     "lower_closed_form_clamped",
    "lower_mc",     "lower_mc_stderr", "loglog_snr",             "lower_over_loglog",
};

/// CSV with the resolved config as leading '#' lines; 12 significant digits, '.' decimal point,
/// empty cells for inapplicable values.
std::string render_csv(const SweepSpec &spec, const std::vector<BoundReport> &reports);

/// SVG of every nats-valued column against log10(snr).
std::string render_sweep_svg(const std::vector<BoundReport> &reports, const std::string &title);

// ================================================================================================
// Front-end operations
// ================================================================================================

/// "BOUNDED (rho=..., l0=...)", "UNBOUNDED", "UNBOUNDED (finite paths, pre-loglog regime)" or "INDETERMINATE".
std::string classification_line(const VarianceProfile &profile);

struct DemoOptions
{
    std::filesystem::path out_dir = "regimes";
    std::size_t mc_samples = 20000;
    std::uint64_t seed = 1;
};

struct DemoArtifact
{
    std::filesystem::path path;
    std::string description;
};

/// Writes the bounded-capacity, unbounded-capacity and finite-path scenarios (CSV + SVG each, a
/// tau sweep table for the finite-path case) plus manifest.txt into out_dir. Returns what was written.
std::vector<DemoArtifact> run_regimes_demo(const DemoOptions &options);

/// Finite-path tau sweep rows: L, tau, tau/(L+tau), and the lower bound over log log SNR at
/// SNR = 1e16 and at log SNR = 1e300.
struct TauSweepRow
{
    std::size_t guard_length;
    std::size_t data_symbols;
    double preloglog;
    double ratio_at_1e16;
    double ratio_at_log_snr_1e300;
};

std::vector<TauSweepRow> finite_tau_sweep(const VarianceProfile &profile, const GainModel &model, double noise_variance,
                                          const std::vector<std::size_t> &taus);

void write_text_file(const std::filesystem::path &path, const std::string &content);
} // namespace mpfade
