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

#include "cli_app.hpp"

#include "mpfade/error.hpp"
#include "mpfade/sweep.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace mpfade::cli
{
namespace
{
std::string read_file(const std::string &path)
{
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw std::invalid_argument("cannot read config file '" + path + "'");
    std::ostringstream text;
    text << file.rdbuf();
    return text.str();
}

struct SweepArgs
{
    std::string config;
    std::vector<std::pair<std::string, std::string>> overrides;
    std::string out_dir;
    std::string csv;
    std::string svg;
    bool plot = false;
};
} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Capacity bounds for noncoherent multipath fading channels", "mpfade"};
    app.require_subcommand(1);

    std::string classify_profile;
    auto *classify_cmd = app.add_subcommand("classify", "Classify a variance profile as bounded or unbounded capacity");
    classify_cmd->add_option("profile", classify_profile, "Profile spec, e.g. \"geometric rho=0.3679\"")->required();

    SweepArgs sweep;
    auto *sweep_cmd = app.add_subcommand("sweep", "Evaluate all applicable bounds on a log-spaced SNR grid");
    sweep_cmd->add_option("--config", sweep.config, "key = value file; flags override its entries");
    auto override_opt = [&](const std::string &flag, const std::string &key, const std::string &help) {
        sweep_cmd->add_option_function<std::string>(
            flag, [&sweep, key](const std::string &v) { sweep.overrides.emplace_back(key, v); }, help);
    };
    override_opt("--profile", "profile", "Profile spec (geometric, superexp, finite, table)");
    override_opt("--model", "model", "Gain model: memoryless | \"gauss-markov a=<x>\"");
    override_opt("--sigma2", "sigma2", "Noise variance");
    override_opt("--snr-grid", "snr_grid", "start:end:points in log10(SNR)");
    override_opt("--l-rule", "l_rule", "min | varrho:<x>");
    override_opt("--tau-rule", "tau_rule", "L | fixed:<n> | scaled:<c>");
    override_opt("--samples", "samples", "Monte Carlo samples per grid point (0 disables)");
    override_opt("--seed", "seed", "RNG seed");
    sweep_cmd->add_option("--out-dir", sweep.out_dir, "Write sweep.csv (and sweep.svg with --plot) here");
    sweep_cmd->add_option("--csv", sweep.csv, "CSV output path (default: stdout unless --out-dir)");
    sweep_cmd->add_option("--svg", sweep.svg, "SVG output path");
    sweep_cmd->add_flag("--plot", sweep.plot, "Also write sweep.svg into --out-dir");

    DemoOptions demo;
    std::string demo_dir = demo.out_dir.string();
    auto *demo_cmd = app.add_subcommand("demo", "Write the three regime scenarios with a manifest");
    demo_cmd->add_option("--out-dir", demo_dir, "Output directory")->capture_default_str();
    demo_cmd->add_option("--samples", demo.mc_samples, "Monte Carlo samples per grid point")->capture_default_str();
    demo_cmd->add_option("--seed", demo.seed, "RNG seed")->capture_default_str();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try
    {
        if (*classify_cmd)
        {
            out << classification_line(parse_profile(classify_profile)) << "\n";
        }
        else if (*sweep_cmd)
        {
            SweepSpec spec;
            if (!sweep.config.empty())
                spec = apply_config(spec, parse_config(read_file(sweep.config)));
            spec = apply_config(spec, sweep.overrides);
            validate(spec);

            std::filesystem::path csv_path = sweep.csv;
            std::filesystem::path svg_path = sweep.svg;
            if (!sweep.out_dir.empty())
            {
                std::filesystem::create_directories(sweep.out_dir);
                if (csv_path.empty())
                    csv_path = std::filesystem::path(sweep.out_dir) / "sweep.csv";
                if (svg_path.empty() && sweep.plot)
                    svg_path = std::filesystem::path(sweep.out_dir) / "sweep.svg";
            }
            else if (sweep.plot && svg_path.empty())
                throw std::invalid_argument("--plot needs --out-dir (or give --svg)");

            const auto reports = run_sweep(spec);
            const auto csv = render_csv(spec, reports);
            if (csv_path.empty())
                out << csv;
            else
                write_text_file(csv_path, csv);
            if (!svg_path.empty())
                write_text_file(svg_path, render_sweep_svg(reports, spec.profile.describe() + ", " + describe(spec.model)));
        }
        else if (*demo_cmd)
        {
            demo.out_dir = demo_dir;
            require(demo.mc_samples == 0 || demo.mc_samples >= 1000, "demo: samples must be 0 or at least 1000");
            for (const auto &item : run_regimes_demo(demo))
                out << item.path.string() << "\n";
        }
        return ok;
    }
    catch (const std::invalid_argument &e)
    {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << "\n";
        return numeric_failure;
    }
}
} // namespace mpfade::cli
