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

#include "mpfade/sweep.hpp"

#include <catch_amalgamated.hpp>

#include <clocale>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

using namespace mpfade;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
using Table = std::vector<std::map<std::string, std::string>>;

Table parse_csv(const std::string &csv)
{
    std::istringstream in(csv);
    std::string line;
    std::vector<std::string> header;
    Table rows;
    while (std::getline(in, line))
    {
        if (line.empty() || line[0] == '#')
            continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream fields(line);
        while (std::getline(fields, cell, ','))
            cells.push_back(cell);
        if (line.back() == ',')
            cells.emplace_back();
        if (header.empty())
        {
            header = cells;
            continue;
        }
        REQUIRE(cells.size() == header.size());
        std::map<std::string, std::string> row;
        for (std::size_t i = 0; i < cells.size(); ++i)
            row[header[i]] = cells[i];
        rows.push_back(row);
    }
    return rows;
}

std::string read(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

double num(const std::string &cell)
{
    return std::stod(cell);
}

void check_sandwich(const Table &rows)
{
    for (const auto &row : rows)
    {
        if (row.at("lower_closed_form_clamped").empty())
            continue;
        double upper = INFINITY;
        for (const char *key : {"upper_exponential", "upper_duality"})
            if (!row.at(key).empty())
                upper = std::min(upper, num(row.at(key)));
        INFO("snr " << row.at("snr"));
        CHECK(num(row.at("lower_closed_form_clamped")) <= upper + 1e-9);
    }
}

SweepSpec geometric_spec(std::size_t samples = 0)
{
    SweepSpec spec;
    spec.profile = VarianceProfile::geometric(std::exp(-1.0));
    spec.mc_samples = samples;
    return spec;
}
} // namespace

TEST_CASE("profile specs parse and round-trip", "[sweep]")
{
    for (const std::string text : {"geometric rho=0.3679", "geometric rho=0.5 alpha0=2.5", "superexp kappa=2",
                                   "superexp kappa=1.5 alpha0=0.1", "finite 1.0,0.5", "finite 2",
                                   "table 1,0.25,0.125 tail=zero", "table 1,0.5", "  geometric   rho=0.9  "})
    {
        const auto p = parse_profile(text);
        const auto q = parse_profile(profile_spec(p));
        INFO(text << " -> " << profile_spec(p));
        CHECK(p.describe() == q.describe());
        for (std::size_t l = 0; l < 2; ++l)
            CHECK(alpha(p, l) == alpha(q, l));
    }
    CHECK(parse_profile("geometric rho=0.3679").describe() == VarianceProfile::geometric(0.3679).describe());
    CHECK_FALSE(parse_profile("table 1,0.5").summable());
    CHECK(parse_profile("table 1,0.5 tail=zero").summable());
}

TEST_CASE("malformed specs are usage errors", "[sweep]")
{
    for (const std::string text : {"", "geometric", "geometric rho=", "geometric rho=abc", "geometric rho=1.5",
                                   "geometric rho=0.5 rho=0.4", "geometric p=0.5", "superexp kappa=0.5", "finite",
                                   "finite 1,,2", "finite -1,2", "table 1,2 tail=maybe", "hyperbolic a=1"})
    {
        INFO("'" << text << "'");
        CHECK_THROWS_AS(parse_profile(text), std::invalid_argument);
    }
    CHECK_THROWS_AS(parse_model("gauss-markov"), std::invalid_argument);
    CHECK_THROWS_AS(parse_model("gauss-markov a=1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_model("rayleigh"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tau_rule("fixed:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tau_rule("scaled:-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tau_rule("double"), std::invalid_argument);
    CHECK_THROWS_AS(parse_l_rule("varrho:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_l_rule("max"), std::invalid_argument);
}

TEST_CASE("model and scheme rules round-trip", "[sweep]")
{
    CHECK(model_spec(parse_model("memoryless")) == "memoryless");
    CHECK(std::get<GaussMarkov>(parse_model(model_spec(parse_model("gauss-markov a=0.9")))).correlation == 0.9);
    for (const std::string rule : {"L", "fixed:100", "scaled:2.5"})
        CHECK(tau_rule_spec(parse_tau_rule(rule)) == rule);
    CHECK(l_rule_spec(parse_l_rule("min")) == "min");
    CHECK(l_rule_spec(parse_l_rule("varrho:0.5")) == "varrho:0.5");

    CHECK(select_data_symbols(parse_tau_rule("L"), 7) == 7);
    CHECK(select_data_symbols(parse_tau_rule("fixed:100"), 7) == 100);
    CHECK(select_data_symbols(parse_tau_rule("scaled:2.5"), 3) == 8);
    CHECK(select_data_symbols(parse_tau_rule("scaled:0.1"), 3) == 1);
    CHECK(select_guard_length(parse_l_rule("varrho:0.5"), VarianceProfile::super_exponential(2.0), 100.0, 1.0) == 7);
}

TEST_CASE("sweep specs are validated", "[sweep]")
{
    auto spec = geometric_spec();
    CHECK_NOTHROW(validate(spec));
    spec.grid = {3.0, 3.0, 1};
    CHECK_NOTHROW(validate(spec));
    spec.grid = {3.0, 4.0, 1};
    CHECK_THROWS_AS(validate(spec), std::invalid_argument);
    spec.grid = {4.0, 3.0, 5};
    CHECK_THROWS_AS(validate(spec), std::invalid_argument);
    spec.grid = {0.0, 16.0, 0};
    CHECK_THROWS_AS(validate(spec), std::invalid_argument);
    spec = geometric_spec(999);
    CHECK_THROWS_AS(validate(spec), std::invalid_argument);
    spec = geometric_spec();
    spec.noise_variance = 0.0;
    CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);

    const auto e = grid_exponents({0.0, 16.0, 17});
    REQUIRE(e.size() == 17);
    for (std::size_t i = 0; i < e.size(); ++i)
        CHECK(e[i] == static_cast<double>(i));
}

TEST_CASE("geometric sweep: one upper_exponential value for every row", "[sweep]")
{
    const auto spec = geometric_spec();
    const auto rows = parse_csv(render_csv(spec, run_sweep(spec)));
    REQUIRE(rows.size() == 17);
    for (const auto &row : rows)
        CHECK(row.at("upper_exponential") == rows.front().at("upper_exponential"));
    CHECK_THAT(num(rows.front().at("upper_exponential")), WithinAbs(1.33787706641, 1e-11));
    check_sandwich(rows);
}

TEST_CASE("single-point sweep at snr 1", "[sweep]")
{
    for (const std::string profile : {"geometric rho=0.3679", "superexp kappa=2", "finite 1.0,0.5"})
    {
        auto spec = geometric_spec();
        spec.profile = parse_profile(profile);
        spec.grid = {0.0, 0.0, 1};
        const auto rows = parse_csv(render_csv(spec, run_sweep(spec)));
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].at("snr") == "1");
        CHECK(num(rows[0].at("upper_duality")) > 0.0);
        CHECK(rows[0].at("lower_closed_form_raw").empty());
        CHECK(rows[0].at("loglog_snr").empty());
    }
}

TEST_CASE("inapplicable bounds are empty cells", "[sweep]")
{
    auto spec = geometric_spec();
    spec.profile = parse_profile("table 1,0.5");
    spec.grid = {0.0, 8.0, 5};
    const auto rows = parse_csv(render_csv(spec, run_sweep(spec)));
    for (const auto &row : rows)
        for (const char *key : {"upper_exponential", "upper_duality", "L", "tau", "lower_closed_form_raw", "lower_mc"})
            CHECK(row.at(key).empty());

    spec.profile = parse_profile("superexp kappa=2");
    for (const auto &row : parse_csv(render_csv(spec, run_sweep(spec))))
    {
        CHECK(row.at("upper_exponential").empty());
        CHECK_FALSE(row.at("upper_duality").empty());
    }

    // a selector that does not dominate the profile leaves the lower bound out
    spec.profile = VarianceProfile::geometric(0.9);
    spec.l_rule = parse_l_rule("varrho:0.2");
    for (const auto &row : parse_csv(render_csv(spec, run_sweep(spec))))
        if (num(row.at("snr")) > 1.0)
        {
            CHECK_FALSE(row.at("L").empty());
            CHECK(row.at("lower_closed_form_raw").empty());
        }
}

TEST_CASE("finite-path sweep, L=1, tau=100: the ratio column", "[sweep]")
{
    auto spec = geometric_spec();
    spec.profile = parse_profile("finite 1.0,0.5");
    spec.tau_rule = parse_tau_rule("fixed:100");
    const auto rows = parse_csv(render_csv(spec, run_sweep(spec)));
    const auto &last = rows.back();
    REQUIRE(last.at("snr") == "1e+16");
    CHECK(last.at("L") == "1");
    CHECK(last.at("tau") == "100");

    // independent evaluation of (tau / (L + tau)) (log(log P / tau) + Upsilon) / log log P
    const double ups = -0.57721566490153286061 - 1.0 - 2.0 * std::log(1.0 + std::sqrt(1.5 + 2.0));
    const double loglog = std::log(std::log(1e16));
    const double expected = 100.0 / 101.0 * (std::log(std::log(1e16) / 100.0) + ups) / loglog;
    CHECK_THAT(num(last.at("lower_over_loglog")), WithinAbs(expected, 1e-10));
    CHECK_THAT(num(last.at("lower_over_loglog")), WithinAbs(-1.28612914, 1e-7));
    CHECK_THAT(num(last.at("loglog_snr")), WithinRel(loglog, 1e-11));
}

TEST_CASE("CSV layout and numeric format", "[sweep]")
{
    const auto spec = geometric_spec();
    const auto csv = render_csv(spec, run_sweep(spec));
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "# mpfade sweep");
    std::size_t comments = 1;
    while (std::getline(in, line) && line[0] == '#')
        ++comments;
    CHECK(comments == 1 + resolved_config(spec).size());
    CHECK(line == "snr,log10_snr,upper_exponential,upper_duality,L,tau,lower_closed_form_raw,lower_closed_form_clamped,"
                  "lower_mc,lower_mc_stderr,loglog_snr,lower_over_loglog");
    for (const auto &row : parse_csv(csv))
        for (const auto &[key, value] : row)
        {
            if (value.empty() || key == "L" || key == "tau")
                continue;
            std::size_t digits = 0;
            for (char c : value.substr(0, value.find('e')))
                digits += std::isdigit(static_cast<unsigned char>(c)) ? 1 : 0;
            CHECK(digits <= 13); // 12 significant digits plus a possible leading "0."
            CHECK(value.find(',') == std::string::npos);
        }
}

TEST_CASE("CSV output ignores the process locale", "[sweep]")
{
    const auto spec = geometric_spec();
    const auto reports = run_sweep(spec);
    const auto reference = render_csv(spec, reports);
    bool switched = false;
    for (const char *name : {"de_DE.UTF-8", "de_DE.utf8", "fr_FR.UTF-8", "C.UTF-8"})
        if (std::setlocale(LC_ALL, name))
        {
            switched = true;
            CHECK(render_csv(spec, reports) == reference);
        }
    std::setlocale(LC_ALL, "C");
    if (!switched)
        WARN("no alternative locale installed; only the C locale was exercised");
}

TEST_CASE("identical specs give byte-identical CSV", "[sweep][property]")
{
    auto spec = geometric_spec(2000);
    spec.grid = {1.0, 9.0, 5};
    spec.seed = 77;
    const auto a = render_csv(spec, run_sweep(spec));
    const auto b = render_csv(spec, run_sweep(spec));
    CHECK(a == b);
    spec.seed = 78;
    CHECK(render_csv(spec, run_sweep(spec)) != a);
}

TEST_CASE("every row obeys the bound sandwich", "[sweep][property]")
{
    for (const std::string profile :
         {"geometric rho=0.3679", "geometric rho=0.9 alpha0=3", "superexp kappa=2", "finite 1,0.5,0.25", "table 2,1 tail=zero"})
        for (const std::string tau : {"L", "fixed:50", "scaled:3"})
        {
            auto spec = geometric_spec();
            spec.profile = parse_profile(profile);
            spec.tau_rule = parse_tau_rule(tau);
            spec.grid = {0.0, 20.0, 41};
            INFO(profile << " tau " << tau);
            check_sandwich(parse_csv(render_csv(spec, run_sweep(spec))));
        }
}

TEST_CASE("config text applies on top of defaults and round-trips", "[sweep]")
{
    const auto settings = parse_config("# comment\n"
                                       "profile = superexp kappa=2   # trailing comment\n"
                                       "model = gauss-markov a=0.5\n"
                                       "\n"
                                       "snr-grid = 2:6:3\n"
                                       "l_rule = varrho:0.5\n"
                                       "tau_rule = scaled:2\n"
                                       "samples = 1000\n"
                                       "seed = 9\n"
                                       "sigma2 = 0.25\n");
    const auto spec = apply_config(SweepSpec{}, settings);
    CHECK(profile_spec(spec.profile) == "superexp kappa=2 alpha0=1");
    CHECK(spec.grid.points == 3);
    CHECK(spec.grid.start_exponent == 2.0);
    CHECK(spec.mc_samples == 1000);
    CHECK(spec.noise_variance == 0.25);

    const auto again = apply_config(SweepSpec{}, resolved_config(spec));
    CHECK(resolved_config(again) == resolved_config(spec));
    CHECK(render_csv(again, run_sweep(again)) == render_csv(spec, run_sweep(spec)));

    CHECK_THROWS_AS(parse_config("profile geometric"), std::invalid_argument);
    CHECK_THROWS_AS(apply_config(SweepSpec{}, {{"colour", "red"}}), std::invalid_argument);
    CHECK_THROWS_AS(apply_config(SweepSpec{}, {{"snr_grid", "1:2"}}), std::invalid_argument);
}

TEST_CASE("classification lines", "[sweep]")
{
    CHECK(classification_line(parse_profile("geometric rho=0.3679")) == "BOUNDED (rho=0.3679, l0=1)");
    CHECK(classification_line(parse_profile("superexp kappa=2")) == "UNBOUNDED");
    CHECK(classification_line(parse_profile("finite 1.0,0.5")) == "UNBOUNDED (finite paths, pre-loglog regime)");
    CHECK(classification_line(parse_profile("table 1,0.5")) == "INDETERMINATE");
}

TEST_CASE("finite-path tau sweep", "[sweep]")
{
    const auto rows = finite_tau_sweep(parse_profile("finite 1,0.5"), MemorylessGaussian{}, 1.0, {1, 10, 100, 1000});
    REQUIRE(rows.size() == 4);
    // 9-digit references from direct evaluation of the closed form
    const double at_1e16[] = {-0.0110624, -0.6005069, -1.2861291, -1.9354876};
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        CHECK(rows[i].guard_length == 1);
        CHECK_THAT(rows[i].ratio_at_1e16, WithinAbs(at_1e16[i], 1e-6));
        CHECK(rows[i].ratio_at_log_snr_1e300 < rows[i].preloglog);
        if (i > 0)
        {
            CHECK(rows[i].preloglog > rows[i - 1].preloglog);
            CHECK(rows[i].ratio_at_log_snr_1e300 > rows[i - 1].ratio_at_log_snr_1e300);
        }
    }
    CHECK(rows.back().preloglog > 0.999);
    CHECK_THROWS_AS(finite_tau_sweep(VarianceProfile::geometric(0.5), MemorylessGaussian{}, 1.0, {1}), std::domain_error);
}

TEST_CASE("regimes demo writes every scenario", "[sweep][demo]")
{
    const auto dir = std::filesystem::temp_directory_path() / "mpfade_demo_unit";
    std::filesystem::remove_all(dir);
    const auto written = run_regimes_demo({dir, 0, 1});
    CHECK(written.size() == 13);
    for (const auto &item : written)
        CHECK(std::filesystem::file_size(item.path) > 0);
    const auto manifest = read(dir / "manifest.txt");
    for (const char *name : {"a_geometric.csv", "a_geometric.svg", "b_superexp.csv", "c_finite_L1.csv", "c_finite_L2.csv",
                             "c_finite_L4.svg", "c_tau_sweep.csv", "c_tau_sweep.svg"})
        CHECK(manifest.find(name) != std::string::npos);

    // (a) row-wise sandwich
    const auto a = parse_csv(read(dir / "a_geometric.csv"));
    REQUIRE(a.size() == 17);
    check_sandwich(a);

    // (b) the tail condition holds wherever the selector produced an L
    const auto profile = VarianceProfile::super_exponential(2.0);
    const auto b = parse_csv(read(dir / "b_superexp.csv"));
    for (const auto &row : b)
        if (!row.at("L").empty())
            CHECK(tail_sum(profile, std::stoul(row.at("L"))) * num(row.at("snr")) <= 1.0);
    const double gain = num(b.back().at("lower_closed_form_raw")) - num(b[1].at("lower_closed_form_raw"));
    INFO("scenario (b) lower bound gain from 1e1 to 1e16: " << gain);
    CHECK(gain > 0.0);

    // (c) the ratio approaches tau / (L + tau) from below and improves with tau
    const auto c = parse_csv(read(dir / "c_tau_sweep.csv"));
    REQUIRE(c.size() == 12);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (i % 4 != 0)
        {
            CHECK(num(c[i].at("preloglog_lower")) > num(c[i - 1].at("preloglog_lower")));
            CHECK(num(c[i].at("lower_over_loglog_log_snr_1e300")) > num(c[i - 1].at("lower_over_loglog_log_snr_1e300")));
        }

    const auto svg = read(dir / "a_geometric.svg");
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
    CHECK(svg.find("http://www.w3.org/2000/svg") != std::string::npos);
    CHECK(svg.find("href") == std::string::npos);
    std::filesystem::remove_all(dir);
}
