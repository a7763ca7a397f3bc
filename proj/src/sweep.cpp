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

#include "mpfade/error.hpp"
#include "mpfade/format.hpp"
#include "mpfade/mc.hpp"
#include "mpfade/parallel.hpp"
#include "mpfade/plot.hpp"
#include "mpfade/rng.hpp"
#include "mpfade/signaling.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <type_traits>
#include <variant>

namespace mpfade
{
namespace
{
std::string trim(const std::string &text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return {};
    const auto last = text.find_last_not_of(" \t\r\n");
    return text.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string &text, char separator)
{
    std::vector<std::string> parts;
    std::string current;
    std::istringstream stream(text);
    while (std::getline(stream, current, separator))
        parts.push_back(trim(current));
    return parts;
}

std::vector<std::string> tokens(const std::string &text)
{
    std::vector<std::string> out;
    std::istringstream stream(text);
    stream.imbue(std::locale::classic());
    std::string token;
    while (stream >> token)
        out.push_back(token);
    return out;
}

double parse_real(const std::string &text, const std::string &what)
{
    double value = 0.0;
    const auto *begin = text.data();
    const auto *end = begin + text.size();
    const auto result = std::from_chars(begin, end, value);
    if (text.empty() || result.ec != std::errc() || result.ptr != end || !std::isfinite(value))
        throw std::invalid_argument(what + ": expected a number, got '" + text + "'");
    return value;
}

std::uint64_t parse_unsigned(const std::string &text, const std::string &what)
{
    std::uint64_t value = 0;
    const auto *begin = text.data();
    const auto *end = begin + text.size();
    const auto result = std::from_chars(begin, end, value);
    if (text.empty() || result.ec != std::errc() || result.ptr != end)
        throw std::invalid_argument(what + ": expected a nonnegative integer, got '" + text + "'");
    return value;
}

std::vector<double> parse_list(const std::string &text, const std::string &what)
{
    std::vector<double> values;
    for (const auto &part : split(text, ','))
        values.push_back(parse_real(part, what));
    return values;
}

// key=value arguments following the family name.
std::map<std::string, std::string> keyword_args(const std::vector<std::string> &args, std::size_t first,
                                                const std::vector<std::string> &allowed, const std::string &what)
{
    std::map<std::string, std::string> out;
    for (std::size_t i = first; i < args.size(); ++i)
    {
        const auto eq = args[i].find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(what + ": expected key=value, got '" + args[i] + "'");
        const auto key = args[i].substr(0, eq);
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw std::invalid_argument(what + ": unknown parameter '" + key + "'");
        if (!out.emplace(key, args[i].substr(eq + 1)).second)
            throw std::invalid_argument(what + ": duplicate parameter '" + key + "'");
    }
    return out;
}

std::string exact(double value) { return format_real(value, 17); }

std::string join(const std::vector<double> &values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i ? "," : "") + exact(values[i]);
    return out;
}

std::string cell(const std::optional<double> &value)
{
    return value ? format_real(*value, 12) : std::string();
}

template <class T>
std::string cell(const std::optional<T> &value)
{
    return value ? std::to_string(*value) : std::string();
}
} // namespace

VarianceProfile parse_profile(const std::string &text)
{
    const auto args = tokens(text);
    if (args.empty())
        throw std::invalid_argument("profile: empty spec");
    const auto &family = args[0];
    if (family == "geometric")
    {
        auto kw = keyword_args(args, 1, {"rho", "alpha0"}, "profile");
        require(kw.count("rho") == 1, "profile: geometric needs rho=");
        const double alpha0 = kw.count("alpha0") ? parse_real(kw["alpha0"], "alpha0") : 1.0;
        return VarianceProfile::geometric(parse_real(kw["rho"], "rho"), alpha0);
    }
    if (family == "superexp")
    {
        auto kw = keyword_args(args, 1, {"kappa", "alpha0"}, "profile");
        require(kw.count("kappa") == 1, "profile: superexp needs kappa=");
        const double alpha0 = kw.count("alpha0") ? parse_real(kw["alpha0"], "alpha0") : 1.0;
        return VarianceProfile::super_exponential(parse_real(kw["kappa"], "kappa"), alpha0);
    }
    if (family == "finite")
    {
        require(args.size() == 2, "profile: finite takes one comma-separated list");
        return VarianceProfile::finite(parse_list(args[1], "finite"));
    }
    if (family == "table")
    {
        require(args.size() >= 2, "profile: table needs a comma-separated list");
        auto kw = keyword_args(args, 2, {"tail"}, "profile");
        TailTag tail = TailTag::Undeclared;
        if (kw.count("tail"))
        {
            if (kw["tail"] == "zero")
                tail = TailTag::Zero;
            else if (kw["tail"] != "undeclared")
                throw std::invalid_argument("profile: tail must be zero or undeclared");
        }
        return VarianceProfile::table(parse_list(args[1], "table"), tail);
    }
    throw std::invalid_argument("profile: unknown family '" + family + "'");
}

std::string profile_spec(const VarianceProfile &profile)
{
    return std::visit(
        [&](const auto &f) -> std::string {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, Geometric>)
                return "geometric rho=" + exact(f.ratio) + " alpha0=" + exact(profile.alpha0());
            else if constexpr (std::is_same_v<F, SuperExponential>)
                return "superexp kappa=" + exact(f.exponent) + " alpha0=" + exact(profile.alpha0());
            else if constexpr (std::is_same_v<F, Finite>)
                return "finite " + join(f.values);
            else
                return "table " + join(f.values) + (f.tail == TailTag::Zero ? " tail=zero" : " tail=undeclared");
        },
        profile.family());
}

GainModel parse_model(const std::string &text)
{
    const auto args = tokens(text);
    if (args.empty())
        throw std::invalid_argument("model: empty spec");
    if (args[0] == "memoryless")
    {
        require(args.size() == 1, "model: memoryless takes no parameters");
        return MemorylessGaussian{};
    }
    if (args[0] == "gauss-markov")
    {
        auto kw = keyword_args(args, 1, {"a"}, "model");
        require(kw.count("a") == 1, "model: gauss-markov needs a=");
        GainModel model = GaussMarkov{parse_real(kw["a"], "a")};
        validate(model);
        return model;
    }
    throw std::invalid_argument("model: unknown gain model '" + args[0] + "'");
}

std::string model_spec(const GainModel &model)
{
    if (const auto *gm = std::get_if<GaussMarkov>(&model))
        return "gauss-markov a=" + exact(gm->correlation);
    return "memoryless";
}

LRule parse_l_rule(const std::string &text)
{
    const auto rule = trim(text);
    if (rule == "min")
        return {};
    if (rule.rfind("varrho:", 0) == 0)
    {
        const double varrho = parse_real(rule.substr(7), "varrho");
        require(varrho > 0.0 && varrho < 1.0, "L rule: varrho must lie in (0, 1)");
        return LRule{varrho};
    }
    throw std::invalid_argument("L rule: expected 'min' or 'varrho:<x>', got '" + rule + "'");
}

std::string l_rule_spec(const LRule &rule)
{
    return rule.varrho ? "varrho:" + exact(*rule.varrho) : "min";
}

TauRule parse_tau_rule(const std::string &text)
{
    const auto rule = trim(text);
    if (rule == "L")
        return {};
    if (rule.rfind("fixed:", 0) == 0)
    {
        const auto tau = parse_unsigned(rule.substr(6), "tau");
        require(tau >= 1, "tau rule: fixed tau must be at least 1");
        return TauRule{TauRule::Kind::Fixed, static_cast<double>(tau)};
    }
    if (rule.rfind("scaled:", 0) == 0)
    {
        const double c = parse_real(rule.substr(7), "tau scale");
        require(c > 0.0, "tau rule: scale must be positive");
        return TauRule{TauRule::Kind::Scaled, c};
    }
    throw std::invalid_argument("tau rule: expected 'L', 'fixed:<n>' or 'scaled:<c>', got '" + rule + "'");
}

std::string tau_rule_spec(const TauRule &rule)
{
    switch (rule.kind)
    {
    case TauRule::Kind::Fixed:
        return "fixed:" + std::to_string(static_cast<std::uint64_t>(rule.value));
    case TauRule::Kind::Scaled:
        return "scaled:" + exact(rule.value);
    case TauRule::Kind::EqualL:
        break;
    }
    return "L";
}

std::size_t select_guard_length(const LRule &rule, const VarianceProfile &profile, double power, double noise_variance)
{
    if (rule.varrho)
        return choose_L_geometric(*rule.varrho, power, noise_variance);
    return choose_L(profile, power, noise_variance);
}

std::size_t select_data_symbols(const TauRule &rule, std::size_t guard_length)
{
    switch (rule.kind)
    {
    case TauRule::Kind::Fixed:
        return static_cast<std::size_t>(rule.value);
    case TauRule::Kind::Scaled:
        return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(rule.value * static_cast<double>(guard_length))));
    case TauRule::Kind::EqualL:
        break;
    }
    return std::max<std::size_t>(1, guard_length);
}

void validate(const SweepSpec &spec)
{
    require(spec.noise_variance > 0.0 && std::isfinite(spec.noise_variance), "sweep: sigma2 must be positive");
    const auto &g = spec.grid;
    require(std::isfinite(g.start_exponent) && std::isfinite(g.end_exponent), "sweep: grid exponents must be finite");
    require(g.points >= 1, "sweep: grid needs at least one point");
    if (g.points == 1)
        require(g.start_exponent == g.end_exponent, "sweep: a single-point grid needs start == end");
    else
        require(g.end_exponent > g.start_exponent, "sweep: grid must be strictly increasing");
    require(spec.mc_samples == 0 || spec.mc_samples >= min_mc_samples, "sweep: MC samples must be 0 or at least 1000");
    validate(spec.model);
}

std::vector<double> grid_exponents(const SnrGrid &grid)
{
    std::vector<double> out(grid.points);
    if (grid.points == 1)
    {
        out[0] = grid.start_exponent;
        return out;
    }
    const double step = (grid.end_exponent - grid.start_exponent) / static_cast<double>(grid.points - 1);
    for (std::size_t i = 0; i < grid.points; ++i)
        out[i] = grid.start_exponent + step * static_cast<double>(i);
    out.back() = grid.end_exponent;
    return out;
}

BoundReport evaluate_point(const SweepSpec &spec, double exponent, std::size_t index)
{
    BoundReport r;
    r.snr = std::pow(10.0, exponent);
    r.noise_variance = spec.noise_variance;
    r.power = r.snr * spec.noise_variance;
    r.profile_id = spec.profile.describe();
    r.model_id = describe(spec.model);

    const auto &profile = spec.profile;
    if (classify(profile).verdict == Verdict::BoundedCapacity)
        r.upper_exponential = upper_bound_exponential(profile, spec.model);
    if (!profile.summable())
        return r;
    r.upper_duality = upper_bound_duality(r.snr, profile, spec.model);

    if (!(r.power > 1.0))
        return r;
    const std::size_t L = select_guard_length(spec.l_rule, profile, r.power, spec.noise_variance);
    const std::size_t tau = select_data_symbols(spec.tau_rule, L);
    r.guard_length = L;
    r.data_symbols = tau;
    // A selector that does not dominate this profile gives an L outside the scheme's hypotheses.
    if (!tail_condition_holds(profile, r.power, spec.noise_variance, L))
        return r;

    const double elog = expected_log_sq({spec.model, profile.alpha0()});
    const double ups = upsilon(profile.alpha0(), total_sum(profile), spec.noise_variance, elog);
    r.lower_closed_form_raw = lower_bound_closed_form(r.power, L, tau, ups);
    r.lower_closed_form = std::max(0.0, *r.lower_closed_form_raw);

    if (spec.mc_samples > 0)
    {
        const SignalingScheme scheme(L, tau, r.power);
        const auto seed = rng::stream_key(spec.seed, rng::Domain::MonteCarlo, index, 0);
        const auto est = scheme_lower_bound_mc(scheme, profile, spec.model, spec.noise_variance, spec.mc_samples, seed);
        r.lower_mc = est.value;
        r.lower_mc_stderr = est.standard_error;
    }
    return r;
}

std::vector<BoundReport> run_sweep(const SweepSpec &spec)
{
    validate(spec);
    const auto exponents = grid_exponents(spec.grid);
    std::vector<BoundReport> reports(exponents.size());
    parallel_for(exponents.size(), [&](std::size_t i) { reports[i] = evaluate_point(spec, exponents[i], i); });
    return reports;
}

std::vector<std::pair<std::string, std::string>> resolved_config(const SweepSpec &spec)
{
    return {
        {"profile", profile_spec(spec.profile)},
        {"model", model_spec(spec.model)},
        {"sigma2", exact(spec.noise_variance)},
        {"snr_start", exact(spec.grid.start_exponent)},
        {"snr_end", exact(spec.grid.end_exponent)},
        {"snr_points", std::to_string(spec.grid.points)},
        {"l_rule", l_rule_spec(spec.l_rule)},
        {"tau_rule", tau_rule_spec(spec.tau_rule)},
        {"samples", std::to_string(spec.mc_samples)},
        {"seed", std::to_string(spec.seed)},
    };
}

std::vector<std::pair<std::string, std::string>> parse_config(const std::string &text)
{
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream stream(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(stream, line))
    {
        ++number;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(number) + ": expected key = value");
        auto key = trim(line.substr(0, eq));
        std::replace(key.begin(), key.end(), '-', '_');
        out.emplace_back(key, trim(line.substr(eq + 1)));
    }
    return out;
}

SweepSpec apply_config(SweepSpec spec, const std::vector<std::pair<std::string, std::string>> &settings)
{
    for (const auto &[key, value] : settings)
    {
        if (key == "profile")
            spec.profile = parse_profile(value);
        else if (key == "model")
            spec.model = parse_model(value);
        else if (key == "sigma2")
            spec.noise_variance = parse_real(value, key);
        else if (key == "snr_start")
            spec.grid.start_exponent = parse_real(value, key);
        else if (key == "snr_end")
            spec.grid.end_exponent = parse_real(value, key);
        else if (key == "snr_points")
            spec.grid.points = parse_unsigned(value, key);
        else if (key == "snr_grid")
        {
            const auto parts = split(value, ':');
            require(parts.size() == 3, "snr_grid: expected start:end:points (log10 exponents)");
            spec.grid = {parse_real(parts[0], key), parse_real(parts[1], key), parse_unsigned(parts[2], key)};
        }
        else if (key == "l_rule")
            spec.l_rule = parse_l_rule(value);
        else if (key == "tau_rule")
            spec.tau_rule = parse_tau_rule(value);
        else if (key == "samples")
            spec.mc_samples = parse_unsigned(value, key);
        else if (key == "seed")
            spec.seed = parse_unsigned(value, key);
        else
            throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    return spec;
}

std::string render_csv(const SweepSpec &spec, const std::vector<BoundReport> &reports)
{
    const auto exponents = grid_exponents(spec.grid);
    require(exponents.size() == reports.size(), "render_csv: report count does not match the grid");

    std::string out = "# mpfade sweep\n";
    for (const auto &[key, value] : resolved_config(spec))
        out += "# " + key + " = " + value + "\n";
    for (std::size_t c = 0; c < csv_columns.size(); ++c)
        out += (c ? "," : "") + csv_columns[c];
    out += "\n";

    for (std::size_t i = 0; i < reports.size(); ++i)
    {
        const auto &r = reports[i];
        std::optional<double> loglog, ratio;
        if (r.snr > 1.0)
            loglog = std::log(std::log(r.snr));
        if (loglog && *loglog > 0.0 && r.lower_closed_form_raw)
            ratio = *r.lower_closed_form_raw / *loglog;
        const std::vector<std::string> cells = {
            format_real(r.snr, 12),        format_real(exponents[i], 12), cell(r.upper_exponential),
            cell(r.upper_duality),         cell(r.guard_length),          cell(r.data_symbols),
            cell(r.lower_closed_form_raw), cell(r.lower_closed_form),     cell(r.lower_mc),
            cell(r.lower_mc_stderr),       cell(loglog),                  cell(ratio),
        };
        for (std::size_t c = 0; c < cells.size(); ++c)
            out += (c ? "," : "") + cells[c];
        out += "\n";
    }
    return out;
}

std::string render_sweep_svg(const std::vector<BoundReport> &reports, const std::string &title)
{
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> x;
    for (const auto &r : reports)
        x.push_back(std::log10(r.snr));

    auto column = [&](const std::string &name, auto getter) {
        PlotSeries s{name, x, {}};
        bool any = false;
        for (const auto &r : reports)
        {
            const std::optional<double> v = getter(r);
            s.y.push_back(v ? *v : nan);
            any = any || v.has_value();
        }
        return any ? std::optional<PlotSeries>(std::move(s)) : std::nullopt;
    };

    std::vector<PlotSeries> series;
    auto add = [&](std::optional<PlotSeries> s) {
        if (s)
            series.push_back(std::move(*s));
    };
    add(column("upper_exponential", [](const BoundReport &r) { return r.upper_exponential; }));
    add(column("upper_duality", [](const BoundReport &r) { return r.upper_duality; }));
    add(column("lower_closed_form_raw", [](const BoundReport &r) { return r.lower_closed_form_raw; }));
    add(column("lower_closed_form_clamped", [](const BoundReport &r) { return r.lower_closed_form; }));
    add(column("lower_mc", [](const BoundReport &r) { return r.lower_mc; }));
    add(column("loglog_snr", [](const BoundReport &r) {
        return r.snr > 1.0 ? std::optional<double>(std::log(std::log(r.snr))) : std::nullopt;
    }));
    return render_svg({title, "log10(SNR)", "nats"}, series);
}

std::string classification_line(const VarianceProfile &profile)
{
    const auto c = classify(profile);
    switch (c.verdict)
    {
    case Verdict::BoundedCapacity:
        return "BOUNDED (rho=" + format_real(c.witness->rho, 4) + ", l0=" + std::to_string(c.witness->l0) + ")";
    case Verdict::UnboundedCapacity:
        if (c.divergence == Divergence::FinitePaths)
            return "UNBOUNDED (finite paths, pre-loglog regime)";
        return "UNBOUNDED";
    case Verdict::Indeterminate:
        break;
    }
    return "INDETERMINATE";
}

std::vector<TauSweepRow> finite_tau_sweep(const VarianceProfile &profile, const GainModel &model, double noise_variance,
                                          const std::vector<std::size_t> &taus)
{
    const auto last = last_path(profile);
    if (!last)
        throw std::domain_error("finite_tau_sweep: profile has infinitely many paths");
    const std::size_t L = *last;
    const double elog = expected_log_sq({model, profile.alpha0()});
    const double ups = upsilon(profile.alpha0(), total_sum(profile), noise_variance, elog);

    const double log_snr_mid = std::log(1e16);
    const double log_snr_far = 1e300;
    std::vector<TauSweepRow> rows;
    for (const auto tau : taus)
    {
        TauSweepRow row{L, tau, preloglog_lower(L, tau), 0.0, 0.0};
        row.ratio_at_1e16 =
            lower_bound_closed_form_log(log_snr_mid + std::log(noise_variance), L, tau, ups) / std::log(log_snr_mid);
        row.ratio_at_log_snr_1e300 =
            lower_bound_closed_form_log(log_snr_far + std::log(noise_variance), L, tau, ups) / std::log(log_snr_far);
        rows.push_back(row);
    }
    return rows;
}

void write_text_file(const std::filesystem::path &path, const std::string &content)
{
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    file << content;
    file.close();
    if (!file)
        throw std::runtime_error("failed writing '" + path.string() + "'");
}

std::vector<DemoArtifact> run_regimes_demo(const DemoOptions &options)
{
    std::filesystem::create_directories(options.out_dir);
    std::vector<DemoArtifact> written;

    auto emit_sweep = [&](const SweepSpec &spec, const std::string &stem, const std::string &title) {
        const auto reports = run_sweep(spec);
        const auto csv = options.out_dir / (stem + ".csv");
        const auto svg = options.out_dir / (stem + ".svg");
        write_text_file(csv, render_csv(spec, reports));
        write_text_file(svg, render_sweep_svg(reports, title));
        written.push_back({csv, title});
        written.push_back({svg, title + " (plot)"});
    };

    SweepSpec base;
    base.mc_samples = options.mc_samples;
    base.seed = options.seed;

    SweepSpec a = base;
    a.profile = VarianceProfile::geometric(std::exp(-1.0));
    emit_sweep(a, "a_geometric", "Geometric rho=1/e: bounded capacity");

    SweepSpec b = base;
    b.profile = VarianceProfile::super_exponential(2.0);
    b.l_rule = LRule{0.5};
    emit_sweep(b, "b_superexp", "Super-exponential kappa=2, varrho=0.5: unbounded capacity");

    const std::vector<std::size_t> taus = {1, 10, 100, 1000};
    std::string table = "L,tau,preloglog_lower,lower_over_loglog_snr_1e16,lower_over_loglog_log_snr_1e300\n";
    std::vector<PlotSeries> tau_series;
    for (const std::size_t L : {1u, 2u, 4u})
    {
        std::vector<double> values;
        for (std::size_t l = 0; l <= L; ++l)
            values.push_back(std::ldexp(1.0, -static_cast<int>(l)));
        SweepSpec c = base;
        c.profile = VarianceProfile::finite(values);
        c.tau_rule = TauRule{TauRule::Kind::Fixed, 100.0};
        const auto stem = "c_finite_L" + std::to_string(L);
        emit_sweep(c, stem, "Finite paths L=" + std::to_string(L) + ", tau=100: pre-loglog regime");

        PlotSeries near{"L=" + std::to_string(L) + ", SNR=1e16", {}, {}};
        PlotSeries far{"L=" + std::to_string(L) + ", log SNR=1e300", {}, {}};
        for (const auto &row : finite_tau_sweep(c.profile, c.model, c.noise_variance, taus))
        {
            table += std::to_string(row.guard_length) + "," + std::to_string(row.data_symbols) + "," +
                     format_real(row.preloglog, 12) + "," + format_real(row.ratio_at_1e16, 12) + "," +
                     format_real(row.ratio_at_log_snr_1e300, 12) + "\n";
            const double x = std::log10(static_cast<double>(row.data_symbols));
            near.x.push_back(x);
            near.y.push_back(row.ratio_at_1e16);
            far.x.push_back(x);
            far.y.push_back(row.ratio_at_log_snr_1e300);
        }
        tau_series.push_back(std::move(near));
        tau_series.push_back(std::move(far));
    }
    const auto tau_csv = options.out_dir / "c_tau_sweep.csv";
    const auto tau_svg = options.out_dir / "c_tau_sweep.svg";
    write_text_file(tau_csv, table);
    write_text_file(tau_svg, render_svg({"Finite paths: lower bound / log log SNR versus tau", "log10(tau)",
                                         "lower / log log SNR"},
                                        tau_series));
    written.push_back({tau_csv, "Finite paths: tau sweep of lower bound / log log SNR"});
    written.push_back({tau_svg, "Finite paths: tau sweep (plot)"});

    std::string manifest = "# mpfade regimes demo\n# samples = " + std::to_string(options.mc_samples) +
                           "\n# seed = " + std::to_string(options.seed) + "\n";
    for (const auto &item : written)
        manifest += item.path.filename().string() + "\t" + item.description + "\n";
    const auto manifest_path = options.out_dir / "manifest.txt";
    write_text_file(manifest_path, manifest);
    written.push_back({manifest_path, "manifest"});
    return written;
}
} // namespace mpfade
