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

#include "mpfade/plot.hpp"

#include "mpfade/format.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace mpfade
{
namespace
{
constexpr std::array<const char *, 8> palette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                 "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string escape(const std::string &text)
{
    std::string out;
    for (char c : text)
    {
        switch (c)
        {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

// Tick spacing of 1, 2 or 5 times a power of ten giving roughly `target` intervals.
double nice_step(double span, int target)
{
    const double raw = span / target;
    const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
    const double fraction = raw / magnitude;
    const double nice = fraction < 1.5 ? 1.0 : fraction < 3.5 ? 2.0 : fraction < 7.5 ? 5.0 : 10.0;
    return nice * magnitude;
}

struct Range
{
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v)
    {
        if (!std::isfinite(v))
            return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }

    void settle()
    {
        if (!std::isfinite(lo))
        {
            lo = 0.0;
            hi = 1.0;
        }
        if (hi - lo < 1e-12)
        {
            lo -= 0.5;
            hi += 0.5;
        }
    }
};
} // namespace

std::string render_svg(const PlotLayout &layout, const std::vector<PlotSeries> &series)
{
    Range xr, yr;
    for (const auto &s : series)
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i)
            if (std::isfinite(s.x[i]) && std::isfinite(s.y[i]))
            {
                xr.add(s.x[i]);
                yr.add(s.y[i]);
            }
    xr.settle();
    yr.settle();
    const double pad = 0.05 * (yr.hi - yr.lo);
    yr.lo -= pad;
    yr.hi += pad;

    const double left = 70, right = 190, top = 40, bottom = 55;
    const double plot_w = layout.width - left - right;
    const double plot_h = layout.height - top - bottom;
    auto px = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
    auto py = [&](double y) { return top + (yr.hi - y) / (yr.hi - yr.lo) * plot_h; };

    std::ostringstream svg;
    svg.imbue(std::locale::classic());
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << layout.width << "\" height=\"" << layout.height
        << "\" viewBox=\"0 0 " << layout.width << ' ' << layout.height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << layout.width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << escape(layout.title)
        << "</text>\n";

    // Grid and ticks
    const double xstep = nice_step(xr.hi - xr.lo, 8);
    for (double x = std::ceil(xr.lo / xstep) * xstep; x <= xr.hi + 1e-9 * xstep; x += xstep)
    {
        svg << "<line x1=\"" << px(x) << "\" y1=\"" << top << "\" x2=\"" << px(x) << "\" y2=\"" << top + plot_h
            << "\" stroke=\"#e0e0e0\"/>\n";
        svg << "<text x=\"" << px(x) << "\" y=\"" << top + plot_h + 16 << "\" text-anchor=\"middle\">"
            << format_real(std::abs(x) < 1e-12 * xstep ? 0.0 : x, 6) << "</text>\n";
    }
    const double ystep = nice_step(yr.hi - yr.lo, 6);
    for (double y = std::ceil(yr.lo / ystep) * ystep; y <= yr.hi + 1e-9 * ystep; y += ystep)
    {
        svg << "<line x1=\"" << left << "\" y1=\"" << py(y) << "\" x2=\"" << left + plot_w << "\" y2=\"" << py(y)
            << "\" stroke=\"#e0e0e0\"/>\n";
        svg << "<text x=\"" << left - 6 << "\" y=\"" << py(y) + 4 << "\" text-anchor=\"end\">"
            << format_real(std::abs(y) < 1e-12 * ystep ? 0.0 : y, 6) << "</text>\n";
    }
    svg << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\"" << plot_h
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << layout.height - 12 << "\" text-anchor=\"middle\">"
        << escape(layout.x_label) << "</text>\n";
    svg << "<text transform=\"translate(16," << top + plot_h / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
        << escape(layout.y_label) << "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s)
    {
        const char *color = palette[s % palette.size()];
        const auto &data = series[s];
        std::string points;
        auto flush = [&] {
            if (!points.empty())
                svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.8\" points=\"" << points << "\"/>\n";
            points.clear();
        };
        for (std::size_t i = 0; i < std::min(data.x.size(), data.y.size()); ++i)
        {
            if (!std::isfinite(data.x[i]) || !std::isfinite(data.y[i]))
            {
                flush();
                continue;
            }
            points += format_real(px(data.x[i]), 7) + "," + format_real(py(data.y[i]), 7) + " ";
            svg << "<circle cx=\"" << px(data.x[i]) << "\" cy=\"" << py(data.y[i]) << "\" r=\"2\" fill=\"" << color << "\"/>\n";
        }
        flush();

        const double ly = top + 14 + 18 * static_cast<double>(s);
        svg << "<line x1=\"" << left + plot_w + 12 << "\" y1=\"" << ly << "\" x2=\"" << left + plot_w + 32 << "\" y2=\"" << ly
            << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << left + plot_w + 38 << "\" y=\"" << ly + 4 << "\">" << escape(data.name) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}
} // namespace mpfade
