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

#include <string>
#include <vector>

namespace mpfade
{
struct PlotSeries
{
    std::string name;
    std::vector<double> x;
    std::vector<double> y; ///< non-finite values break the line
};

struct PlotLayout
{
    std::string title;
    std::string x_label;
    std::string y_label;
    int width = 800;
    int height = 500;
};

/// Self-contained static SVG line chart (no scripts, fonts or external assets).
std::string render_svg(const PlotLayout &layout, const std::vector<PlotSeries> &series);
} // namespace mpfade
