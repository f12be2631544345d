// SPDX-License-Identifier: Apache-2.0
//
// aorsim - 3D geometric channel simulation of reception-angle statistics
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

#include <iosfwd>
#include <string>
#include <vector>

namespace aorsim {

struct Series
{
    std::string label;
    std::vector<double> x;
    std::vector<double> y; // same length as x
};

struct LineChart
{
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
    int width = 860;
    int height = 520;
};

// Renders a self-contained SVG line chart with axes, ticks, and a legend.
// Throws std::invalid_argument when no series holds a point or a series has
// mismatched x/y lengths.
void write_svg(std::ostream &out, const LineChart &chart);
void write_svg(const std::string &path, const LineChart &chart);

} // namespace aorsim
