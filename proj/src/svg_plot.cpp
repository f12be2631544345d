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

#include "aorsim/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace aorsim {

namespace {

const char *const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string xml_escape(const std::string &text)
{
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c; break;
        }
    }
    return out;
}

std::string short_number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

struct Range
{
    double lo = 0.0;
    double hi = 1.0;

    void widen(double v)
    {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
};

} // namespace

void write_svg(std::ostream &out, const LineChart &chart)
{
    bool any_point = false;
    Range xr{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    Range yr = xr;
    for (const Series &s : chart.series) {
        if (s.x.size() != s.y.size())
            throw std::invalid_argument("series '" + s.label + "' has mismatched x/y lengths");
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i]))
                continue;
            xr.widen(s.x[i]);
            yr.widen(s.y[i]);
            any_point = true;
        }
    }
    if (!any_point)
        throw std::invalid_argument("chart has no finite data points");

    if (xr.hi == xr.lo) {
        xr.lo -= 1.0;
        xr.hi += 1.0;
    }
    if (yr.hi == yr.lo) {
        yr.lo -= 1.0;
        yr.hi += 1.0;
    }
    const double ypad = 0.05 * (yr.hi - yr.lo);
    yr.lo -= ypad;
    yr.hi += ypad;

    const double ml = 70.0, mr = 20.0, mt = 46.0, mb = 54.0;
    const double pw = chart.width - ml - mr;
    const double ph = chart.height - mt - mb;
    auto px = [&](double x) { return ml + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto py = [&](double y) { return mt + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << chart.width << "\" height=\""
        << chart.height << "\" viewBox=\"0 0 " << chart.width << ' ' << chart.height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << chart.width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" << xml_escape(chart.title)
        << "</text>\n";

    const int ticks = 6;
    out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
    for (int i = 0; i <= ticks; ++i) {
        const double fx = xr.lo + (xr.hi - xr.lo) * i / ticks;
        const double gx = px(fx);
        out << "<line x1=\"" << gx << "\" y1=\"" << mt << "\" x2=\"" << gx << "\" y2=\""
            << mt + ph << "\" stroke=\"#ddd\"/>\n";
        out << "<text x=\"" << gx << "\" y=\"" << mt + ph + 16
            << "\" text-anchor=\"middle\">" << short_number(fx) << "</text>\n";

        const double fy = yr.lo + (yr.hi - yr.lo) * i / ticks;
        const double gy = py(fy);
        out << "<line x1=\"" << ml << "\" y1=\"" << gy << "\" x2=\"" << ml + pw << "\" y2=\""
            << gy << "\" stroke=\"#ddd\"/>\n";
        out << "<text x=\"" << ml - 6 << "\" y=\"" << gy + 4
            << "\" text-anchor=\"end\">" << short_number(fy) << "</text>\n";
    }
    out << "</g>\n";

    out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw << "\" height=\"" << ph
        << "\" fill=\"none\" stroke=\"#333\"/>\n";
    out << "<text x=\"" << ml + pw / 2 << "\" y=\"" << chart.height - 14
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << xml_escape(chart.x_label) << "</text>\n";
    out << "<text x=\"18\" y=\"" << mt + ph / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 " << mt + ph / 2 << ")\">" << xml_escape(chart.y_label)
        << "</text>\n";

    for (std::size_t si = 0; si < chart.series.size(); ++si) {
        const Series &s = chart.series[si];
        const char *color = kPalette[si % kPaletteSize];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.6\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i]))
                continue;
            out << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
        }
        out << "\"/>\n";
    }

    const double lx = ml + pw - 150.0;
    double ly = mt + 10.0;
    out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t si = 0; si < chart.series.size(); ++si) {
        const char *color = kPalette[si % kPaletteSize];
        out << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 22 << "\" y2=\""
            << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << lx + 28 << "\" y=\"" << ly + 4 << "\">"
            << xml_escape(chart.series[si].label) << "</text>\n";
        ly += 18.0;
    }
    out << "</g>\n</svg>\n";
}

void write_svg(const std::string &path, const LineChart &chart)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    write_svg(out, chart);
}

} // namespace aorsim
