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

#include "aorsim/estimator.hpp"

#include "aorsim/csv.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace aorsim {

namespace {

// Number of width-2*eps bins spanning `span` degrees; the count must be
// whole for the grid to tile the domain.
std::size_t bin_count(double span, double eps, const char *plane)
{
    if (!std::isfinite(eps) || !(eps > 0.0))
        throw std::invalid_argument(std::string(plane) + " bin half-width must be positive");
    const double n = span / (2.0 * eps);
    const double rounded = std::round(n);
    if (std::abs(n - rounded) > 1e-9 || rounded < 1.0)
        throw std::invalid_argument(std::string(plane) + " bin half-width " + format_double(eps) +
                                    " does not divide the domain into whole bins");
    return static_cast<std::size_t>(rounded);
}

std::vector<double> bin_centers(double lo, double eps, std::size_t count)
{
    std::vector<double> centers(count);
    for (std::size_t i = 0; i < count; ++i)
        centers[i] = lo + (2.0 * static_cast<double>(i) + 1.0) * eps;
    return centers;
}

std::size_t bin_index(double value, double lo, double eps, std::size_t count)
{
    const double offset = (value - lo) / (2.0 * eps);
    if (!(offset > 0.0))
        return 0;
    std::size_t i = static_cast<std::size_t>(offset);
    // The domain maximum (zenith 90) belongs to the final bin.
    if (i >= count)
        i = count - 1;
    return i;
}

void emit_comments(std::ostream &out, const std::vector<std::string> &comments)
{
    for (const std::string &c : comments)
        out << "# " << c << '\n';
}

} // namespace

WeightedEnsemble apply_rx_pattern(const PathEnsemble &ensemble, const AntennaPattern &rx)
{
    WeightedEnsemble w;
    w.components.reserve(ensemble.components.size());
    for (const PathComponent &c : ensemble.components) {
        PathComponent weighted = c;
        weighted.power = c.power * gain(rx, c.theta_deg, c.phi_deg);
        w.total += weighted.power;
        w.components.push_back(weighted);
    }
    return w;
}

WeightedEnsemble as_weighted(const PathEnsemble &ensemble)
{
    WeightedEnsemble w;
    w.components = ensemble.components;
    for (const PathComponent &c : w.components)
        w.total += c.power;
    return w;
}

AngularSpectrumGrid estimate_pas(const WeightedEnsemble &w, double eps_theta, double eps_phi)
{
    const std::size_t nt = bin_count(90.0, eps_theta, "zenith");
    const std::size_t np = bin_count(360.0, eps_phi, "azimuth");

    AngularSpectrumGrid grid;
    grid.eps_theta = eps_theta;
    grid.eps_phi = eps_phi;
    grid.theta_centers = bin_centers(0.0, eps_theta, nt);
    grid.phi_centers = bin_centers(-180.0, eps_phi, np);
    grid.values.assign(nt * np, 0.0);

    const double inv_area = 1.0 / (4.0 * eps_theta * eps_phi);
    for (const PathComponent &c : w.components) {
        const std::size_t ti = bin_index(c.theta_deg, 0.0, eps_theta, nt);
        const std::size_t pi = bin_index(c.phi_deg, -180.0, eps_phi, np);
        grid.values[ti * np + pi] += c.power * inv_area;
        grid.total_power += c.power;
    }
    return grid;
}

JointPdf estimate_joint_pdf(const AngularSpectrumGrid &grid)
{
    if (!(grid.total_power > 0.0))
        throw std::runtime_error("cannot normalize a spectrum with no power");

    JointPdf pdf;
    pdf.eps_theta = grid.eps_theta;
    pdf.eps_phi = grid.eps_phi;
    pdf.theta_centers = grid.theta_centers;
    pdf.phi_centers = grid.phi_centers;
    pdf.normalizer = 1.0 / (4.0 * grid.eps_theta * grid.eps_phi);
    pdf.values.resize(grid.values.size());
    for (std::size_t i = 0; i < grid.values.size(); ++i)
        pdf.values[i] = grid.values[i] / grid.total_power;
    return pdf;
}

std::pair<MarginalPdf, MarginalPdf> estimate_marginals(const WeightedEnsemble &w,
                                                       double eps_theta, double eps_phi)
{
    const std::size_t nt = bin_count(90.0, eps_theta, "zenith");
    const std::size_t np = bin_count(360.0, eps_phi, "azimuth");

    MarginalPdf theta;
    theta.lo_deg = 0.0;
    theta.hi_deg = 90.0;
    theta.eps = eps_theta;
    theta.centers = bin_centers(0.0, eps_theta, nt);
    theta.values.assign(nt, 0.0);
    theta.normalizer = 1.0 / (2.0 * eps_theta);

    MarginalPdf phi;
    phi.lo_deg = -180.0;
    phi.hi_deg = 180.0;
    phi.eps = eps_phi;
    phi.centers = bin_centers(-180.0, eps_phi, np);
    phi.values.assign(np, 0.0);
    phi.normalizer = 1.0 / (2.0 * eps_phi);

    double total = 0.0;
    for (const PathComponent &c : w.components) {
        theta.values[bin_index(c.theta_deg, 0.0, eps_theta, nt)] += c.power;
        phi.values[bin_index(c.phi_deg, -180.0, eps_phi, np)] += c.power;
        total += c.power;
    }
    if (!(total > 0.0))
        throw std::runtime_error("cannot normalize a spectrum with no power");

    for (double &v : theta.values)
        v = v / total * theta.normalizer;
    for (double &v : phi.values)
        v = v / total * phi.normalizer;
    return {theta, phi};
}

double integral(const JointPdf &pdf)
{
    double sum = 0.0;
    for (double v : pdf.values)
        sum += v;
    return sum * 4.0 * pdf.eps_theta * pdf.eps_phi;
}

double integral(const MarginalPdf &pdf)
{
    double sum = 0.0;
    for (double v : pdf.values)
        sum += v;
    return sum * 2.0 * pdf.eps;
}

void write_csv(std::ostream &out, const AngularSpectrumGrid &grid,
               const std::vector<std::string> &comments)
{
    emit_comments(out, comments);
    out << "theta_deg,phi_deg,value\n";
    for (std::size_t ti = 0; ti < grid.theta_centers.size(); ++ti)
        for (std::size_t pi = 0; pi < grid.phi_centers.size(); ++pi)
            out << format_double(grid.theta_centers[ti]) << ',' <<
                format_double(grid.phi_centers[pi]) << ',' <<
                format_double(grid.at(ti, pi)) << '\n';
}

void write_csv(std::ostream &out, const JointPdf &pdf, const std::vector<std::string> &comments)
{
    emit_comments(out, comments);
    out << "theta_deg,phi_deg,value\n";
    const std::size_t np = pdf.phi_centers.size();
    for (std::size_t ti = 0; ti < pdf.theta_centers.size(); ++ti)
        for (std::size_t pi = 0; pi < np; ++pi)
            out << format_double(pdf.theta_centers[ti]) << ',' <<
                format_double(pdf.phi_centers[pi]) << ',' <<
                format_double(pdf.values[ti * np + pi]) << '\n';
}

void write_csv(std::ostream &out, const MarginalPdf &pdf, const std::vector<std::string> &comments)
{
    emit_comments(out, comments);
    out << "angle_deg,value\n";
    for (std::size_t i = 0; i < pdf.centers.size(); ++i)
        out << format_double(pdf.centers[i]) << ',' << format_double(pdf.values[i]) << '\n';
}

} // namespace aorsim
