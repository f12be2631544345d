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

#include "aorsim/antenna.hpp"
#include "aorsim/paths.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace aorsim {

// Path ensemble after receive-pattern weighting; total is the plain sum of
// the weighted powers (the received average power estimate).
struct WeightedEnsemble
{
    std::vector<PathComponent> components;
    double total = 0.0;
};

// Multiplies every component power by the receive gain at its arrival
// direction.
WeightedEnsemble apply_rx_pattern(const PathEnsemble &ensemble, const AntennaPattern &rx);

// Unweighted view of an ensemble; baseline for arrival-angle statistics
// before any receive antenna.
WeightedEnsemble as_weighted(const PathEnsemble &ensemble);

// Power angular spectrum on a regular zenith x azimuth histogram. Bins are
// half-open [center - eps, center + eps) with the last zenith bin closed at
// 90. Values are power sums divided by the bin area 4 eps_theta eps_phi
// (linear power per square degree), stored zenith-major.
struct AngularSpectrumGrid
{
    double eps_theta = 0.0;
    double eps_phi = 0.0;
    std::vector<double> theta_centers; // over [0, 90]
    std::vector<double> phi_centers;   // over [-180, 180)
    std::vector<double> values;        // theta_centers.size() * phi_centers.size()
    double total_power = 0.0;

    double &at(std::size_t ti, std::size_t pi) { return values[ti * phi_centers.size() + pi]; }
    double at(std::size_t ti, std::size_t pi) const
    {
        return values[ti * phi_centers.size() + pi];
    }
};

// Probability density on the same kind of grid; joint (per square degree)
// when phi_centers is non-empty, otherwise a marginal (per degree) over
// theta_centers alone. normalizer records the constant applied to the raw
// power ratios.
struct JointPdf
{
    double eps_theta = 0.0;
    double eps_phi = 0.0;
    std::vector<double> theta_centers;
    std::vector<double> phi_centers;
    std::vector<double> values; // theta-major
    double normalizer = 0.0;
};

struct MarginalPdf
{
    double lo_deg = 0.0;
    double hi_deg = 0.0;
    double eps = 0.0;
    std::vector<double> centers;
    std::vector<double> values; // probability per degree
    double normalizer = 0.0;
};

// Histogram of weighted power over the full angular domain. eps values must
// be positive and divide the domain into whole bins (90/(2 eps_theta) and
// 360/(2 eps_phi) integral), else std::invalid_argument.
AngularSpectrumGrid estimate_pas(const WeightedEnsemble &w, double eps_theta, double eps_phi);

// Joint density: grid power fractions per unit bin area, so the
// rectangle-rule integral is one. Throws std::runtime_error when the grid
// holds no power.
JointPdf estimate_joint_pdf(const AngularSpectrumGrid &grid);

// Marginal densities over zenith and azimuth. Same grid rules and
// degenerate-power error as above.
std::pair<MarginalPdf, MarginalPdf> estimate_marginals(const WeightedEnsemble &w,
                                                       double eps_theta, double eps_phi);

// Rectangle-rule integrals (1 for any freshly estimated density).
double integral(const JointPdf &pdf);
double integral(const MarginalPdf &pdf);

// CSV forms: `theta_deg,phi_deg,value` for grids and joint densities,
// `angle_deg,value` for marginals. The comment block is emitted first, one
// `# ` line per entry.
void write_csv(std::ostream &out, const AngularSpectrumGrid &grid,
               const std::vector<std::string> &comments = {});
void write_csv(std::ostream &out, const JointPdf &pdf,
               const std::vector<std::string> &comments = {});
void write_csv(std::ostream &out, const MarginalPdf &pdf,
               const std::vector<std::string> &comments = {});

} // namespace aorsim
