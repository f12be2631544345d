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

#include "aorsim/estimator.hpp"
#include "aorsim/paths.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace aorsim_test {

// Reference PAS: an O(paths x bins) scan that classifies every path against
// every bin interval independently of the production binning arithmetic.
inline aorsim::AngularSpectrumGrid brute_force_pas(const aorsim::WeightedEnsemble &w,
                                                   double eps_theta, double eps_phi)
{
    aorsim::AngularSpectrumGrid grid;
    grid.eps_theta = eps_theta;
    grid.eps_phi = eps_phi;
    const std::size_t nt = static_cast<std::size_t>(std::llround(90.0 / (2.0 * eps_theta)));
    const std::size_t np = static_cast<std::size_t>(std::llround(360.0 / (2.0 * eps_phi)));
    for (std::size_t i = 0; i < nt; ++i)
        grid.theta_centers.push_back((2.0 * i + 1.0) * eps_theta);
    for (std::size_t i = 0; i < np; ++i)
        grid.phi_centers.push_back(-180.0 + (2.0 * i + 1.0) * eps_phi);
    grid.values.assign(nt * np, 0.0);

    for (const aorsim::PathComponent &c : w.components) {
        grid.total_power += c.power;
        for (std::size_t ti = 0; ti < nt; ++ti) {
            const double tlo = grid.theta_centers[ti] - eps_theta;
            const double thi = grid.theta_centers[ti] + eps_theta;
            const bool last_t = ti == nt - 1;
            if (!(c.theta_deg >= tlo && (c.theta_deg < thi || (last_t && c.theta_deg <= thi))))
                continue;
            for (std::size_t pi = 0; pi < np; ++pi) {
                const double plo = grid.phi_centers[pi] - eps_phi;
                const double phi = grid.phi_centers[pi] + eps_phi;
                if (c.phi_deg >= plo && c.phi_deg < phi)
                    grid.values[ti * np + pi] += c.power / (4.0 * eps_theta * eps_phi);
            }
        }
    }
    return grid;
}

// Reference marginals via the same interval scan.
inline std::pair<std::vector<double>, std::vector<double>>
brute_force_marginals(const aorsim::WeightedEnsemble &w, double eps_theta, double eps_phi)
{
    const std::size_t nt = static_cast<std::size_t>(std::llround(90.0 / (2.0 * eps_theta)));
    const std::size_t np = static_cast<std::size_t>(std::llround(360.0 / (2.0 * eps_phi)));
    std::vector<double> theta(nt, 0.0), phi(np, 0.0);
    double total = 0.0;
    for (const aorsim::PathComponent &c : w.components) {
        total += c.power;
        for (std::size_t ti = 0; ti < nt; ++ti) {
            const double lo = 2.0 * ti * eps_theta;
            const double hi = lo + 2.0 * eps_theta;
            if (c.theta_deg >= lo && (c.theta_deg < hi || (ti == nt - 1 && c.theta_deg <= hi)))
                theta[ti] += c.power;
        }
        for (std::size_t pi = 0; pi < np; ++pi) {
            const double lo = -180.0 + 2.0 * pi * eps_phi;
            const double hi = lo + 2.0 * eps_phi;
            if (c.phi_deg >= lo && c.phi_deg < hi)
                phi[pi] += c.power;
        }
    }
    for (double &v : theta)
        v = v / total / (2.0 * eps_theta);
    for (double &v : phi)
        v = v / total / (2.0 * eps_phi);
    return {theta, phi};
}

// Kolmogorov-Smirnov statistic of sorted samples against the uniform law on
// [lo, hi].
inline double ks_uniform(std::vector<double> samples, double lo, double hi)
{
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double stat = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double cdf = (samples[i] - lo) / (hi - lo);
        stat = std::max(stat, std::abs(cdf - (static_cast<double>(i) + 1.0) / n));
        stat = std::max(stat, std::abs(cdf - static_cast<double>(i) / n));
    }
    return stat;
}

inline bool near(double a, double b, double tol)
{
    return std::abs(a - b) <= tol;
}

inline bool near_rel(double a, double b, double rel)
{
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

} // namespace aorsim_test
