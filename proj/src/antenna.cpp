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

#include "aorsim/antenna.hpp"

#include "aorsim/units.hpp"

#include <cmath>
#include <stdexcept>

namespace aorsim {

namespace {

double hpbw_to_sigma_rad(double hpbw_deg)
{
    static const double kDenom = 2.0 * std::sqrt(std::log(2.0));
    return deg2rad(hpbw_deg) / kDenom;
}

} // namespace

AntennaPattern make_pattern(double gain_dbi, double hpbw_theta_deg, double hpbw_phi_deg,
                            double alpha_deg)
{
    if (!std::isfinite(gain_dbi))
        throw std::domain_error("antenna gain must be finite");
    if (!(hpbw_theta_deg > 0.0) || hpbw_theta_deg > 180.0)
        throw std::domain_error("elevation beamwidth must lie in (0, 180] degrees");
    if (!(hpbw_phi_deg > 0.0) || hpbw_phi_deg > 180.0)
        throw std::domain_error("azimuth beamwidth must lie in (0, 180] degrees");

    AntennaPattern p;
    p.gain = lin(gain_dbi);
    p.hpbw_theta_deg = hpbw_theta_deg;
    p.hpbw_phi_deg = hpbw_phi_deg;
    p.sigma_theta_rad = hpbw_to_sigma_rad(hpbw_theta_deg);
    p.sigma_phi_rad = hpbw_to_sigma_rad(hpbw_phi_deg);
    p.alpha_deg = wrap_deg(alpha_deg);
    p.omni = false;
    return p;
}

AntennaPattern make_omni(double gain_dbi)
{
    if (!std::isfinite(gain_dbi))
        throw std::domain_error("antenna gain must be finite");
    AntennaPattern p;
    p.gain = lin(gain_dbi);
    p.omni = true;
    return p;
}

double gain(const AntennaPattern &pattern, double theta_deg, double phi_deg)
{
    if (!(theta_deg >= 0.0 && theta_deg <= 90.0))
        throw std::domain_error("zenith angle must lie in [0, 90] degrees");
    if (pattern.omni)
        return pattern.gain;

    const double dt = deg2rad(90.0 - theta_deg) / pattern.sigma_theta_rad;
    const double dp = deg2rad(wrap_deg(phi_deg - pattern.alpha_deg)) / pattern.sigma_phi_rad;
    return pattern.gain * std::exp(-dt * dt) * std::exp(-dp * dp);
}

} // namespace aorsim
