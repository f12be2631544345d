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

namespace aorsim {

// Gaussian-beam power pattern, steerable in azimuth. The beam peaks at the
// horizon (zenith angle 90 deg) and at azimuth alpha; sigma values follow
// from the half-power beamwidths so the pattern is exactly -3 dB at
// +-HPBW/2. An omnidirectional pattern returns its boresight gain
// everywhere.
struct AntennaPattern
{
    double gain = 1.0; // linear boresight gain
    double hpbw_theta_deg = 0.0;
    double hpbw_phi_deg = 0.0;
    double sigma_theta_rad = 0.0;
    double sigma_phi_rad = 0.0;
    double alpha_deg = 0.0; // boresight azimuth in [-180, 180)
    bool omni = false;
};

// Throws std::domain_error when a beamwidth is outside (0, 180] or the gain
// is not finite.
AntennaPattern make_pattern(double gain_dbi, double hpbw_theta_deg, double hpbw_phi_deg,
                            double alpha_deg);

AntennaPattern make_omni(double gain_dbi = 0.0);

// Linear power gain toward zenith angle theta (0..90 deg, horizon at 90)
// and azimuth phi. Azimuth differences wrap across the +-180 seam. Throws
// std::domain_error when theta leaves [0, 90].
double gain(const AntennaPattern &pattern, double theta_deg, double phi_deg);

} // namespace aorsim
