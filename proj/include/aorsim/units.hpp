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

#include <cmath>
#include <stdexcept>

namespace aorsim {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSpeedOfLight = 299792458.0; // m/s, exact

inline double deg2rad(double deg) { return deg * (kPi / 180.0); }
inline double rad2deg(double rad) { return rad * (180.0 / kPi); }

// Wrap an azimuth into [-180, 180). Inputs already in range pass through
// unchanged (bit-exact), which keeps steering identities exact.
inline double wrap_deg(double x)
{
    double w = x - 360.0 * std::floor((x + 180.0) / 360.0);
    if (w >= 180.0)
        w -= 360.0;
    if (w < -180.0)
        w += 360.0;
    return w;
}

// Linear power ratio -> dB
inline double db(double linear)
{
    if (!(linear > 0.0))
        throw std::domain_error("db: value must be positive");
    return 10.0 * std::log10(linear);
}

// dB -> linear power ratio
inline double lin(double decibel)
{
    return std::pow(10.0, decibel / 10.0);
}

} // namespace aorsim
