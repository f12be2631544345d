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

#include "aorsim/geometry.hpp"

#include "aorsim/units.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aorsim {

Vec3 operator+(const Vec3 &a, const Vec3 &b)
{
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}

Vec3 operator-(const Vec3 &a, const Vec3 &b)
{
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

double norm(const Vec3 &v)
{
    return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
}

LinkGeometry make_link(double distance_m)
{
    if (!std::isfinite(distance_m) || !(distance_m > 0.0))
        throw std::domain_error("link distance must be positive");
    return {distance_m};
}

HalfEllipsoid ellipsoid_from_delay(const LinkGeometry &geom, double tau_s)
{
    if (!std::isfinite(tau_s) || tau_s < 0.0)
        throw std::domain_error("excess delay must be non-negative");

    HalfEllipsoid e;
    e.f = 0.5 * geom.distance_m;
    e.a = 0.5 * (geom.distance_m + kSpeedOfLight * tau_s);
    e.degenerate = tau_s == 0.0;
    e.b = e.degenerate ? 0.0 : std::sqrt(e.a * e.a - e.f * e.f);
    return e;
}

Vec3 sample_surface_point(const HalfEllipsoid &e, RngStream &rng)
{
    if (e.degenerate || !(e.b > 0.0))
        throw std::runtime_error("degenerate spheroid has no surface to sample");

    // Parametrize x = a cos(u), y = b sin(u) cos(w), z = b sin(u) sin(w).
    // The area element is proportional to sin(u) sqrt(a^2 sin^2 u + b^2
    // cos^2 u), bounded by a, so rejection on u with that ratio and a
    // uniform w in [0, pi] (the z >= 0 half) is area-uniform.
    //
    // Sampling covers the forward-scattering region only: the cap beyond
    // the receiver's transverse plane (x > f) is excluded, since single
    // bounces there would reach the receiver from the back half-space
    // while sitting dead-center in the transmit beam, which would make the
    // arrival azimuth spread grow as the transmit beam narrows instead of
    // shrinking with it.
    const double a2 = e.a * e.a;
    const double b2 = e.b * e.b;
    const double cos_cap = e.f / e.a; // x <= f  <=>  cos(u) <= f / a
    double u = 0.0;
    for (;;) {
        u = rng.uniform(0.0, kPi);
        const double su = std::sin(u);
        const double cu = std::cos(u);
        const double ratio = su * std::sqrt(a2 * su * su + b2 * cu * cu) / e.a;
        if (rng.uniform01() < ratio && cu <= cos_cap)
            break;
    }
    const double w = rng.uniform(0.0, kPi);

    const double su = std::sin(u);
    return {e.a * std::cos(u), e.b * su * std::cos(w), e.b * su * std::sin(w)};
}

namespace {

// Zenith/azimuth of (p - vertex). The azimuth reference axis is +x for the
// transmitter and -x for the receiver, so each terminal's boresight azimuth
// 0 faces the other terminal; axis_sign selects the frame.
AnglePair angles_from(const Vec3 &vertex, const Vec3 &p, double axis_sign)
{
    if (p.z < 0.0)
        throw std::domain_error("point lies below the ground plane");
    const Vec3 v = p - vertex;
    const double r = norm(v);
    if (r == 0.0)
        throw std::runtime_error("point coincides with the reference terminal");

    const double vx = axis_sign * v.x;
    const double vy = axis_sign * v.y;
    AnglePair out;
    out.theta_deg = rad2deg(std::acos(std::clamp(v.z / r, -1.0, 1.0)));
    out.phi_deg = (vx == 0.0 && vy == 0.0) ? 0.0 : wrap_deg(rad2deg(std::atan2(vy, vx)));
    return out;
}

} // namespace

AnglePair arrival_angles(const Vec3 &p, const LinkGeometry &geom)
{
    return angles_from(geom.rx_position(), p, -1.0);
}

AnglePair departure_angles(const Vec3 &p, const LinkGeometry &geom)
{
    return angles_from(geom.tx_position(), p, 1.0);
}

Vec3 direction_from_angles(const AnglePair &angles)
{
    const double theta = deg2rad(angles.theta_deg);
    const double phi = deg2rad(angles.phi_deg);
    const double st = std::sin(theta);
    return {-st * std::cos(phi), -st * std::sin(phi), std::cos(theta)};
}

} // namespace aorsim
