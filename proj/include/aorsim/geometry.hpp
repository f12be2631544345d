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

#include "aorsim/rng.hpp"

namespace aorsim {

struct Vec3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

Vec3 operator+(const Vec3 &a, const Vec3 &b);
Vec3 operator-(const Vec3 &a, const Vec3 &b);
double norm(const Vec3 &v);

// Tx-Rx link in a right-handed frame: z up, ground plane z = 0, both
// terminals on the x axis straddling the origin.
struct LinkGeometry
{
    double distance_m = 0.0;

    Vec3 tx_position() const { return {-0.5 * distance_m, 0.0, 0.0}; }
    Vec3 rx_position() const { return {+0.5 * distance_m, 0.0, 0.0}; }
};

// Throws std::domain_error unless distance is positive and finite.
LinkGeometry make_link(double distance_m);

// Upper half (z >= 0) of the prolate spheroid of constant total path length
// distance + c * delay, foci at Tx and Rx. Zero excess delay collapses the
// surface onto the Tx-Rx segment; such spheroids carry the degenerate flag.
struct HalfEllipsoid
{
    double a = 0.0; // semi-major axis along the Tx-Rx line, meters
    double b = 0.0; // equal minor semi-axes, meters
    double f = 0.0; // focal half-distance, meters
    bool degenerate = false;
};

// Throws std::domain_error on negative delay.
HalfEllipsoid ellipsoid_from_delay(const LinkGeometry &geom, double tau_s);

// Area-uniform point on the upper half-spheroid, centered on the origin,
// restricted to the forward-scattering region x <= f (the transmitter side
// of the receiver's transverse plane), so every single-bounce path reaches
// the receiver from the front half-space. Deterministic for a given rng
// state. Throws std::runtime_error for a degenerate spheroid.
Vec3 sample_surface_point(const HalfEllipsoid &e, RngStream &rng);

struct AnglePair
{
    double theta_deg = 0.0; // zenith angle, 0 = up, 90 = horizon
    double phi_deg = 0.0;   // azimuth in [-180, 180), 0 toward the far terminal
};

// Direction of (p - Rx) respectively (p - Tx). Azimuth 0 points along the
// link axis toward the opposite terminal (Rx->Tx for arrivals, Tx->Rx for
// departures), so a pattern steered to alpha = 0 faces the far end of the
// link. Throws std::runtime_error when the point coincides with the vertex
// and std::domain_error when it lies below the ground plane. A vertical
// direction reports azimuth 0.
AnglePair arrival_angles(const Vec3 &p, const LinkGeometry &geom);
AnglePair departure_angles(const Vec3 &p, const LinkGeometry &geom);

// Unit world vector for a zenith/azimuth pair in the receiver frame;
// inverse of the arrival_angles extraction.
Vec3 direction_from_angles(const AnglePair &angles);

} // namespace aorsim
