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
#include "aorsim/geometry.hpp"
#include "aorsim/pdp.hpp"
#include "aorsim/rng.hpp"

#include <cstddef>
#include <vector>

namespace aorsim {

// One multipath component. Cluster index 0 marks local scattering around
// the receiver; indices >= 1 follow the cluster profile order.
struct PathComponent
{
    std::size_t cluster_index = 0;
    std::size_t path_index = 0;
    double theta_deg = 0.0; // arrival zenith angle in [0, 90]
    double phi_deg = 0.0;   // arrival azimuth in [-180, 180)
    double power = 0.0;     // linear, >= 0
};

// Full set of angle/power triples for one channel realization. Component
// powers sum to one. paths_per_cluster[0] counts the local block.
struct PathEnsemble
{
    std::vector<PathComponent> components;
    std::size_t cluster_count = 0;
    std::vector<std::size_t> paths_per_cluster;
};

struct GenerationConfig
{
    std::size_t paths_per_cluster = 50;
    std::size_t local_paths = 100;
    double kappa = 10.0;               // von Mises concentration, >= 0
    double local_power_fraction = 0.2; // share of total power in the local block, [0, 1)
    double local_elevation_deg = 88.0; // mean zenith angle of local paths
    double local_elevation_spread_deg = 3.0;  // zenith std dev of local paths, >= 0
    std::size_t diffuse_paths = 200;          // background ring path count
    double diffuse_power_fraction = 5e-4;     // share of total power arriving diffusely, [0, 1)
    double diffuse_elevation_spread_deg = 6.0; // zenith std dev of diffuse paths, >= 0
    double distance_m = 200.0;                 // Tx-Rx separation
};

// Throws std::invalid_argument when a field is out of range.
void validate(const GenerationConfig &cfg);

// Scatterers for every delayed cluster: points are drawn area-uniformly on
// the forward region of the cluster's half-spheroid, and each path's power
// is its equal cluster share P_i / paths_per_cluster scaled by the transmit
// gain toward the scatterer (beam peak = 1). The damped powers are returned
// as they are, so the block sums to the transmit-coupling factor of the
// profile: narrow transmit beams genuinely remove power from clusters they
// barely illuminate, and an omnidirectional transmitter leaves every share
// exactly unscaled. The profile must be normalized (sum of powers 1 within
// 1e-9, else std::invalid_argument) with strictly positive delays (else
// std::domain_error).
std::vector<PathComponent> generate_cluster_paths(const ClusterProfile &profile,
                                                  const LinkGeometry &geom,
                                                  const AntennaPattern &tx,
                                                  const GenerationConfig &cfg, RngStream &rng);

// Non-cluster paths around the receiver, all under cluster index 0. First
// the local scattering block: azimuths follow a von Mises distribution
// centered on the line-of-sight direction, zenith angles follow a normal
// distribution around local_elevation_deg truncated to [0, 90] (drawn only
// when the spread is positive), and each of the local_paths components
// carries local_power_fraction / local_paths. Then the diffuse background
// ring: far-field clutter arriving from every azimuth (uniform over the
// circle) near the horizon, with zenith angles truncated-normal around
// local_elevation_deg under the wider diffuse_elevation_spread_deg; each
// of the diffuse_paths components carries diffuse_power_fraction /
// diffuse_paths (the block is omitted entirely when the diffuse fraction
// is zero).
std::vector<PathComponent> generate_local_scatter(const GenerationConfig &cfg, RngStream &rng);

// Concatenates the local block (first) and the cluster paths. The local
// block keeps its share of the undamped whole while the clusters split the
// remainder in proportion to their (possibly transmit-damped) powers, and
// the ensemble total is rescaled to one. Zero local power yields the
// cluster paths unchanged. Throws std::runtime_error when both inputs are
// empty or when nothing retains any power.
PathEnsemble assemble_ensemble(const std::vector<PathComponent> &cluster_paths,
                               const std::vector<PathComponent> &local_paths);

// Full realization: cluster paths, then local scatter, then assembly, all
// from one rng stream.
PathEnsemble generate_ensemble(const ClusterProfile &profile, const LinkGeometry &geom,
                               const AntennaPattern &tx, const GenerationConfig &cfg,
                               RngStream &rng);

} // namespace aorsim
