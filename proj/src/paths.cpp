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

#include "aorsim/paths.hpp"

#include "aorsim/units.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aorsim {

namespace {

// Truncated normal zenith angle via Box-Muller, redrawn until it lands
// inside [0, 90]; a zero spread keeps the mean exactly and consumes no
// draws.
double truncated_zenith(double mean_deg, double spread_deg, RngStream &rng)
{
    if (!(spread_deg > 0.0))
        return mean_deg;
    for (;;) {
        const double u1 = rng.uniform01();
        const double u2 = rng.uniform01();
        const double z = std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(2.0 * kPi * u2);
        const double theta = mean_deg + spread_deg * z;
        if (theta >= 0.0 && theta <= 90.0)
            return theta;
    }
}

} // namespace

void validate(const GenerationConfig &cfg)
{
    if (cfg.paths_per_cluster < 1)
        throw std::invalid_argument("paths_per_cluster must be at least 1");
    if (cfg.local_paths < 1)
        throw std::invalid_argument("local_paths must be at least 1");
    if (!std::isfinite(cfg.kappa) || cfg.kappa < 0.0)
        throw std::invalid_argument("kappa must be non-negative");
    if (!std::isfinite(cfg.local_power_fraction) || cfg.local_power_fraction < 0.0 ||
        cfg.local_power_fraction >= 1.0)
        throw std::invalid_argument("local_power_fraction must lie in [0, 1)");
    if (!std::isfinite(cfg.local_elevation_deg) || cfg.local_elevation_deg < 0.0 ||
        cfg.local_elevation_deg > 90.0)
        throw std::invalid_argument("local_elevation_deg must lie in [0, 90]");
    if (!std::isfinite(cfg.local_elevation_spread_deg) || cfg.local_elevation_spread_deg < 0.0)
        throw std::invalid_argument("local_elevation_spread_deg must be non-negative");
    if (!std::isfinite(cfg.diffuse_power_fraction) || cfg.diffuse_power_fraction < 0.0 ||
        cfg.diffuse_power_fraction >= 1.0)
        throw std::invalid_argument("diffuse_power_fraction must lie in [0, 1)");
    if (!std::isfinite(cfg.diffuse_elevation_spread_deg) || cfg.diffuse_elevation_spread_deg < 0.0)
        throw std::invalid_argument("diffuse_elevation_spread_deg must be non-negative");
    if (cfg.local_power_fraction + cfg.diffuse_power_fraction >= 1.0)
        throw std::invalid_argument("local and diffuse power fractions must sum below 1");
    if (cfg.diffuse_power_fraction > 0.0 && cfg.diffuse_paths < 1)
        throw std::invalid_argument("diffuse_paths must be at least 1 when diffuse power is assigned");
    if (!std::isfinite(cfg.distance_m) || !(cfg.distance_m > 0.0))
        throw std::invalid_argument("distance_m must be positive");
}

std::vector<PathComponent> generate_cluster_paths(const ClusterProfile &profile,
                                                  const LinkGeometry &geom,
                                                  const AntennaPattern &tx,
                                                  const GenerationConfig &cfg, RngStream &rng)
{
    validate(cfg);
    aorsim::validate(profile);
    if (std::abs(total_power(profile) - 1.0) > 1e-9)
        throw std::invalid_argument("cluster profile must be normalized to unit power");
    for (const Cluster &c : profile.clusters) {
        if (!(c.delay_s > 0.0))
            throw std::domain_error("cluster delays must be strictly positive");
    }

    std::vector<PathComponent> paths;
    paths.reserve(profile.clusters.size() * cfg.paths_per_cluster);

    // Each path carries an equal share of its cluster's profile power,
    // scaled by the transmit gain toward its scatterer (beam peak = 1). The
    // damped powers are kept as they are: a narrow transmit beam genuinely
    // removes power from clusters it barely illuminates, and the assembly
    // stage rebalances the ensemble total. An omnidirectional transmitter
    // weights every share by exactly one.
    for (std::size_t i = 0; i < profile.clusters.size(); ++i) {
        const Cluster &cluster = profile.clusters[i];
        const HalfEllipsoid e = ellipsoid_from_delay(geom, cluster.delay_s);
        const double path_share = cluster.power / static_cast<double>(cfg.paths_per_cluster);

        for (std::size_t j = 0; j < cfg.paths_per_cluster; ++j) {
            const Vec3 p = sample_surface_point(e, rng);
            const AnglePair dep = departure_angles(p, geom);
            const AnglePair arr = arrival_angles(p, geom);
            PathComponent c;
            c.cluster_index = i + 1;
            c.path_index = j;
            c.theta_deg = arr.theta_deg;
            c.phi_deg = arr.phi_deg;
            c.power = path_share * gain(tx, dep.theta_deg, dep.phi_deg) / tx.gain;
            paths.push_back(c);
        }
    }
    return paths;
}

std::vector<PathComponent> generate_local_scatter(const GenerationConfig &cfg, RngStream &rng)
{
    validate(cfg);

    std::vector<PathComponent> paths;
    const bool diffuse = cfg.diffuse_power_fraction > 0.0;
    paths.reserve(cfg.local_paths + (diffuse ? cfg.diffuse_paths : 0));
    const double path_power = cfg.local_power_fraction / static_cast<double>(cfg.local_paths);

    for (std::size_t j = 0; j < cfg.local_paths; ++j) {
        // von Mises draw by rejection: uniform proposal over the circle,
        // accepted with the density ratio to its mode.
        double azimuth_rad = 0.0;
        for (;;) {
            azimuth_rad = rng.uniform(-kPi, kPi);
            if (rng.uniform01() < std::exp(cfg.kappa * (std::cos(azimuth_rad) - 1.0)))
                break;
        }

        const double theta = truncated_zenith(cfg.local_elevation_deg,
                                              cfg.local_elevation_spread_deg, rng);

        PathComponent c;
        c.cluster_index = 0;
        c.path_index = j;
        c.theta_deg = theta;
        c.phi_deg = wrap_deg(rad2deg(azimuth_rad));
        c.power = path_power;
        paths.push_back(c);
    }

    if (diffuse) {
        // Near-horizon background ring: uniform azimuth over the circle,
        // zenith spread around the local-scatter mean but wider.
        const double diffuse_power =
            cfg.diffuse_power_fraction / static_cast<double>(cfg.diffuse_paths);
        for (std::size_t j = 0; j < cfg.diffuse_paths; ++j) {
            const double azimuth_rad = rng.uniform(-kPi, kPi);
            const double theta = truncated_zenith(cfg.local_elevation_deg,
                                                  cfg.diffuse_elevation_spread_deg, rng);

            PathComponent c;
            c.cluster_index = 0;
            c.path_index = cfg.local_paths + j;
            c.theta_deg = theta;
            c.phi_deg = wrap_deg(rad2deg(azimuth_rad));
            c.power = diffuse_power;
            paths.push_back(c);
        }
    }
    return paths;
}

PathEnsemble assemble_ensemble(const std::vector<PathComponent> &cluster_paths,
                               const std::vector<PathComponent> &local_paths)
{
    if (cluster_paths.empty() && local_paths.empty())
        throw std::runtime_error("cannot assemble an empty path ensemble");

    double local_sum = 0.0;
    for (const PathComponent &c : local_paths)
        local_sum += c.power;
    double cluster_sum = 0.0;
    for (const PathComponent &c : cluster_paths)
        cluster_sum += c.power;

    // The local block keeps its configured share of the undamped whole
    // (local_sum out of 1), so transmit-side damping of the delayed
    // clusters raises the local share of the final ensemble rather than
    // being renormalized away; the total is scaled to one at the end.
    const double cluster_scale = 1.0 - local_sum;
    const double total = local_sum + cluster_scale * cluster_sum;
    if (!(total > 0.0))
        throw std::runtime_error("path ensemble is left with no power");

    PathEnsemble ensemble;
    ensemble.components.reserve(cluster_paths.size() + local_paths.size());

    std::size_t max_cluster = 0;
    for (const PathComponent &c : cluster_paths)
        max_cluster = std::max(max_cluster, c.cluster_index);
    ensemble.cluster_count = max_cluster;
    ensemble.paths_per_cluster.assign(max_cluster + 1, 0);

    if (local_sum > 0.0) {
        for (const PathComponent &c : local_paths) {
            PathComponent scaled = c;
            scaled.power /= total;
            ensemble.components.push_back(scaled);
            ++ensemble.paths_per_cluster[0];
        }
    }

    for (const PathComponent &c : cluster_paths) {
        PathComponent scaled = c;
        scaled.power *= cluster_scale / total;
        ensemble.components.push_back(scaled);
        ++ensemble.paths_per_cluster[c.cluster_index];
    }

    if (ensemble.components.empty())
        throw std::runtime_error("cannot assemble an empty path ensemble");
    return ensemble;
}

PathEnsemble generate_ensemble(const ClusterProfile &profile, const LinkGeometry &geom,
                               const AntennaPattern &tx, const GenerationConfig &cfg,
                               RngStream &rng)
{
    const auto cluster_paths = generate_cluster_paths(profile, geom, tx, cfg, rng);
    const auto local_paths = generate_local_scatter(cfg, rng);
    return assemble_ensemble(cluster_paths, local_paths);
}

} // namespace aorsim
