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
#include "aorsim/pdp.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace aorsim {

enum class DelayScale
{
    absolute,  // scenario delays are excess delays in ns
    normalized // scenario delays are dimensionless, scaled by delay_spread
};

// Declarative antenna description as it appears in a config file.
struct PatternParams
{
    bool omni = false;
    double gain_dbi = 0.0;
    double hpbw_theta_deg = 0.0;
    double hpbw_phi_deg = 0.0;
    double alpha_deg = 0.0;
};

// Full simulation description from an INI-style config file. Sections:
// [scenario], [geometry], [tx], [rx], [generation], [estimator], [sweep],
// [run]; keys are documented in the README and in configs/.
struct SimConfig
{
    std::string scenario_file;
    ProfileFormat scenario_format = ProfileFormat::cluster_table;
    DelayScale delay_scale = DelayScale::absolute;
    double delay_spread_s = 0.0; // required for normalized scenarios
    double frequency_hz = 0.0;   // metadata only, no formula consumes it

    double distance_m = 200.0;
    PatternParams tx;
    PatternParams rx;
    GenerationConfig generation;

    double eps_theta = 0.5;
    double eps_phi = 0.5;

    std::vector<double> alpha_sweep;    // empty -> single point at rx alpha
    std::vector<double> hpbw_phi_sweep; // empty -> no beamwidth sweep

    std::size_t runs = 200;
    std::uint64_t seed = 0;
    std::string output_dir = "out";
    unsigned jobs = 1;
    bool emit_plots = true;
    bool quiet = false;
};

// Parses and validates a config file, collecting every violation into one
// ConfigError rather than stopping at the first.
SimConfig load_sim_config(const std::string &path);
SimConfig parse_sim_config(std::istream &in, const std::string &origin);

// Deterministic serialization of the fields that influence numerical
// results (presentation and scheduling fields are excluded, so --jobs or a
// different output directory never perturbs emitted data).
std::string canonical_config_text(const SimConfig &config);

// FNV-1a over the canonical text; stamped into every output file header.
std::uint64_t config_hash(const SimConfig &config);

AntennaPattern build_pattern(const PatternParams &params);

} // namespace aorsim
