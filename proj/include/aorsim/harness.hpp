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

#include "aorsim/config.hpp"
#include "aorsim/pdp.hpp"
#include "aorsim/spread.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace aorsim {

// What a full simulation left on disk, plus the aggregates behind it.
struct RunSummary
{
    std::vector<SpreadReport> alpha_reports;
    std::vector<SpreadReport> hpbw_reports;
    std::vector<std::string> emitted_files; // absolute or output-dir-relative paths
    std::uint64_t hash = 0;
    std::string scenario_note; // e.g. dropped zero-delay clusters
};

// Loads the scenario referenced by the config and prepares it for path
// generation: trace profiles are reduced to clusters, normalized delay
// scales are applied, zero-delay clusters are dropped (the local-scattering
// block models that energy), and powers are renormalized. A human-readable
// note about adjustments lands in *note when given. Throws
// std::runtime_error when nothing usable remains.
ClusterProfile load_scenario(const SimConfig &config, std::string *note = nullptr);

// Executes the configured sweeps and writes, per sweep point, the joint
// spectrum and the four marginal-density CSVs, plus spreads.csv, a run log,
// and SVG charts (unless disabled). Partial outputs are removed when a
// failure aborts the run.
RunSummary run(const SimConfig &config);

} // namespace aorsim
