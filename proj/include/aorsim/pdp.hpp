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

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace aorsim {

// One time cluster: excess delay relative to the direct path and the linear
// cluster power (relative units).
struct Cluster
{
    double delay_s = 0.0;
    double power = 0.0;
};

// Ordered cluster list extracted from a power delay profile. Delays are
// strictly increasing with delay_s[0] >= 0; powers are positive.
struct ClusterProfile
{
    std::vector<Cluster> clusters;
};

struct PdsSample
{
    double delay_s = 0.0;
    double power = 0.0;
};

// Sampled power delay spectrum trace (uniform or non-uniform delay grid).
struct PdsTrace
{
    std::vector<PdsSample> samples;
};

enum class ProfileFormat
{
    cluster_table,
    pds_trace
};

// Throws std::invalid_argument when the profile breaks its invariants
// (empty, non-increasing delays, negative first delay, non-positive power).
void validate(const ClusterProfile &profile);

// CSV readers. On-disk columns are `delay_ns,power_db`; `#` lines are
// comments. Delays come back in seconds, powers in linear units.
ClusterProfile load_cluster_profile(const std::string &path);
PdsTrace load_pds_trace(const std::string &path);
std::variant<ClusterProfile, PdsTrace> parse_profile(const std::string &path, ProfileFormat format);

// Stream variants used by the loaders and by tests.
ClusterProfile read_cluster_profile(std::istream &in);
PdsTrace read_pds_trace(std::istream &in);

// Writes the `delay_ns,power_db` CSV form of a profile.
void write_cluster_profile(std::ostream &out, const ClusterProfile &profile);
void write_cluster_profile(const std::string &path, const ClusterProfile &profile);

// One cluster per local maximum of the trace power sequence. A sample
// strictly above both neighbours is a maximum; boundary samples qualify when
// above their single neighbour; a plateau contributes one cluster at its
// first sample. Output delays are excess over the first extracted cluster.
// Throws std::runtime_error when the trace power is constant.
ClusterProfile extract_clusters(const PdsTrace &trace);

// Multiplies every delay by `delay_spread_s`; used to turn normalized
// profiles into concrete ones. Throws std::domain_error on spread <= 0.
ClusterProfile scale_delays(const ClusterProfile &profile, double delay_spread_s);

// Rescales powers so they sum to one.
ClusterProfile normalize_powers(const ClusterProfile &profile);

double total_power(const ClusterProfile &profile);

} // namespace aorsim
