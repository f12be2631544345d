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

#include "aorsim/pdp.hpp"

#include "aorsim/csv.hpp"
#include "aorsim/errors.hpp"
#include "aorsim/units.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace aorsim {

namespace {

struct RawRow
{
    double delay_ns = 0.0;
    double power_db = 0.0;
};

// Shared CSV walk for both profile flavours. Returns rows in file order and
// reports malformed content with 1-based line numbers.
std::vector<RawRow> read_rows(std::istream &in)
{
    std::vector<RawRow> rows;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trim(line);
        if (body.empty() || body.front() == '#')
            continue;

        const auto fields = split_fields(body);
        if (!header_seen) {
            if (fields.size() != 2 || trim(fields[0]) != "delay_ns" || trim(fields[1]) != "power_db")
                throw ParseError("expected header 'delay_ns,power_db'", line_no);
            header_seen = true;
            continue;
        }

        if (fields.size() != 2)
            throw ParseError("expected 2 fields, got " + std::to_string(fields.size()), line_no);

        RawRow row;
        if (!parse_double(fields[0], row.delay_ns))
            throw ParseError("invalid delay value '" + std::string(trim(fields[0])) + "'", line_no);
        if (!parse_double(fields[1], row.power_db))
            throw ParseError("invalid power value '" + std::string(trim(fields[1])) + "'", line_no);
        rows.push_back(row);
    }

    if (!header_seen)
        throw ParseError("missing header 'delay_ns,power_db'", line_no == 0 ? 1 : line_no);
    if (rows.empty())
        throw ParseError("no data rows", line_no);
    return rows;
}

std::ifstream open_or_throw(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return in;
}

} // namespace

void validate(const ClusterProfile &profile)
{
    if (profile.clusters.empty())
        throw std::invalid_argument("cluster profile is empty");
    if (profile.clusters.front().delay_s < 0.0)
        throw std::invalid_argument("first cluster delay is negative");
    for (std::size_t i = 0; i < profile.clusters.size(); ++i) {
        const Cluster &c = profile.clusters[i];
        if (!std::isfinite(c.delay_s) || !std::isfinite(c.power))
            throw std::invalid_argument("cluster " + std::to_string(i) + " is not finite");
        if (c.power <= 0.0)
            throw std::invalid_argument("cluster " + std::to_string(i) + " has non-positive power");
        if (i > 0 && profile.clusters[i - 1].delay_s >= c.delay_s)
            throw std::invalid_argument("cluster delays must be strictly increasing (cluster " +
                                        std::to_string(i) + ")");
    }
}

ClusterProfile read_cluster_profile(std::istream &in)
{
    ClusterProfile profile;
    for (const RawRow &row : read_rows(in)) {
        Cluster c;
        c.delay_s = row.delay_ns / 1e9;
        c.power = lin(row.power_db);
        profile.clusters.push_back(c);
    }
    validate(profile);
    return profile;
}

PdsTrace read_pds_trace(std::istream &in)
{
    PdsTrace trace;
    for (const RawRow &row : read_rows(in)) {
        PdsSample s;
        s.delay_s = row.delay_ns / 1e9;
        s.power = lin(row.power_db);
        trace.samples.push_back(s);
    }
    for (std::size_t i = 1; i < trace.samples.size(); ++i) {
        if (trace.samples[i - 1].delay_s >= trace.samples[i].delay_s)
            throw std::invalid_argument("trace delays must be strictly increasing (sample " +
                                        std::to_string(i) + ")");
    }
    return trace;
}

ClusterProfile load_cluster_profile(const std::string &path)
{
    auto in = open_or_throw(path);
    try {
        return read_cluster_profile(in);
    } catch (const ParseError &e) {
        throw ParseError(path + ": " + e.what(), e.line());
    }
}

PdsTrace load_pds_trace(const std::string &path)
{
    auto in = open_or_throw(path);
    try {
        return read_pds_trace(in);
    } catch (const ParseError &e) {
        throw ParseError(path + ": " + e.what(), e.line());
    }
}

std::variant<ClusterProfile, PdsTrace> parse_profile(const std::string &path, ProfileFormat format)
{
    if (format == ProfileFormat::cluster_table)
        return load_cluster_profile(path);
    return load_pds_trace(path);
}

void write_cluster_profile(std::ostream &out, const ClusterProfile &profile)
{
    out << "delay_ns,power_db\n";
    for (const Cluster &c : profile.clusters)
        out << format_double(c.delay_s * 1e9) << ',' << format_double(db(c.power)) << '\n';
}

void write_cluster_profile(const std::string &path, const ClusterProfile &profile)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    write_cluster_profile(out, profile);
}

ClusterProfile extract_clusters(const PdsTrace &trace)
{
    const auto &s = trace.samples;
    if (s.empty())
        throw std::invalid_argument("trace is empty");

    const std::size_t n = s.size();
    bool all_equal = true;
    for (std::size_t i = 1; i < n && all_equal; ++i)
        all_equal = s[i].power == s[0].power;
    if (all_equal)
        throw std::runtime_error("trace power is constant; no clusters found");

    ClusterProfile profile;
    for (std::size_t i = 0; i < n; ++i) {
        // Plateaus collapse to their first sample: step past equal powers and
        // compare against the next strictly different one.
        if (i > 0 && s[i - 1].power >= s[i].power)
            continue;
        std::size_t j = i;
        while (j + 1 < n && s[j + 1].power == s[i].power)
            ++j;
        if (j + 1 < n && s[j + 1].power > s[i].power)
            continue;
        profile.clusters.push_back({s[i].delay_s, s[i].power});
        // A single sample can head at most one cluster.
    }

    const double origin = profile.clusters.front().delay_s;
    for (Cluster &c : profile.clusters)
        c.delay_s -= origin;
    validate(profile);
    return profile;
}

ClusterProfile scale_delays(const ClusterProfile &profile, double delay_spread_s)
{
    if (!(delay_spread_s > 0.0))
        throw std::domain_error("delay spread must be positive");
    ClusterProfile scaled = profile;
    for (Cluster &c : scaled.clusters)
        c.delay_s *= delay_spread_s;
    return scaled;
}

ClusterProfile normalize_powers(const ClusterProfile &profile)
{
    const double total = total_power(profile);
    if (!(total > 0.0))
        throw std::invalid_argument("profile has no power");
    ClusterProfile normalized = profile;
    for (Cluster &c : normalized.clusters)
        c.power /= total;
    return normalized;
}

double total_power(const ClusterProfile &profile)
{
    double sum = 0.0;
    for (const Cluster &c : profile.clusters)
        sum += c.power;
    return sum;
}

} // namespace aorsim
