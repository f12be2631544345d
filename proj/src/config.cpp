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

#include "aorsim/config.hpp"

#include "aorsim/csv.hpp"
#include "aorsim/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace aorsim {

namespace {

struct Violations
{
    std::vector<std::string> items;

    void add(const std::string &where, const std::string &what)
    {
        items.push_back(where + ": " + what);
    }
};

bool parse_bool(std::string_view v, bool &out)
{
    if (v == "true" || v == "yes" || v == "1") {
        out = true;
        return true;
    }
    if (v == "false" || v == "no" || v == "0") {
        out = false;
        return true;
    }
    return false;
}

bool parse_u64(std::string_view v, std::uint64_t &out)
{
    const char *first = v.data();
    const char *last = v.data() + v.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && !v.empty();
}

bool parse_list(std::string_view v, std::vector<double> &out)
{
    out.clear();
    if (trim(v).empty())
        return true;
    for (std::string_view field : split_fields(v)) {
        double value = 0.0;
        if (!parse_double(field, value))
            return false;
        out.push_back(value);
    }
    return true;
}

struct Entry
{
    std::string section;
    std::string key;
    std::string value;
    std::size_t line = 0;
};

std::vector<Entry> tokenize(std::istream &in, const std::string &origin, Violations &bad)
{
    std::vector<Entry> entries;
    std::string line;
    std::string section;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trim(line);
        if (body.empty() || body.front() == '#' || body.front() == ';')
            continue;

        if (body.front() == '[') {
            if (body.back() != ']' || body.size() < 3) {
                bad.add(origin + " line " + std::to_string(line_no), "malformed section header");
                continue;
            }
            section = std::string(trim(body.substr(1, body.size() - 2)));
            continue;
        }

        const std::size_t eq = body.find('=');
        if (eq == std::string_view::npos) {
            bad.add(origin + " line " + std::to_string(line_no), "expected 'key = value'");
            continue;
        }
        Entry e;
        e.section = section;
        e.key = std::string(trim(body.substr(0, eq)));
        e.value = std::string(trim(body.substr(eq + 1)));
        e.line = line_no;
        if (e.section.empty()) {
            bad.add(origin + " line " + std::to_string(line_no), "key outside any [section]");
            continue;
        }
        if (e.key.empty()) {
            bad.add(origin + " line " + std::to_string(line_no), "empty key");
            continue;
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

class Assigner
{
public:
    Assigner(SimConfig &config, Violations &bad) : config_(config), bad_(bad) {}

    void apply(const Entry &e)
    {
        const std::string where = e.section + "." + e.key;
        if (e.section == "scenario")
            scenario(e, where);
        else if (e.section == "geometry")
            geometry(e, where);
        else if (e.section == "tx")
            pattern(e, where, config_.tx);
        else if (e.section == "rx")
            pattern(e, where, config_.rx);
        else if (e.section == "generation")
            generation(e, where);
        else if (e.section == "estimator")
            estimator(e, where);
        else if (e.section == "sweep")
            sweep(e, where);
        else if (e.section == "run")
            run(e, where);
        else
            bad_.add(where, "unknown section");
    }

private:
    void number(const Entry &e, const std::string &where, double &out)
    {
        if (!parse_double(e.value, out))
            bad_.add(where, "not a number: '" + e.value + "'");
    }

    void boolean(const Entry &e, const std::string &where, bool &out)
    {
        if (!parse_bool(e.value, out))
            bad_.add(where, "not a boolean: '" + e.value + "'");
    }

    void scenario(const Entry &e, const std::string &where)
    {
        if (e.key == "file") {
            config_.scenario_file = e.value;
        } else if (e.key == "format") {
            if (e.value == "cluster_table")
                config_.scenario_format = ProfileFormat::cluster_table;
            else if (e.value == "pds_trace")
                config_.scenario_format = ProfileFormat::pds_trace;
            else
                bad_.add(where, "expected cluster_table or pds_trace");
        } else if (e.key == "delay_scale") {
            if (e.value == "absolute")
                config_.delay_scale = DelayScale::absolute;
            else if (e.value == "normalized")
                config_.delay_scale = DelayScale::normalized;
            else
                bad_.add(where, "expected absolute or normalized");
        } else if (e.key == "delay_spread_ns") {
            double ns = 0.0;
            number(e, where, ns);
            config_.delay_spread_s = ns / 1e9;
        } else if (e.key == "frequency_ghz") {
            double ghz = 0.0;
            number(e, where, ghz);
            config_.frequency_hz = ghz * 1e9;
        } else {
            bad_.add(where, "unknown key");
        }
    }

    void geometry(const Entry &e, const std::string &where)
    {
        if (e.key == "distance_m")
            number(e, where, config_.distance_m);
        else
            bad_.add(where, "unknown key");
    }

    void pattern(const Entry &e, const std::string &where, PatternParams &p)
    {
        if (e.key == "omni")
            boolean(e, where, p.omni);
        else if (e.key == "gain_dbi")
            number(e, where, p.gain_dbi);
        else if (e.key == "hpbw_theta_deg")
            number(e, where, p.hpbw_theta_deg);
        else if (e.key == "hpbw_phi_deg")
            number(e, where, p.hpbw_phi_deg);
        else if (e.key == "alpha_deg")
            number(e, where, p.alpha_deg);
        else
            bad_.add(where, "unknown key");
    }

    void generation(const Entry &e, const std::string &where)
    {
        if (e.key == "paths_per_cluster" || e.key == "local_paths" || e.key == "diffuse_paths") {
            std::uint64_t n = 0;
            if (!parse_u64(e.value, n)) {
                bad_.add(where, "not a non-negative integer: '" + e.value + "'");
                return;
            }
            if (e.key == "paths_per_cluster")
                config_.generation.paths_per_cluster = static_cast<std::size_t>(n);
            else if (e.key == "local_paths")
                config_.generation.local_paths = static_cast<std::size_t>(n);
            else
                config_.generation.diffuse_paths = static_cast<std::size_t>(n);
        } else if (e.key == "kappa") {
            number(e, where, config_.generation.kappa);
        } else if (e.key == "local_power_fraction") {
            number(e, where, config_.generation.local_power_fraction);
        } else if (e.key == "local_elevation_deg") {
            number(e, where, config_.generation.local_elevation_deg);
        } else if (e.key == "local_elevation_spread_deg") {
            number(e, where, config_.generation.local_elevation_spread_deg);
        } else if (e.key == "diffuse_power_fraction") {
            number(e, where, config_.generation.diffuse_power_fraction);
        } else if (e.key == "diffuse_elevation_spread_deg") {
            number(e, where, config_.generation.diffuse_elevation_spread_deg);
        } else {
            bad_.add(where, "unknown key");
        }
    }

    void estimator(const Entry &e, const std::string &where)
    {
        if (e.key == "eps_theta_deg")
            number(e, where, config_.eps_theta);
        else if (e.key == "eps_phi_deg")
            number(e, where, config_.eps_phi);
        else
            bad_.add(where, "unknown key");
    }

    void sweep(const Entry &e, const std::string &where)
    {
        if (e.key == "alpha_deg") {
            if (!parse_list(e.value, config_.alpha_sweep))
                bad_.add(where, "expected a comma-separated number list");
        } else if (e.key == "hpbw_phi_deg") {
            if (!parse_list(e.value, config_.hpbw_phi_sweep))
                bad_.add(where, "expected a comma-separated number list");
        } else {
            bad_.add(where, "unknown key");
        }
    }

    void run(const Entry &e, const std::string &where)
    {
        if (e.key == "runs") {
            std::uint64_t n = 0;
            if (!parse_u64(e.value, n))
                bad_.add(where, "not a non-negative integer: '" + e.value + "'");
            else
                config_.runs = static_cast<std::size_t>(n);
        } else if (e.key == "seed") {
            std::uint64_t n = 0;
            if (!parse_u64(e.value, n))
                bad_.add(where, "not a 64-bit unsigned integer: '" + e.value + "'");
            else
                config_.seed = n;
        } else if (e.key == "jobs") {
            std::uint64_t n = 0;
            if (!parse_u64(e.value, n) || n < 1)
                bad_.add(where, "not a positive integer: '" + e.value + "'");
            else
                config_.jobs = static_cast<unsigned>(n);
        } else if (e.key == "output_dir") {
            config_.output_dir = e.value;
        } else if (e.key == "emit_plots") {
            boolean(e, where, config_.emit_plots);
        } else if (e.key == "quiet") {
            boolean(e, where, config_.quiet);
        } else {
            bad_.add(where, "unknown key");
        }
    }

    SimConfig &config_;
    Violations &bad_;
};

void check_pattern(const PatternParams &p, const std::string &name, Violations &bad)
{
    if (!std::isfinite(p.gain_dbi))
        bad.add(name + ".gain_dbi", "must be finite");
    if (p.omni)
        return;
    if (!(p.hpbw_theta_deg > 0.0) || p.hpbw_theta_deg > 180.0)
        bad.add(name + ".hpbw_theta_deg", "must lie in (0, 180]");
    if (!(p.hpbw_phi_deg > 0.0) || p.hpbw_phi_deg > 180.0)
        bad.add(name + ".hpbw_phi_deg", "must lie in (0, 180]");
    if (!std::isfinite(p.alpha_deg))
        bad.add(name + ".alpha_deg", "must be finite");
}

void check_grid_parameter(double eps, double span, const std::string &where, Violations &bad)
{
    if (!std::isfinite(eps) || !(eps > 0.0)) {
        bad.add(where, "must be positive");
        return;
    }
    const double n = span / (2.0 * eps);
    if (std::abs(n - std::round(n)) > 1e-9 || n < 1.0)
        bad.add(where, "must divide the angular domain into whole bins");
}

void check_semantics(SimConfig &config, Violations &bad)
{
    if (config.scenario_file.empty())
        bad.add("scenario.file", "is required");
    if (config.delay_scale == DelayScale::normalized && !(config.delay_spread_s > 0.0))
        bad.add("scenario.delay_spread_ns", "must be positive for normalized delay scale");

    if (!std::isfinite(config.distance_m) || !(config.distance_m > 0.0))
        bad.add("geometry.distance_m", "must be positive");

    check_pattern(config.tx, "tx", bad);
    check_pattern(config.rx, "rx", bad);

    if (config.generation.paths_per_cluster < 1)
        bad.add("generation.paths_per_cluster", "must be at least 1");
    if (config.generation.local_paths < 1)
        bad.add("generation.local_paths", "must be at least 1");
    if (!std::isfinite(config.generation.kappa) || config.generation.kappa < 0.0)
        bad.add("generation.kappa", "must be non-negative");
    if (!std::isfinite(config.generation.local_power_fraction) ||
        config.generation.local_power_fraction < 0.0 || config.generation.local_power_fraction >= 1.0)
        bad.add("generation.local_power_fraction", "must lie in [0, 1)");
    if (!std::isfinite(config.generation.local_elevation_deg) ||
        config.generation.local_elevation_deg < 0.0 || config.generation.local_elevation_deg > 90.0)
        bad.add("generation.local_elevation_deg", "must lie in [0, 90]");
    if (!std::isfinite(config.generation.local_elevation_spread_deg) ||
        config.generation.local_elevation_spread_deg < 0.0)
        bad.add("generation.local_elevation_spread_deg", "must be non-negative");
    if (!std::isfinite(config.generation.diffuse_power_fraction) ||
        config.generation.diffuse_power_fraction < 0.0 ||
        config.generation.diffuse_power_fraction >= 1.0)
        bad.add("generation.diffuse_power_fraction", "must lie in [0, 1)");
    else if (std::isfinite(config.generation.local_power_fraction) &&
             config.generation.local_power_fraction >= 0.0 &&
             config.generation.local_power_fraction + config.generation.diffuse_power_fraction >=
                 1.0)
        bad.add("generation.diffuse_power_fraction",
                "local and diffuse power fractions must sum below 1");
    if (config.generation.diffuse_power_fraction > 0.0 && config.generation.diffuse_paths < 1)
        bad.add("generation.diffuse_paths", "must be at least 1 when diffuse power is assigned");
    if (!std::isfinite(config.generation.diffuse_elevation_spread_deg) ||
        config.generation.diffuse_elevation_spread_deg < 0.0)
        bad.add("generation.diffuse_elevation_spread_deg", "must be non-negative");

    check_grid_parameter(config.eps_theta, 90.0, "estimator.eps_theta_deg", bad);
    check_grid_parameter(config.eps_phi, 360.0, "estimator.eps_phi_deg", bad);

    for (double a : config.alpha_sweep)
        if (!std::isfinite(a))
            bad.add("sweep.alpha_deg", "contains a non-finite value");
    for (double h : config.hpbw_phi_sweep)
        if (!std::isfinite(h) || !(h > 0.0) || h > 180.0)
            bad.add("sweep.hpbw_phi_deg", "values must lie in (0, 180]");
    if (!config.hpbw_phi_sweep.empty() && config.rx.omni)
        bad.add("sweep.hpbw_phi_deg", "cannot sweep the beamwidth of an omnidirectional receiver");

    if (config.runs < 1)
        bad.add("run.runs", "must be at least 1");
    if (config.output_dir.empty())
        bad.add("run.output_dir", "must not be empty");

    // The distance feeds path generation; keep the two views consistent.
    config.generation.distance_m = config.distance_m;
}

} // namespace

SimConfig parse_sim_config(std::istream &in, const std::string &origin)
{
    SimConfig config;
    Violations bad;

    const std::vector<Entry> entries = tokenize(in, origin, bad);
    Assigner assigner(config, bad);
    for (const Entry &e : entries)
        assigner.apply(e);
    check_semantics(config, bad);

    if (!bad.items.empty()) {
        std::string message = "invalid configuration (" + origin + "):";
        for (const std::string &item : bad.items)
            message += "\n  - " + item;
        throw ConfigError(message);
    }
    return config;
}

SimConfig load_sim_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    return parse_sim_config(in, path);
}

namespace {

void emit_pattern(std::ostream &out, const char *name, const PatternParams &p)
{
    out << name << ".omni=" << (p.omni ? 1 : 0) << '\n';
    out << name << ".gain_dbi=" << format_double(p.gain_dbi) << '\n';
    if (!p.omni) {
        out << name << ".hpbw_theta_deg=" << format_double(p.hpbw_theta_deg) << '\n';
        out << name << ".hpbw_phi_deg=" << format_double(p.hpbw_phi_deg) << '\n';
        out << name << ".alpha_deg=" << format_double(p.alpha_deg) << '\n';
    }
}

} // namespace

std::string canonical_config_text(const SimConfig &config)
{
    std::ostringstream out;
    out << "scenario.file=" << config.scenario_file << '\n';
    out << "scenario.format="
        << (config.scenario_format == ProfileFormat::cluster_table ? "cluster_table" : "pds_trace")
        << '\n';
    out << "scenario.delay_scale="
        << (config.delay_scale == DelayScale::absolute ? "absolute" : "normalized") << '\n';
    out << "scenario.delay_spread_s=" << format_double(config.delay_spread_s) << '\n';
    out << "scenario.frequency_hz=" << format_double(config.frequency_hz) << '\n';
    out << "geometry.distance_m=" << format_double(config.distance_m) << '\n';
    emit_pattern(out, "tx", config.tx);
    emit_pattern(out, "rx", config.rx);
    out << "generation.paths_per_cluster=" << config.generation.paths_per_cluster << '\n';
    out << "generation.local_paths=" << config.generation.local_paths << '\n';
    out << "generation.kappa=" << format_double(config.generation.kappa) << '\n';
    out << "generation.local_power_fraction="
        << format_double(config.generation.local_power_fraction) << '\n';
    out << "generation.local_elevation_deg="
        << format_double(config.generation.local_elevation_deg) << '\n';
    out << "generation.local_elevation_spread_deg="
        << format_double(config.generation.local_elevation_spread_deg) << '\n';
    out << "generation.diffuse_paths=" << config.generation.diffuse_paths << '\n';
    out << "generation.diffuse_power_fraction="
        << format_double(config.generation.diffuse_power_fraction) << '\n';
    out << "generation.diffuse_elevation_spread_deg="
        << format_double(config.generation.diffuse_elevation_spread_deg) << '\n';
    out << "estimator.eps_theta_deg=" << format_double(config.eps_theta) << '\n';
    out << "estimator.eps_phi_deg=" << format_double(config.eps_phi) << '\n';

    out << "sweep.alpha_deg=";
    for (std::size_t i = 0; i < config.alpha_sweep.size(); ++i)
        out << (i ? "," : "") << format_double(config.alpha_sweep[i]);
    out << '\n';
    out << "sweep.hpbw_phi_deg=";
    for (std::size_t i = 0; i < config.hpbw_phi_sweep.size(); ++i)
        out << (i ? "," : "") << format_double(config.hpbw_phi_sweep[i]);
    out << '\n';

    out << "run.runs=" << config.runs << '\n';
    out << "run.seed=" << config.seed << '\n';
    return out.str();
}

std::uint64_t config_hash(const SimConfig &config)
{
    const std::string text = canonical_config_text(config);
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char byte : text) {
        hash ^= byte;
        hash *= 1099511628211ull;
    }
    return hash;
}

AntennaPattern build_pattern(const PatternParams &params)
{
    if (params.omni)
        return make_omni(params.gain_dbi);
    return make_pattern(params.gain_dbi, params.hpbw_theta_deg, params.hpbw_phi_deg,
                        params.alpha_deg);
}

} // namespace aorsim
