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

#include "aorsim/harness.hpp"

#include "aorsim/csv.hpp"
#include "aorsim/estimator.hpp"
#include "aorsim/montecarlo.hpp"
#include "aorsim/svg_plot.hpp"
#include "aorsim/units.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <utility>

namespace fs = std::filesystem;

namespace aorsim {

namespace {

constexpr double kPlotFloorDb = -60.0;

std::string hash_hex(std::uint64_t hash)
{
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

// File-name fragment for a sweep value: 12.5 -> "12p5", -30 -> "m30".
std::string sanitize_value(double v)
{
    std::string s = format_double(v);
    for (char &c : s) {
        if (c == '.')
            c = 'p';
        else if (c == '-')
            c = 'm';
    }
    return s;
}

double floored_db(double linear)
{
    if (!(linear > 0.0))
        return kPlotFloorDb;
    return std::max(kPlotFloorDb, 10.0 * std::log10(linear));
}

// Tracks every file the run creates so a failure can undo the partial run.
class OutputTracker
{
public:
    explicit OutputTracker(fs::path dir) : dir_(std::move(dir)) {}

    std::ofstream create(const std::string &name, std::vector<std::string> &emitted)
    {
        const fs::path path = dir_ / name;
        std::ofstream out(path);
        if (!out)
            throw std::runtime_error("cannot write '" + path.string() + "'");
        created_.push_back(path);
        emitted.push_back(path.string());
        return out;
    }

    fs::path reserve(const std::string &name, std::vector<std::string> &emitted)
    {
        const fs::path path = dir_ / name;
        created_.push_back(path);
        emitted.push_back(path.string());
        return path;
    }

    void remove_all() noexcept
    {
        for (const fs::path &p : created_) {
            std::error_code ec;
            fs::remove(p, ec);
        }
    }

private:
    fs::path dir_;
    std::vector<fs::path> created_;
};

struct PointData
{
    OmegaKey omega;
    std::string label;
    double sweep_value = 0.0;
    McPointResult result;
};

PointData simulate_sweep_point(const SimConfig &config, const ClusterProfile &profile,
                               const LinkGeometry &link, const AntennaPattern &tx,
                               std::uint64_t family, std::size_t index, double value)
{
    AntennaPattern rx;
    OmegaKey omega;
    if (config.rx.omni) {
        rx = make_omni(config.rx.gain_dbi);
        omega = {0.0, 0.0, 0.0};
    } else if (family == 0) {
        rx = make_pattern(config.rx.gain_dbi, config.rx.hpbw_theta_deg, config.rx.hpbw_phi_deg,
                          value);
        omega = {value, config.rx.hpbw_theta_deg, config.rx.hpbw_phi_deg};
    } else {
        rx = make_pattern(config.rx.gain_dbi, config.rx.hpbw_theta_deg, value,
                          config.rx.alpha_deg);
        omega = {config.rx.alpha_deg, config.rx.hpbw_theta_deg, value};
    }

    McPointConfig mc;
    mc.profile = profile;
    mc.geom = link;
    mc.tx = tx;
    mc.rx = rx;
    mc.generation = config.generation;
    mc.eps_theta = config.eps_theta;
    mc.eps_phi = config.eps_phi;
    mc.runs = config.runs;
    mc.seed = config.seed;
    mc.family = family;
    mc.point = index;
    mc.jobs = config.jobs;
    mc.accumulate_joint = true;

    PointData data;
    data.omega = omega;
    data.label = (family == 0 ? "alpha_" : "hpbw_") + sanitize_value(value);
    data.sweep_value = value;
    data.result = simulate_point(mc);
    return data;
}

SpreadReport report_from_point(const PointData &point)
{
    const RunAggregate t = aggregate_runs(point.result.sigma_theta_runs);
    const RunAggregate p = aggregate_runs(point.result.sigma_phi_runs);

    SpreadReport report;
    report.omega = point.omega;
    report.sigma_theta_deg = t.mean;
    report.sigma_phi_deg = p.mean;
    report.stderr_theta = t.stderr_;
    report.stderr_phi = p.stderr_;
    report.runs = point.result.sigma_theta_runs.size();
    report.per_run_sigma_theta = point.result.sigma_theta_runs;
    report.per_run_sigma_phi = point.result.sigma_phi_runs;
    return report;
}

std::vector<std::string> file_comments(const SimConfig &config, std::uint64_t hash,
                                       const std::string &kind, const std::string &point)
{
    std::vector<std::string> comments;
    comments.push_back("kind=" + kind);
    comments.push_back("config_hash=" + hash_hex(hash));
    comments.push_back("seed=" + std::to_string(config.seed) +
                       " runs=" + std::to_string(config.runs));
    if (!point.empty())
        comments.push_back("sweep_point=" + point);
    comments.push_back("statistic=run-averaged");
    return comments;
}

void write_point_csvs(const SimConfig &config, std::uint64_t hash, const PointData &point,
                      OutputTracker &tracker, std::vector<std::string> &emitted)
{
    const std::string tag = (point.label.rfind("alpha_", 0) == 0 ? "alpha=" : "hpbw_phi=") +
                            format_double(point.sweep_value) + " deg";
    {
        auto out = tracker.create("pas_joint_" + point.label + ".csv", emitted);
        write_csv(out, point.result.joint_pas,
                  file_comments(config, hash, "joint power angular spectrum (1/deg^2)", tag));
    }
    {
        auto out = tracker.create("aor_pdf_theta_" + point.label + ".csv", emitted);
        write_csv(out, point.result.aor_pdf_theta,
                  file_comments(config, hash, "reception zenith-angle density (1/deg)", tag));
    }
    {
        auto out = tracker.create("aor_pdf_phi_" + point.label + ".csv", emitted);
        write_csv(out, point.result.aor_pdf_phi,
                  file_comments(config, hash, "reception azimuth-angle density (1/deg)", tag));
    }
    {
        auto out = tracker.create("aoa_pdf_theta_" + point.label + ".csv", emitted);
        write_csv(out, point.result.aoa_pdf_theta,
                  file_comments(config, hash, "arrival zenith-angle density (1/deg)", tag));
    }
    {
        auto out = tracker.create("aoa_pdf_phi_" + point.label + ".csv", emitted);
        write_csv(out, point.result.aoa_pdf_phi,
                  file_comments(config, hash, "arrival azimuth-angle density (1/deg)", tag));
    }
}

void write_spreads_csv(const SimConfig &config, std::uint64_t hash,
                       const std::vector<SpreadReport> &reports, OutputTracker &tracker,
                       std::vector<std::string> &emitted)
{
    auto out = tracker.create("spreads.csv", emitted);
    for (const std::string &c :
         file_comments(config, hash, "angle spreads per operating point", ""))
        out << "# " << c << '\n';
    out << "alpha_deg,hpbw_theta_deg,hpbw_phi_deg,sigma_theta_deg,sigma_phi_deg,"
           "stderr_theta,stderr_phi,runs\n";
    for (const SpreadReport &r : reports) {
        out << format_double(r.omega.alpha_deg) << ',' << format_double(r.omega.hpbw_theta_deg)
            << ',' << format_double(r.omega.hpbw_phi_deg) << ','
            << format_double(r.sigma_theta_deg) << ',' << format_double(r.sigma_phi_deg) << ','
            << format_double(r.stderr_theta) << ',' << format_double(r.stderr_phi) << ','
            << r.runs << '\n';
    }
}

void emit_chart(const LineChart &chart, const fs::path &path, bool quiet)
{
    try {
        write_svg(path.string(), chart);
    } catch (const std::invalid_argument &e) {
        if (!quiet)
            std::cerr << "warning: skipped plot " << path.filename().string() << ": " << e.what()
                      << '\n';
    }
}

void emit_plots(const SimConfig &config, const std::vector<PointData> &alpha_points,
                const std::vector<PointData> &hpbw_points,
                const std::vector<SpreadReport> &alpha_reports,
                const std::vector<SpreadReport> &hpbw_reports, OutputTracker &tracker,
                std::vector<std::string> &emitted)
{
    if (!alpha_points.empty()) {
        LineChart power_phi{"Received power vs azimuth", "azimuth (deg)", "power (dB)"};
        LineChart power_theta{"Received power vs zenith angle", "zenith angle (deg)",
                              "power (dB)"};
        LineChart pdf_phi{"Reception azimuth density", "azimuth (deg)", "density (1/deg)"};
        LineChart pdf_theta{"Reception zenith density", "zenith angle (deg)", "density (1/deg)"};

        for (const PointData &p : alpha_points) {
            const std::string label = "alpha=" + format_double(p.sweep_value);
            Series sp{label, p.result.phi_centers, {}};
            for (double v : p.result.power_phi)
                sp.y.push_back(floored_db(v));
            power_phi.series.push_back(std::move(sp));

            Series st{label, p.result.theta_centers, {}};
            for (double v : p.result.power_theta)
                st.y.push_back(floored_db(v));
            power_theta.series.push_back(std::move(st));

            pdf_phi.series.push_back(
                {label, p.result.phi_centers, p.result.aor_pdf_phi.values});
            pdf_theta.series.push_back(
                {label, p.result.theta_centers, p.result.aor_pdf_theta.values});
        }
        emit_chart(power_phi, tracker.reserve("power_phi.svg", emitted), config.quiet);
        emit_chart(power_theta, tracker.reserve("power_theta.svg", emitted), config.quiet);
        emit_chart(pdf_phi, tracker.reserve("pdf_phi.svg", emitted), config.quiet);
        emit_chart(pdf_theta, tracker.reserve("pdf_theta.svg", emitted), config.quiet);
    }

    if (alpha_reports.size() > 1) {
        LineChart chart{"Angle spread vs boresight azimuth", "alpha (deg)", "spread (deg)"};
        Series st{"sigma_theta", {}, {}};
        Series sp{"sigma_phi", {}, {}};
        for (const SpreadReport &r : alpha_reports) {
            st.x.push_back(r.omega.alpha_deg);
            st.y.push_back(r.sigma_theta_deg);
            sp.x.push_back(r.omega.alpha_deg);
            sp.y.push_back(r.sigma_phi_deg);
        }
        chart.series = {st, sp};
        emit_chart(chart, tracker.reserve("sigma_vs_alpha.svg", emitted), config.quiet);
    }

    if (!hpbw_reports.empty()) {
        LineChart chart{"Angle spread vs azimuth beamwidth", "HPBW_phi (deg)", "spread (deg)"};
        Series st{"sigma_theta", {}, {}};
        Series sp{"sigma_phi", {}, {}};
        for (const SpreadReport &r : hpbw_reports) {
            st.x.push_back(r.omega.hpbw_phi_deg);
            st.y.push_back(r.sigma_theta_deg);
            sp.x.push_back(r.omega.hpbw_phi_deg);
            sp.y.push_back(r.sigma_phi_deg);
        }
        chart.series = {st, sp};
        emit_chart(chart, tracker.reserve("sigma_vs_hpbw.svg", emitted), config.quiet);
        (void)hpbw_points;
    }
}

void write_run_log(const SimConfig &config, std::uint64_t hash,
                   const std::vector<PointData> &alpha_points,
                   const std::vector<PointData> &hpbw_points, const std::string &scenario_note,
                   OutputTracker &tracker, std::vector<std::string> &emitted)
{
    auto out = tracker.create("run_log.txt", emitted);
    out << "config_hash=" << hash_hex(hash) << '\n';
    out << "seed=" << config.seed << '\n';
    out << "runs=" << config.runs << '\n';
    out << "jobs=" << config.jobs << '\n';
    out << "scenario=" << config.scenario_file << '\n';
    if (!scenario_note.empty())
        out << "scenario_note=" << scenario_note << '\n';

    auto log_points = [&out](const char *family, const std::vector<PointData> &points) {
        for (const PointData &p : points) {
            out << family << ' ' << format_double(p.sweep_value) << ": total "
                << format_double(p.result.elapsed_ms) << " ms, per-run";
            for (double ms : p.result.run_ms)
                out << ' ' << format_double(ms);
            out << " ms\n";
        }
    };
    log_points("alpha", alpha_points);
    log_points("hpbw_phi", hpbw_points);
}

} // namespace

ClusterProfile load_scenario(const SimConfig &config, std::string *note)
{
    ClusterProfile profile;
    if (config.scenario_format == ProfileFormat::cluster_table) {
        profile = load_cluster_profile(config.scenario_file);
    } else {
        profile = extract_clusters(load_pds_trace(config.scenario_file));
    }

    // Normalized scenarios carry dimensionless delays in the delay_ns
    // column; undo the reader's ns-to-seconds conversion before applying
    // the scenario delay spread.
    if (config.delay_scale == DelayScale::normalized)
        profile = scale_delays(profile, config.delay_spread_s * 1e9);

    // Zero excess delay has no scattering surface; that energy is carried by
    // the local-scattering block instead.
    std::size_t dropped = 0;
    ClusterProfile usable;
    for (const Cluster &c : profile.clusters) {
        if (c.delay_s > 0.0)
            usable.clusters.push_back(c);
        else
            ++dropped;
    }
    if (usable.clusters.empty())
        throw std::runtime_error("scenario '" + config.scenario_file +
                                 "' has no clusters with positive delay");
    if (note) {
        *note = dropped
                    ? "dropped " + std::to_string(dropped) +
                          " zero-delay cluster(s); remaining powers renormalized"
                    : "";
    }
    return normalize_powers(usable);
}

RunSummary run(const SimConfig &config)
{
    RunSummary summary;
    summary.hash = config_hash(config);

    ClusterProfile profile = load_scenario(config, &summary.scenario_note);
    const LinkGeometry link = make_link(config.distance_m);
    const AntennaPattern tx = build_pattern(config.tx);

    fs::create_directories(config.output_dir);
    OutputTracker tracker{fs::path(config.output_dir)};

    try {
        const std::vector<double> alphas =
            config.alpha_sweep.empty() ? std::vector<double>{config.rx.alpha_deg}
                                       : config.alpha_sweep;

        std::vector<PointData> alpha_points;
        alpha_points.reserve(alphas.size());
        for (std::size_t k = 0; k < alphas.size(); ++k) {
            PointData point = simulate_sweep_point(config, profile, link, tx, 0, k, alphas[k]);
            if (!config.quiet)
                std::cout << "alpha " << format_double(alphas[k]) << " deg: sigma_theta="
                          << format_double(aggregate_runs(point.result.sigma_theta_runs).mean)
                          << " sigma_phi="
                          << format_double(aggregate_runs(point.result.sigma_phi_runs).mean)
                          << " (" << format_double(point.result.elapsed_ms / 1000.0) << " s)\n";
            write_point_csvs(config, summary.hash, point, tracker, summary.emitted_files);
            summary.alpha_reports.push_back(report_from_point(point));
            alpha_points.push_back(std::move(point));
        }

        std::vector<PointData> hpbw_points;
        hpbw_points.reserve(config.hpbw_phi_sweep.size());
        for (std::size_t k = 0; k < config.hpbw_phi_sweep.size(); ++k) {
            const double h = config.hpbw_phi_sweep[k];
            PointData point = simulate_sweep_point(config, profile, link, tx, 1, k, h);
            if (!config.quiet)
                std::cout << "hpbw_phi " << format_double(h) << " deg: sigma_phi="
                          << format_double(aggregate_runs(point.result.sigma_phi_runs).mean)
                          << " (" << format_double(point.result.elapsed_ms / 1000.0) << " s)\n";
            write_point_csvs(config, summary.hash, point, tracker, summary.emitted_files);
            summary.hpbw_reports.push_back(report_from_point(point));
            hpbw_points.push_back(std::move(point));
        }

        std::vector<SpreadReport> all_reports = summary.alpha_reports;
        all_reports.insert(all_reports.end(), summary.hpbw_reports.begin(),
                           summary.hpbw_reports.end());
        write_spreads_csv(config, summary.hash, all_reports, tracker, summary.emitted_files);
        write_run_log(config, summary.hash, alpha_points, hpbw_points, summary.scenario_note,
                      tracker, summary.emitted_files);
        if (config.emit_plots)
            emit_plots(config, alpha_points, hpbw_points, summary.alpha_reports,
                       summary.hpbw_reports, tracker, summary.emitted_files);
    } catch (...) {
        tracker.remove_all();
        throw;
    }
    return summary;
}

} // namespace aorsim
