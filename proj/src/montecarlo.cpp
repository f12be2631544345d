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

#include "aorsim/montecarlo.hpp"

#include "aorsim/rng.hpp"
#include "aorsim/spread.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <utility>

namespace aorsim {

namespace {

// Everything one run contributes to the point aggregate.
struct RunOutput
{
    double sigma_theta = 0.0;
    double sigma_phi = 0.0;
    double aoa_sigma_theta = 0.0;
    double aoa_sigma_phi = 0.0;
    double skew3_phi = 0.0;
    double total_power = 0.0;
    double elapsed_ms = 0.0;
    MarginalPdf aor_theta;
    MarginalPdf aor_phi;
    MarginalPdf aoa_theta;
    MarginalPdf aoa_phi;
    AngularSpectrumGrid joint;
};

RunOutput execute_run(const McPointConfig &cfg, std::size_t run)
{
    const auto start = std::chrono::steady_clock::now();
    RngStream rng = RngStream::substream(cfg.seed, cfg.family, cfg.point, run);
    const PathEnsemble ensemble =
        generate_ensemble(cfg.profile, cfg.geom, cfg.tx, cfg.generation, rng);
    const WeightedEnsemble weighted = apply_rx_pattern(ensemble, cfg.rx);
    const WeightedEnsemble baseline = as_weighted(ensemble);

    RunOutput out;
    std::tie(out.aor_theta, out.aor_phi) = estimate_marginals(weighted, cfg.eps_theta, cfg.eps_phi);
    std::tie(out.aoa_theta, out.aoa_phi) = estimate_marginals(baseline, cfg.eps_theta, cfg.eps_phi);
    out.sigma_theta = std_dev(out.aor_theta);
    out.sigma_phi = std_dev(out.aor_phi);
    out.aoa_sigma_theta = std_dev(out.aoa_theta);
    out.aoa_sigma_phi = std_dev(out.aoa_phi);
    out.skew3_phi = third_central_moment(out.aor_phi);
    out.total_power = weighted.total;
    if (cfg.accumulate_joint)
        out.joint = estimate_pas(weighted, cfg.eps_theta, cfg.eps_phi);
    out.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return out;
}

struct Accumulator
{
    McPointResult result;
    std::size_t merged = 0;

    void add(const RunOutput &out, const McPointConfig &cfg)
    {
        const std::size_t r = merged;
        result.sigma_theta_runs[r] = out.sigma_theta;
        result.sigma_phi_runs[r] = out.sigma_phi;
        result.aoa_sigma_theta_runs[r] = out.aoa_sigma_theta;
        result.aoa_sigma_phi_runs[r] = out.aoa_sigma_phi;
        result.skew3_phi_runs[r] = out.skew3_phi;
        result.run_ms[r] = out.elapsed_ms;
        result.mean_total_power += out.total_power;

        if (r == 0) {
            result.aor_pdf_theta = out.aor_theta;
            result.aor_pdf_phi = out.aor_phi;
            result.aoa_pdf_theta = out.aoa_theta;
            result.aoa_pdf_phi = out.aoa_phi;
            result.theta_centers = out.aor_theta.centers;
            result.phi_centers = out.aor_phi.centers;
            result.power_theta.assign(out.aor_theta.values.size(), 0.0);
            result.power_phi.assign(out.aor_phi.values.size(), 0.0);
            if (cfg.accumulate_joint)
                result.joint_pas = out.joint;
            for (double &v : result.aor_pdf_theta.values)
                v = 0.0;
            for (double &v : result.aor_pdf_phi.values)
                v = 0.0;
            for (double &v : result.aoa_pdf_theta.values)
                v = 0.0;
            for (double &v : result.aoa_pdf_phi.values)
                v = 0.0;
            if (cfg.accumulate_joint) {
                for (double &v : result.joint_pas.values)
                    v = 0.0;
                result.joint_pas.total_power = 0.0;
            }
        }

        for (std::size_t i = 0; i < out.aor_theta.values.size(); ++i) {
            result.aor_pdf_theta.values[i] += out.aor_theta.values[i];
            result.aoa_pdf_theta.values[i] += out.aoa_theta.values[i];
            // Power per degree is density times received power.
            result.power_theta[i] += out.aor_theta.values[i] * out.total_power;
        }
        for (std::size_t i = 0; i < out.aor_phi.values.size(); ++i) {
            result.aor_pdf_phi.values[i] += out.aor_phi.values[i];
            result.aoa_pdf_phi.values[i] += out.aoa_phi.values[i];
            result.power_phi[i] += out.aor_phi.values[i] * out.total_power;
        }
        if (cfg.accumulate_joint) {
            for (std::size_t i = 0; i < out.joint.values.size(); ++i)
                result.joint_pas.values[i] += out.joint.values[i];
            result.joint_pas.total_power += out.joint.total_power;
        }
        ++merged;
    }

    void finish(const McPointConfig &cfg)
    {
        const double inv = 1.0 / static_cast<double>(cfg.runs);
        for (double &v : result.aor_pdf_theta.values)
            v *= inv;
        for (double &v : result.aor_pdf_phi.values)
            v *= inv;
        for (double &v : result.aoa_pdf_theta.values)
            v *= inv;
        for (double &v : result.aoa_pdf_phi.values)
            v *= inv;
        for (double &v : result.power_theta)
            v *= inv;
        for (double &v : result.power_phi)
            v *= inv;
        if (cfg.accumulate_joint) {
            for (double &v : result.joint_pas.values)
                v *= inv;
            result.joint_pas.total_power *= inv;
        }
        result.mean_total_power *= inv;
    }
};

} // namespace

McPointResult simulate_point(const McPointConfig &cfg)
{
    if (cfg.runs < 1)
        throw std::invalid_argument("simulate_point requires at least one run");

    const auto start = std::chrono::steady_clock::now();

    Accumulator acc;
    acc.result.sigma_theta_runs.resize(cfg.runs);
    acc.result.sigma_phi_runs.resize(cfg.runs);
    acc.result.aoa_sigma_theta_runs.resize(cfg.runs);
    acc.result.aoa_sigma_phi_runs.resize(cfg.runs);
    acc.result.skew3_phi_runs.resize(cfg.runs);
    acc.result.run_ms.resize(cfg.runs);

    const unsigned jobs =
        std::min<unsigned>(std::max(1u, cfg.jobs), static_cast<unsigned>(cfg.runs));

    if (jobs == 1) {
        for (std::size_t r = 0; r < cfg.runs; ++r)
            acc.add(execute_run(cfg, r), cfg);
    } else {
        // Runs are claimed by an atomic counter; completed outputs park in
        // slots and are folded in strictly by run index, so the aggregate
        // does not depend on completion order or worker count.
        std::vector<std::optional<RunOutput>> slots(cfg.runs);
        std::atomic<std::size_t> next{0};
        std::mutex merge_mutex;
        std::exception_ptr failure;

        auto worker = [&]() {
            for (;;) {
                const std::size_t r = next.fetch_add(1);
                if (r >= cfg.runs)
                    return;
                try {
                    RunOutput out = execute_run(cfg, r);
                    std::lock_guard<std::mutex> lock(merge_mutex);
                    slots[r] = std::move(out);
                    while (acc.merged < cfg.runs && slots[acc.merged]) {
                        acc.add(*slots[acc.merged], cfg);
                        slots[acc.merged - 1].reset();
                    }
                } catch (...) {
                    std::lock_guard<std::mutex> lock(merge_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    next.store(cfg.runs);
                    return;
                }
            }
        };

        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (std::thread &t : pool)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
        if (acc.merged != cfg.runs)
            throw std::runtime_error("not all runs completed");
    }

    acc.finish(cfg);
    acc.result.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return acc.result;
}

} // namespace aorsim
