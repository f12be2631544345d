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
#include "aorsim/errors.hpp"
#include "aorsim/harness.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

int main(int argc, char **argv)
{
    CLI::App app{"3D geometric channel simulation of reception-angle statistics"};

    std::string config_path;
    std::uint64_t seed = 0;
    std::size_t runs = 0;
    std::string out_dir;
    unsigned jobs = 0;
    bool no_plots = false;
    bool quiet = false;

    app.add_option("--config", config_path, "simulation config file (INI)")->required();
    auto *seed_opt = app.add_option("--seed", seed, "override the base random seed");
    auto *runs_opt = app.add_option("--runs", runs, "override the Monte Carlo run count");
    auto *out_opt = app.add_option("--out", out_dir, "override the output directory");
    auto *jobs_opt = app.add_option("--jobs", jobs, "worker threads for Monte Carlo runs");
    app.add_flag("--no-plots", no_plots, "skip SVG chart output");
    app.add_flag("--quiet", quiet, "suppress progress output");

    CLI11_PARSE(app, argc, argv);

    try {
        aorsim::SimConfig config = aorsim::load_sim_config(config_path);
        if (seed_opt->count())
            config.seed = seed;
        if (runs_opt->count()) {
            if (runs < 1)
                throw aorsim::ConfigError("--runs must be at least 1");
            config.runs = runs;
        }
        if (out_opt->count())
            config.output_dir = out_dir;
        if (jobs_opt->count()) {
            if (jobs < 1)
                throw aorsim::ConfigError("--jobs must be at least 1");
            config.jobs = jobs;
        }
        if (no_plots)
            config.emit_plots = false;
        if (quiet)
            config.quiet = true;

        const aorsim::RunSummary summary = aorsim::run(config);
        if (!config.quiet)
            std::cout << "wrote " << summary.emitted_files.size() << " files to "
                      << config.output_dir << '\n';
        return 0;
    } catch (const aorsim::ConfigError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
