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
#include "aorsim/estimator.hpp"
#include "aorsim/geometry.hpp"
#include "aorsim/paths.hpp"
#include "aorsim/pdp.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace aorsim {

// One sweep point of the Monte Carlo experiment. Runs are seeded by
// (seed, family, point, run) substreams, so every run is reproducible in
// isolation and results do not depend on scheduling.
struct McPointConfig
{
    ClusterProfile profile; // normalized, strictly positive delays
    LinkGeometry geom;
    AntennaPattern tx;
    AntennaPattern rx;
    GenerationConfig generation;
    double eps_theta = 0.5;
    double eps_phi = 0.5;
    std::size_t runs = 1;
    std::uint64_t seed = 0;
    std::uint64_t family = 0; // sweep family (0 = boresight, 1 = beamwidth)
    std::uint64_t point = 0;  // index within the sweep
    unsigned jobs = 1;
    bool accumulate_joint = false;
};

// Per-run statistics plus run-averaged spectra for one sweep point. The
// reception-side (weighted) statistics carry no prefix; arrival-side
// baselines (no receive antenna) are prefixed aoa_.
struct McPointResult
{
    std::vector<double> sigma_theta_runs;
    std::vector<double> sigma_phi_runs;
    std::vector<double> aoa_sigma_theta_runs;
    std::vector<double> aoa_sigma_phi_runs;
    std::vector<double> skew3_phi_runs; // third central moment of the azimuth density
    std::vector<double> run_ms;         // wall time of each run

    MarginalPdf aor_pdf_theta; // run-averaged densities
    MarginalPdf aor_pdf_phi;
    MarginalPdf aoa_pdf_theta;
    MarginalPdf aoa_pdf_phi;

    AngularSpectrumGrid joint_pas;   // run-averaged; empty unless requested
    std::vector<double> power_theta; // run-averaged weighted power per degree
    std::vector<double> power_phi;
    std::vector<double> theta_centers;
    std::vector<double> phi_centers;

    double mean_total_power = 0.0;
    double elapsed_ms = 0.0;
};

// Executes cfg.runs independent channel realizations (dispatching up to
// cfg.jobs worker threads) and aggregates them in run-index order, so the
// result is identical for any jobs value. Errors from any run propagate.
McPointResult simulate_point(const McPointConfig &cfg);

} // namespace aorsim
