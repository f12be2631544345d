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

#include "aorsim/estimator.hpp"

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace aorsim {

// Receive-side operating point: boresight azimuth plus the two beamwidths.
struct OmegaKey
{
    double alpha_deg = 0.0;
    double hpbw_theta_deg = 0.0;
    double hpbw_phi_deg = 0.0;
};

// Angle-spread statistics of one operating point across Monte Carlo runs.
struct SpreadReport
{
    OmegaKey omega;
    double sigma_theta_deg = 0.0;
    double sigma_phi_deg = 0.0;
    double stderr_theta = 0.0;
    double stderr_phi = 0.0;
    std::size_t runs = 0;
    std::vector<double> per_run_sigma_theta;
    std::vector<double> per_run_sigma_phi;
};

// Standard deviation of a binned density via rectangle-rule moments over
// the bin centers. The density must integrate to 1 within 1e-3, else
// std::runtime_error.
double std_dev(const MarginalPdf &pdf);

// Third central moment of a binned density, same quadrature and
// normalization rule as std_dev. Sign diagnoses distribution asymmetry.
double third_central_moment(const MarginalPdf &pdf);

struct RunAggregate
{
    double mean = 0.0;
    double stderr_ = 0.0; // sample standard deviation / sqrt(n); 0 for a single run
};

// Throws std::invalid_argument on an empty list.
RunAggregate aggregate_runs(const std::vector<double> &per_run);

// Per-run spread pairs for one operating point: first = zenith sigmas,
// second = azimuth sigmas, one entry per run.
using PointEvaluator = std::function<std::pair<std::vector<double>, std::vector<double>>(
    std::size_t, const OmegaKey &)>;

// Evaluates every operating point and aggregates the per-run spreads into
// reports, in input order. Throws std::invalid_argument on an empty sweep.
std::vector<SpreadReport> sweep(const std::vector<OmegaKey> &points,
                                const PointEvaluator &evaluate);

} // namespace aorsim
