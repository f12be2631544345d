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

#include "aorsim/spread.hpp"

#include <cmath>
#include <stdexcept>

namespace aorsim {

namespace {

void check_normalized(const MarginalPdf &pdf)
{
    if (pdf.values.empty())
        throw std::runtime_error("density has no bins");
    if (std::abs(integral(pdf) - 1.0) > 1e-3)
        throw std::runtime_error("density is not normalized");
}

double raw_moment(const MarginalPdf &pdf, double center, int order)
{
    const double dx = 2.0 * pdf.eps;
    double sum = 0.0;
    for (std::size_t i = 0; i < pdf.centers.size(); ++i) {
        const double x = pdf.centers[i] - center;
        double term = pdf.values[i] * dx;
        for (int k = 0; k < order; ++k)
            term *= x;
        sum += term;
    }
    return sum;
}

} // namespace

double std_dev(const MarginalPdf &pdf)
{
    check_normalized(pdf);
    const double m1 = raw_moment(pdf, 0.0, 1);
    const double m2 = raw_moment(pdf, 0.0, 2);
    const double var = m2 - m1 * m1;
    return var > 0.0 ? std::sqrt(var) : 0.0;
}

double third_central_moment(const MarginalPdf &pdf)
{
    check_normalized(pdf);
    const double m1 = raw_moment(pdf, 0.0, 1);
    return raw_moment(pdf, m1, 3);
}

RunAggregate aggregate_runs(const std::vector<double> &per_run)
{
    if (per_run.empty())
        throw std::invalid_argument("no runs to aggregate");

    RunAggregate agg;
    for (double v : per_run)
        agg.mean += v;
    agg.mean /= static_cast<double>(per_run.size());

    if (per_run.size() > 1) {
        double ss = 0.0;
        for (double v : per_run)
            ss += (v - agg.mean) * (v - agg.mean);
        const double sample_var = ss / static_cast<double>(per_run.size() - 1);
        agg.stderr_ = std::sqrt(sample_var / static_cast<double>(per_run.size()));
    }
    return agg;
}

std::vector<SpreadReport> sweep(const std::vector<OmegaKey> &points, const PointEvaluator &evaluate)
{
    if (points.empty())
        throw std::invalid_argument("sweep has no points");

    std::vector<SpreadReport> reports;
    reports.reserve(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
        auto [theta_runs, phi_runs] = evaluate(k, points[k]);
        const RunAggregate t = aggregate_runs(theta_runs);
        const RunAggregate p = aggregate_runs(phi_runs);

        SpreadReport report;
        report.omega = points[k];
        report.sigma_theta_deg = t.mean;
        report.sigma_phi_deg = p.mean;
        report.stderr_theta = t.stderr_;
        report.stderr_phi = p.stderr_;
        report.runs = theta_runs.size();
        report.per_run_sigma_theta = std::move(theta_runs);
        report.per_run_sigma_phi = std::move(phi_runs);
        reports.push_back(std::move(report));
    }
    return reports;
}

} // namespace aorsim
