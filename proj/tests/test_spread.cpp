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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

using namespace aorsim;

namespace {

MarginalPdf empty_marginal(double lo, double hi, double eps)
{
    MarginalPdf pdf;
    pdf.lo_deg = lo;
    pdf.hi_deg = hi;
    pdf.eps = eps;
    const std::size_t n = static_cast<std::size_t>(std::llround((hi - lo) / (2.0 * eps)));
    for (std::size_t k = 0; k < n; ++k)
        pdf.centers.push_back(lo + (2.0 * static_cast<double>(k) + 1.0) * eps);
    pdf.values.assign(n, 0.0);
    pdf.normalizer = 1.0 / (2.0 * eps);
    return pdf;
}

std::size_t bin_of(const MarginalPdf &pdf, double angle)
{
    const std::size_t k =
        static_cast<std::size_t>(std::floor((angle - pdf.lo_deg) / (2.0 * pdf.eps)));
    return std::min(k, pdf.centers.size() - 1);
}

void deposit(MarginalPdf &pdf, double angle, double mass)
{
    pdf.values[bin_of(pdf, angle)] += mass / (2.0 * pdf.eps);
}

} // namespace

TEST_CASE("a single-bin density has zero spread")
{
    MarginalPdf pdf = empty_marginal(0.0, 90.0, 0.5);
    deposit(pdf, 45.0, 1.0);
    CHECK(std_dev(pdf) <= 2.0 * pdf.eps);
}

TEST_CASE("the uniform azimuth density has the analytic spread")
{
    MarginalPdf pdf = empty_marginal(-180.0, 180.0, 0.5);
    for (double &v : pdf.values)
        v = 1.0 / 360.0;
    CHECK(std_dev(pdf) == Catch::Approx(360.0 / std::sqrt(12.0)).margin(0.5));
    CHECK(std_dev(pdf) == Catch::Approx(103.92).margin(0.5));
}

TEST_CASE("a symmetric two-point density spreads to the offset")
{
    MarginalPdf pdf = empty_marginal(-180.0, 180.0, 0.5);
    deposit(pdf, 45.0, 0.5);
    deposit(pdf, -45.0, 0.5);
    CHECK(std_dev(pdf) == Catch::Approx(45.0).margin(2.0 * pdf.eps));
}

TEST_CASE("unnormalized densities are rejected")
{
    MarginalPdf pdf = empty_marginal(0.0, 90.0, 0.5);
    deposit(pdf, 30.0, 1.1);
    CHECK_THROWS_AS(std_dev(pdf), std::runtime_error);
    CHECK_THROWS_AS(third_central_moment(pdf), std::runtime_error);
}

TEST_CASE("spread ignores the order bins are presented in")
{
    MarginalPdf pdf = empty_marginal(-180.0, 180.0, 1.0);
    deposit(pdf, -120.0, 0.3);
    deposit(pdf, -10.0, 0.25);
    deposit(pdf, 45.0, 0.25);
    deposit(pdf, 170.0, 0.2);
    const double reference = std_dev(pdf);

    std::vector<std::size_t> order(pdf.centers.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937 shuffler(99);
    std::shuffle(order.begin(), order.end(), shuffler);

    MarginalPdf shuffled = pdf;
    for (std::size_t k = 0; k < order.size(); ++k) {
        shuffled.centers[k] = pdf.centers[order[k]];
        shuffled.values[k] = pdf.values[order[k]];
    }
    CHECK(std_dev(shuffled) == Catch::Approx(reference).margin(1e-9));
}

TEST_CASE("third central moment flags asymmetry with the right sign")
{
    MarginalPdf symmetric = empty_marginal(-180.0, 180.0, 0.5);
    deposit(symmetric, 60.25, 0.5);
    deposit(symmetric, -60.25, 0.5);
    CHECK(std::abs(third_central_moment(symmetric)) < 1e-9);

    MarginalPdf right_heavy_tail = empty_marginal(-180.0, 180.0, 0.5);
    deposit(right_heavy_tail, -10.0, 0.8);
    deposit(right_heavy_tail, 50.0, 0.2);
    CHECK(third_central_moment(right_heavy_tail) > 0.0);

    MarginalPdf left_heavy_tail = empty_marginal(-180.0, 180.0, 0.5);
    deposit(left_heavy_tail, 10.0, 0.8);
    deposit(left_heavy_tail, -50.0, 0.2);
    CHECK(third_central_moment(left_heavy_tail) < 0.0);
}

TEST_CASE("run aggregation computes mean and standard error")
{
    const RunAggregate constant = aggregate_runs({10.0, 10.0, 10.0});
    CHECK(constant.mean == 10.0);
    CHECK(constant.stderr_ == 0.0);

    const RunAggregate pair = aggregate_runs({8.0, 12.0});
    CHECK(pair.mean == Catch::Approx(10.0));
    CHECK(pair.stderr_ == Catch::Approx(2.0));

    const RunAggregate single = aggregate_runs({7.3});
    CHECK(single.mean == 7.3);
    CHECK(single.stderr_ == 0.0);

    CHECK_THROWS_AS(aggregate_runs({}), std::invalid_argument);
}

TEST_CASE("run aggregation is order independent")
{
    const std::vector<double> runs{4.0, 9.5, 2.25, 7.75, 6.5};
    std::vector<double> reversed(runs.rbegin(), runs.rend());
    const RunAggregate a = aggregate_runs(runs);
    const RunAggregate b = aggregate_runs(reversed);
    CHECK(a.mean == Catch::Approx(b.mean).margin(1e-12));
    CHECK(a.stderr_ == Catch::Approx(b.stderr_).margin(1e-12));
}

TEST_CASE("a sweep yields one aggregated report per operating point")
{
    const std::vector<OmegaKey> points{
        {-30.0, 30.0, 28.8},
        {0.0, 30.0, 28.8},
        {60.0, 30.0, 28.8},
    };

    std::vector<std::size_t> seen;
    const auto evaluate = [&seen](std::size_t index, const OmegaKey &key) {
        seen.push_back(index);
        const double base = key.alpha_deg;
        return std::make_pair(std::vector<double>{base + 8.0, base + 12.0},
                              std::vector<double>{base + 20.0, base + 20.0});
    };

    const std::vector<SpreadReport> reports = sweep(points, evaluate);
    REQUIRE(reports.size() == 3);
    REQUIRE(seen == std::vector<std::size_t>{0, 1, 2});

    for (std::size_t k = 0; k < reports.size(); ++k) {
        const SpreadReport &r = reports[k];
        CHECK(r.omega.alpha_deg == points[k].alpha_deg);
        CHECK(r.omega.hpbw_theta_deg == 30.0);
        CHECK(r.omega.hpbw_phi_deg == 28.8);
        CHECK(r.runs == 2);
        CHECK(r.sigma_theta_deg == Catch::Approx(points[k].alpha_deg + 10.0));
        CHECK(r.stderr_theta == Catch::Approx(2.0));
        CHECK(r.sigma_phi_deg == Catch::Approx(points[k].alpha_deg + 20.0));
        CHECK(r.stderr_phi == 0.0);
        CHECK(r.per_run_sigma_theta.size() == 2);
        CHECK(r.per_run_sigma_phi.size() == 2);
    }
}

TEST_CASE("an empty sweep is rejected")
{
    const auto evaluate = [](std::size_t, const OmegaKey &) {
        return std::make_pair(std::vector<double>{}, std::vector<double>{});
    };
    CHECK_THROWS_AS(sweep({}, evaluate), std::invalid_argument);
}
