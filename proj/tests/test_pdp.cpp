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

#include "aorsim/errors.hpp"
#include "aorsim/pdp.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <variant>
#include <vector>

using namespace aorsim;

namespace {

ClusterProfile profile_from(const std::string &text)
{
    std::istringstream in(text);
    return read_cluster_profile(in);
}

PdsTrace trace_from(const std::string &text)
{
    std::istringstream in(text);
    return read_pds_trace(in);
}

PdsTrace make_trace(const std::vector<double> &powers)
{
    PdsTrace t;
    for (std::size_t i = 0; i < powers.size(); ++i)
        t.samples.push_back({static_cast<double>(i) * 1e-9, powers[i]});
    return t;
}

} // namespace

TEST_CASE("cluster table parsing converts units")
{
    const auto p = profile_from("delay_ns,power_db\n0,0\n100,-10\n");
    REQUIRE(p.clusters.size() == 2);
    CHECK(p.clusters[0].delay_s == 0.0);
    CHECK(p.clusters[0].power == 1.0);
    CHECK(p.clusters[1].delay_s == Catch::Approx(1e-7).epsilon(1e-15));
    CHECK(p.clusters[1].power == Catch::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("single-row profile is valid")
{
    const auto p = profile_from("delay_ns,power_db\n0,0\n");
    REQUIRE(p.clusters.size() == 1);
    CHECK(p.clusters[0].power == 1.0);
}

TEST_CASE("comments and blank lines are skipped")
{
    const auto p = profile_from("# header comment\n\ndelay_ns,power_db\n# row comment\n5,-3\n");
    REQUIRE(p.clusters.size() == 1);
    CHECK(p.clusters[0].delay_s == Catch::Approx(5e-9));
}

TEST_CASE("duplicate delays are rejected with the line number")
{
    try {
        profile_from("delay_ns,power_db\n50,-3\n50,-6\n");
        FAIL("expected an ordering error");
    } catch (const std::invalid_argument &e) {
        CHECK(std::string(e.what()).find("increasing") != std::string::npos);
    }
}

TEST_CASE("malformed content reports 1-based line numbers")
{
    try {
        profile_from("delay_ns,power_db\n1,0\nnot_a_number,3\n");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 3);
    }

    CHECK_THROWS_AS(profile_from("delay_ns\n1,0\n"), ParseError);
    CHECK_THROWS_AS(profile_from("delay_ns,power_db\n1\n"), ParseError);
    CHECK_THROWS_AS(profile_from("delay_ns,power_db\n"), ParseError);
    CHECK_THROWS_AS(profile_from(""), ParseError);
}

TEST_CASE("missing file raises a useful error")
{
    CHECK_THROWS_AS(load_cluster_profile("/nonexistent/x.csv"), std::runtime_error);
}

TEST_CASE("profile round trip preserves exact-dB powers bit for bit")
{
    const std::string text = "delay_ns,power_db\n0,0\n1,-10\n10,-3\n50,-13.9\n100,20\n";
    const ClusterProfile first = profile_from(text);

    std::ostringstream emitted;
    write_cluster_profile(emitted, first);
    const ClusterProfile second = profile_from(emitted.str());

    REQUIRE(second.clusters.size() == first.clusters.size());
    for (std::size_t i = 0; i < first.clusters.size(); ++i) {
        CHECK(second.clusters[i].power == first.clusters[i].power);
        // Integer-nanosecond delays survive the unit scaling exactly.
        CHECK(second.clusters[i].delay_s == first.clusters[i].delay_s);
    }

    std::ostringstream emitted_again;
    write_cluster_profile(emitted_again, second);
    CHECK(emitted_again.str() == emitted.str());
}

TEST_CASE("validation rejects broken profiles")
{
    ClusterProfile p;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);

    p.clusters = {{-1e-9, 1.0}};
    CHECK_THROWS_AS(validate(p), std::invalid_argument);

    p.clusters = {{0.0, 0.0}};
    CHECK_THROWS_AS(validate(p), std::invalid_argument);

    p.clusters = {{0.0, 1.0}, {0.0, 1.0}};
    CHECK_THROWS_AS(validate(p), std::invalid_argument);

    p.clusters = {{0.0, 1.0}, {1e-9, 0.5}};
    CHECK_NOTHROW(validate(p));
}

TEST_CASE("interior maxima become clusters with excess delays")
{
    // powers 1,3,2,5,1 -> maxima at indices 1 and 3
    const auto t = make_trace({1.0, 3.0, 2.0, 5.0, 1.0});
    const auto p = extract_clusters(t);
    REQUIRE(p.clusters.size() == 2);
    CHECK(p.clusters[0].delay_s == 0.0);
    CHECK(p.clusters[0].power == 3.0);
    CHECK(p.clusters[1].delay_s == Catch::Approx(2e-9));
    CHECK(p.clusters[1].power == 5.0);
}

TEST_CASE("boundary samples count as maxima")
{
    const auto p = extract_clusters(make_trace({5.0, 1.0, 1.0}));
    REQUIRE(p.clusters.size() == 1);
    CHECK(p.clusters[0].delay_s == 0.0);
    CHECK(p.clusters[0].power == 5.0);

    const auto q = extract_clusters(make_trace({1.0, 2.0, 5.0}));
    REQUIRE(q.clusters.size() == 1);
    CHECK(q.clusters[0].power == 5.0);
}

TEST_CASE("plateaus contribute one cluster at their first sample")
{
    const auto p = extract_clusters(make_trace({1.0, 2.0, 2.0, 1.0}));
    REQUIRE(p.clusters.size() == 1);
    CHECK(p.clusters[0].power == 2.0);
    // Plateau starts at sample 1; excess delay is relative to itself.
    CHECK(p.clusters[0].delay_s == 0.0);
}

TEST_CASE("constant traces are degenerate")
{
    CHECK_THROWS_AS(extract_clusters(make_trace({3.0, 3.0, 3.0})), std::runtime_error);
    CHECK_THROWS_AS(extract_clusters(make_trace({3.0})), std::runtime_error);
}

TEST_CASE("extraction matches a brute-force extremum scan on random traces")
{
    std::mt19937_64 gen(123);
    std::uniform_real_distribution<double> dist(0.1, 10.0);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> powers;
        const int n = 2 + static_cast<int>(gen() % 40);
        for (int i = 0; i < n; ++i)
            powers.push_back(dist(gen));

        const auto trace = make_trace(powers);
        // Independent scan: strictly above both (plateau-aware) neighbours.
        std::vector<std::size_t> expected;
        for (std::size_t i = 0; i < powers.size(); ++i) {
            if (i > 0 && powers[i - 1] >= powers[i])
                continue;
            std::size_t j = i;
            while (j + 1 < powers.size() && powers[j + 1] == powers[i])
                ++j;
            if (j + 1 == powers.size() || powers[j + 1] < powers[i])
                expected.push_back(i);
        }
        if (expected.empty()) {
            CHECK_THROWS_AS(extract_clusters(trace), std::runtime_error);
            continue;
        }

        const auto p = extract_clusters(trace);
        REQUIRE(p.clusters.size() == expected.size());
        CHECK(p.clusters.size() <= (powers.size() + 1) / 2);
        for (std::size_t k = 0; k < expected.size(); ++k) {
            CHECK(p.clusters[k].power == powers[expected[k]]);
            const double excess =
                trace.samples[expected[k]].delay_s - trace.samples[expected[0]].delay_s;
            CHECK(p.clusters[k].delay_s == Catch::Approx(excess).margin(1e-18));
        }
    }
}

TEST_CASE("delay scaling multiplies delays only")
{
    ClusterProfile p;
    p.clusters = {{0.0, 0.4}, {0.5, 0.6}};
    const auto scaled = scale_delays(p, 2e-7);
    CHECK(scaled.clusters[0].delay_s == 0.0);
    CHECK(scaled.clusters[1].delay_s == Catch::Approx(1e-7));
    CHECK(scaled.clusters[1].power == 0.6);
    CHECK_THROWS_AS(scale_delays(p, 0.0), std::domain_error);
    CHECK_THROWS_AS(scale_delays(p, -1.0), std::domain_error);
}

TEST_CASE("power normalization reaches unit sum")
{
    ClusterProfile p;
    p.clusters = {{0.0, 2.0}, {1e-9, 6.0}};
    const auto n = normalize_powers(p);
    CHECK(total_power(n) == Catch::Approx(1.0).epsilon(1e-15));
    CHECK(n.clusters[0].power == Catch::Approx(0.25));
}

TEST_CASE("trace parsing requires increasing delays")
{
    CHECK_THROWS_AS(trace_from("delay_ns,power_db\n5,0\n5,1\n"), std::invalid_argument);
    const auto t = trace_from("delay_ns,power_db\n0,0\n5,-1\n");
    CHECK(t.samples.size() == 2);
}

TEST_CASE("format dispatch returns the matching alternative")
{
    const std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
    const std::string path = dir + "/aorsim_pdp_test.csv";
    {
        std::ofstream out(path);
        out << "delay_ns,power_db\n0,0\n10,-5\n";
    }
    auto v1 = parse_profile(path, ProfileFormat::cluster_table);
    CHECK(std::holds_alternative<ClusterProfile>(v1));
    auto v2 = parse_profile(path, ProfileFormat::pds_trace);
    CHECK(std::holds_alternative<PdsTrace>(v2));
    std::remove(path.c_str());
}
