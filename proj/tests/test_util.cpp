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

#include "aorsim/csv.hpp"
#include "aorsim/rng.hpp"
#include "aorsim/units.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

using namespace aorsim;

TEST_CASE("angle wrapping maps into [-180, 180)")
{
    CHECK(wrap_deg(0.0) == 0.0);
    CHECK(wrap_deg(179.5) == 179.5);
    CHECK(wrap_deg(-180.0) == -180.0);
    CHECK(wrap_deg(180.0) == -180.0);
    CHECK(wrap_deg(190.0) == Catch::Approx(-170.0));
    CHECK(wrap_deg(-190.0) == Catch::Approx(170.0));
    CHECK(wrap_deg(360.0) == 0.0);
    CHECK(wrap_deg(-360.0) == 0.0);
    CHECK(wrap_deg(540.0) == -180.0);

    // In-range values pass through without any rounding.
    for (double x : {-179.99, -45.3125, 0.0, 0.1, 90.0, 179.9375})
        CHECK(wrap_deg(x) == x);
}

TEST_CASE("decibel conversions")
{
    CHECK(db(100.0) == Catch::Approx(20.0));
    CHECK(lin(0.0) == 1.0);
    CHECK(lin(10.0) == 10.0);
    CHECK(db(lin(15.0)) == Catch::Approx(15.0).epsilon(1e-12));
    const double x = 31.623;
    CHECK(lin(db(x)) == Catch::Approx(x).epsilon(1e-12));
    CHECK_THROWS_AS(db(0.0), std::domain_error);
    CHECK_THROWS_AS(db(-1.0), std::domain_error);
}

TEST_CASE("degree/radian conversions invert")
{
    CHECK(deg2rad(180.0) == Catch::Approx(kPi));
    CHECK(rad2deg(kPi / 2.0) == Catch::Approx(90.0));
    CHECK(rad2deg(deg2rad(37.25)) == Catch::Approx(37.25).epsilon(1e-14));
}

TEST_CASE("random streams are deterministic and well-scaled")
{
    RngStream a(42);
    RngStream b(42);
    for (int i = 0; i < 1000; ++i) {
        const double x = a.uniform01();
        CHECK(x == b.uniform01());
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }

    RngStream c(43);
    bool all_equal = true;
    RngStream a2(42);
    for (int i = 0; i < 100; ++i)
        all_equal = all_equal && (a2.uniform01() == c.uniform01());
    CHECK_FALSE(all_equal);
}

TEST_CASE("uniform range transform stays in bounds")
{
    RngStream rng(7);
    double mean = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double x = rng.uniform(-2.0, 3.0);
        REQUIRE(x >= -2.0);
        REQUIRE(x < 3.0);
        mean += x;
    }
    mean /= n;
    CHECK(mean == Catch::Approx(0.5).margin(0.02));
}

TEST_CASE("substreams differ across every key component")
{
    RngStream base = RngStream::substream(9, 0, 0, 0);
    RngStream fam = RngStream::substream(9, 1, 0, 0);
    RngStream pt = RngStream::substream(9, 0, 1, 0);
    RngStream run = RngStream::substream(9, 0, 0, 1);
    RngStream same = RngStream::substream(9, 0, 0, 0);

    const double x = base.uniform01();
    CHECK(x == same.uniform01());
    CHECK(x != fam.uniform01());
    CHECK(x != pt.uniform01());
    CHECK(x != run.uniform01());
}

TEST_CASE("mixing function spreads nearby keys")
{
    CHECK(mix64(1) != mix64(2));
    CHECK(mix64(0) != 0);
    CHECK(mix64(7) == mix64(7));
}

TEST_CASE("shortest-round-trip double formatting")
{
    for (double v : {0.0, 1.0, -1.5, 0.1, 28.5152, 1e-9, 6.02e23, -13.9}) {
        double parsed = 0.0;
        REQUIRE(parse_double(format_double(v), parsed));
        CHECK(parsed == v);
    }
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-13.9) == "-13.9");
}

TEST_CASE("numeric field parsing is strict")
{
    double v = 0.0;
    CHECK(parse_double(" 12.5 ", v));
    CHECK(v == 12.5);
    CHECK(parse_double("+3", v));
    CHECK(v == 3.0);
    CHECK(parse_double("-1e3", v));
    CHECK(v == -1000.0);
    CHECK_FALSE(parse_double("", v));
    CHECK_FALSE(parse_double("abc", v));
    CHECK_FALSE(parse_double("1.5x", v));
    CHECK_FALSE(parse_double("1.5 2.5", v));
}

TEST_CASE("csv field splitting and trimming")
{
    const auto fields = split_fields("a, b ,c,,d");
    REQUIRE(fields.size() == 5);
    CHECK(trim(fields[0]) == "a");
    CHECK(trim(fields[1]) == "b");
    CHECK(trim(fields[3]).empty());
    CHECK(trim("\t x \r\n") == "x");
}
