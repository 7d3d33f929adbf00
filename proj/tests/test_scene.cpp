// SPDX-License-Identifier: Apache-2.0
//
// masr - movable antenna symbiotic radio link simulator
// Copyright (C) 2026 The masr authors
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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>

#include "masr/scene.hpp"
#include "oracle.hpp"

using namespace masr;
using Catch::Approx;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("dbm_to_watt")
{
    CHECK_THAT(dbm_to_watt(30.0), WithinRel(1.0, 1e-15));
    CHECK_THAT(dbm_to_watt(-80.0), WithinRel(1e-11, 1e-14));
    CHECK_THAT(dbm_to_watt(0.0), WithinRel(1e-3, 1e-15));
    CHECK_THROWS_AS(dbm_to_watt(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
    CHECK_THROWS_AS(dbm_to_watt(-std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("Scene validation")
{
    Scene s; // reference setup
    CHECK(s.num_antennas() == 4);
    CHECK_THAT(s.delta(), WithinAbs(0.5 + std::sqrt(0.5), 1e-15));

    auto with = [](auto f)
    {
        SceneParams p;
        f(p);
        return Scene(p);
    };
    CHECK_THROWS_AS(with([](SceneParams &p) { p.theta_p = 0.0; }), std::invalid_argument);
    CHECK_THROWS_AS(with([](SceneParams &p) { p.theta_b = pi; }), std::invalid_argument);
    CHECK_THROWS_AS(with([](SceneParams &p) { p.wavelength_m = -1.0; }), std::invalid_argument);
    CHECK_THROWS_AS(with([](SceneParams &p) { p.num_antennas = 0; }), std::invalid_argument);
    CHECK_THROWS_AS(with([](SceneParams &p) { p.noise_power_w = 0.0; }), std::invalid_argument);
    CHECK_THROWS_AS(with([](SceneParams &p) { p.transmit_power_w = -1e-3; }), std::invalid_argument);
    CHECK_THROWS_AS(with([](SceneParams &p) { p.spread_factor = 0; }), std::invalid_argument);
    CHECK_THROWS_AS(with([](SceneParams &p) { p.theta_b = p.theta_p; }), degenerate_geometry);
    CHECK_NOTHROW(with([](SceneParams &p) { p.transmit_power_w = 0.0; }));
    // small but nonzero separation is allowed
    CHECK_NOTHROW(with([](SceneParams &p) { p.theta_b = p.theta_p + 1e-6; }));
}

TEST_CASE("node_positions")
{
    const Scene s;
    const auto np = node_positions(s);
    CHECK_THAT(np.pu_xy_m.first, WithinAbs(-20.0, 1e-12));
    CHECK_THAT(np.pu_xy_m.second, WithinAbs(34.641016151377546, 1e-12));
    CHECK_THAT(np.bd_xy_m.first, WithinAbs(24.494897427831781, 1e-12));
    CHECK_THAT(np.bd_xy_m.second, WithinAbs(24.494897427831781, 1e-12));
    CHECK_THAT(np.d_s_m, WithinRel(oracle::frozen::d_s, 1e-13));

    // d_s depends only on (d_p, d_b, theta_p, theta_b): law of cosines
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i)
    {
        SceneParams p;
        p.theta_p = oracle::uniform(rng, 0.01, pi - 0.01);
        p.theta_b = oracle::uniform(rng, 0.01, pi - 0.01);
        p.d_p_m = oracle::uniform(rng, 1.0, 100.0);
        p.d_b_m = oracle::uniform(rng, 1.0, 100.0);
        const double expect = std::sqrt(p.d_p_m * p.d_p_m + p.d_b_m * p.d_b_m -
                                        2.0 * p.d_p_m * p.d_b_m * std::cos(p.theta_b - p.theta_p));
        CHECK_THAT(node_positions(Scene(p)).d_s_m, WithinAbs(expect, 1e-9));
    }
}

TEST_CASE("PositionVector invariants")
{
    CHECK_THROWS_AS(PositionVector({}), std::invalid_argument);
    CHECK_THROWS_AS(PositionVector({0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(PositionVector({1.0, 0.5}), std::invalid_argument);
    const PositionVector xs({0.0, 0.25, 1.0});
    CHECK(xs.size() == 3);
    CHECK(xs.min_gap() == 0.25);
    CHECK(xs.aperture() == 1.0);
    CHECK(xs.translated(0.5)[0] == 0.5);
}

TEST_CASE("array_response")
{
    const double lambda = 0.5;
    SECTION("single antenna at the origin")
    {
        auto a = array_response(PositionVector({0.0}), 1.1, lambda);
        REQUIRE(a.size() == 1);
        CHECK(a[0] == complex(1.0, 0.0));
    }
    SECTION("broadside")
    {
        auto a = array_response(PositionVector({0.0, lambda / 2}), pi / 2, lambda);
        CHECK_THAT(a[1].real(), WithinAbs(1.0, 1e-15));
        CHECK_THAT(a[1].imag(), WithinAbs(0.0, 1e-15));
    }
    SECTION("quarter-wave phase at cos(theta) = 1/2")
    {
        auto a = array_response(PositionVector({0.0, lambda / 2}), pi / 3, lambda);
        CHECK_THAT(a[1].real(), WithinAbs(0.0, 1e-15));
        CHECK_THAT(a[1].imag(), WithinAbs(-1.0, 1e-15));
    }
    SECTION("empty span")
    {
        CHECK_THROWS_AS(array_response<double>(std::span<const double>{}, 1.0, lambda), std::invalid_argument);
    }
    SECTION("unit magnitude")
    {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 100; ++i)
        {
            std::vector<double> xs{oracle::uniform(rng, -10.0, 10.0)};
            for (int n = 0; n < 15; ++n)
                xs.push_back(xs.back() + oracle::uniform(rng, 0.25, 5.0));
            for (const auto &c : array_response(PositionVector(xs), oracle::uniform(rng, 0.01, 3.13), lambda))
                CHECK_THAT(std::abs(c), WithinAbs(1.0, 1e-12));
        }
    }
}

TEST_CASE("channels PT->PU and PT->BD")
{
    const Scene s;
    CHECK_THAT(s.beta_p(), WithinRel(oracle::frozen::beta_p, 1e-13));
    CHECK_THAT(s.beta_b(), WithinRel(oracle::frozen::beta_b, 1e-13));

    const PositionVector one({0.0});
    auto hp = channel_pt_pu(s, one);
    auto hb = channel_pt_bd(s, one);
    REQUIRE(hp.coeffs.size() == 1);
    CHECK(hp.node_tag == NodeTag::PU);
    CHECK(hb.node_tag == NodeTag::BD);
    CHECK_THAT(std::abs(hp.coeffs[0]), WithinRel(s.beta_p(), 1e-14));
    CHECK_THAT(std::abs(hb.coeffs[0]), WithinRel(s.beta_b(), 1e-14));

    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i)
    {
        std::vector<double> xs{0.0};
        const int n = 1 + static_cast<int>(rng() % 16);
        for (int k = 1; k < n; ++k)
            xs.push_back(xs.back() + oracle::uniform(rng, 0.25, 3.0));
        const PositionVector pv(xs);
        const auto p = channel_pt_pu(s, pv), b = channel_pt_bd(s, pv);
        for (const auto &c : p.coeffs)
            CHECK_THAT(std::abs(c), WithinRel(s.beta_p(), 1e-12));
        CHECK_THAT(p.squared_norm() / (n * s.beta_p() * s.beta_p()), WithinAbs(1.0, 1e-12));
        CHECK_THAT(b.squared_norm() / (n * s.beta_b() * s.beta_b()), WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("bd_pu_channel")
{
    const Scene s;
    const complex g = bd_pu_channel(s);
    CHECK_THAT(std::norm(g), WithinRel(oracle::frozen::g2, 1e-12));
    CHECK_THAT(std::abs(g), WithinRel(s.wavelength() / (4 * pi * node_positions(s).d_s_m), 1e-14));

    // scaling both node distances scales d_s
    SceneParams p;
    p.d_p_m *= 2.0;
    p.d_b_m *= 2.0;
    CHECK_THAT(std::abs(bd_pu_channel(Scene(p))), WithinRel(std::abs(g) / 2.0, 1e-12));
}

TEST_CASE("double-fading channel gain ratio")
{
    const Scene s;
    const double ratio = channel_gain_ratio(s);
    CHECK_THAT(ratio, WithinRel(oracle::frozen::gain_ratio, 1e-12));
    CHECK(ratio < 1e-4);

    // same ratio from the vectors
    const PositionVector xs({0.0, 0.7, 1.9, 2.5});
    const double num = std::norm(bd_pu_channel(s)) * channel_pt_bd(s, xs).squared_norm();
    const double den = channel_pt_pu(s, xs).squared_norm();
    CHECK_THAT(num / den, WithinRel(ratio, 1e-12));
}
