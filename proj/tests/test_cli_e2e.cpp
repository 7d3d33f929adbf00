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

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace
{
    struct Run
    {
        int code;
        std::string out;
    };

    Run run(const std::string &args)
    {
        const std::string cmd = std::string(MASR_CLI_PATH) + " " + args + " 2>/dev/null";
        FILE *p = popen(cmd.c_str(), "r");
        REQUIRE(p != nullptr);
        std::string out;
        std::array<char, 4096> buf{};
        std::size_t n;
        while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
            out.append(buf.data(), n);
        const int status = pclose(p);
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
    }

    std::filesystem::path scratch()
    {
        auto d = std::filesystem::temp_directory_path() / "masr_cli_e2e";
        std::filesystem::create_directories(d);
        return d;
    }
}

TEST_CASE("positions subcommand")
{
    const auto r = run("positions --table2");
    CHECK(r.code == 0);
    CHECK(r.out == "delta,x1,x2,x3,x4\n0.5,0,2,4,6\n1.2071,0,0.8284,1.6569,2.4853\n1.4397,0,0.6946,1.3892,2.0838\n");

    CHECK(run("positions --set num_antennas=1").out == "delta,x1\n1.2071,0\n");
    CHECK(run("positions --set theta_b=0.3333333333333333").code == 3);
}

TEST_CASE("exit codes")
{
    CHECK(run("rates --set bogus=1").code == 2);
    CHECK(run("rates --format xml").code == 2);
    CHECK(run("rates --config /nonexistent/cfg.json").code == 2);
    CHECK(run("rates --set theta_p=0.75").code == 3);
    CHECK(run("pattern --out /nonexistent_dir/out.csv").code != 0);
    CHECK(run("").code == 2);
}

TEST_CASE("config file and flag precedence")
{
    const auto cfg = scratch() / "cfg.json";
    std::ofstream(cfg) << R"({"num_antennas": 6, "theta_p": "1/3 pi", "theta_b": 0.75, "transmit_power_dbm": 30})";
    const auto a = run("rates --config " + cfg.string());
    const auto b = run("rates --config " + cfg.string() + " --set num_antennas=4");
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(a.out != b.out);
    CHECK(b.out == run("rates").out);
}

TEST_CASE("output is byte-identical across runs")
{
    const auto out1 = scratch() / "v1.csv";
    const auto out2 = scratch() / "v2.csv";
    REQUIRE(run("verify --set oracle_budget=50 --seed 11 --out " + out1.string()).code == 0);
    REQUIRE(run("verify --set oracle_budget=50 --seed 11 --out " + out2.string()).code == 0);
    auto slurp = [](const std::filesystem::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    CHECK(slurp(out1) == slurp(out2));
    CHECK(slurp(out1).rfind("delta,closed_form_gain,oracle_gain,gap\n", 0) == 0);

    CHECK(run("region --set frontier_samples=5").out == run("region --set frontier_samples=5").out);
}

TEST_CASE("json format mirrors csv rows")
{
    const auto csv = run("sweep-power --set p_dbm_start=29 --set p_dbm_stop=30");
    const auto js = run("sweep-power --set p_dbm_start=29 --set p_dbm_stop=30 --format json");
    REQUIRE(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    REQUIRE(j.size() == 10);
    CHECK(j[0]["scheme"] == "ma");
    CHECK(j[1]["scheme"] == "fpa");
    CHECK(j[0]["p_dbm"].get<double>() == 29.0);
    CHECK(csv.out.rfind("p_dbm,scheme,r_c\n29,ma,", 0) == 0);
}

TEST_CASE("pattern and region subcommands")
{
    const auto p = run("pattern --set theta_p=0.25 --set pattern_samples=2");
    CHECK(p.code == 0);
    CHECK(std::count(p.out.begin(), p.out.end(), '\n') == 5);
    CHECK(p.out.rfind("theta_rad,gain,scheme\n", 0) == 0);

    const auto r = run("region --set num_antennas=1");
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
}

TEST_CASE("verify fails when the oracle falls short")
{
    // one random start with no refinement cannot align 12 antennas
    const auto r = run("verify --set num_antennas=12 --set oracle_budget=1 --seed 3");
    CHECK(r.code == 4);
}
