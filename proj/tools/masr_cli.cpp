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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "masr/cli/commands.hpp"

using namespace masr::cli;

int main(int argc, char **argv)
{
    CLI::App app{"masr: movable antenna symbiotic radio link simulator"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, out_path, format = "csv";
    std::optional<std::uint64_t> seed;
    std::vector<std::string> overrides;
    app.add_option("--config", config_path, "Flat JSON configuration file");
    app.add_option("--out", out_path, "Output file (default: stdout)");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", seed, "Search seed (overrides config)");
    app.add_option("--set", overrides, "Override a config key, key=value (repeatable)");

    bool table2 = false;
    auto *positions = app.add_subcommand("positions", "Closed-form antenna positions in wavelengths");
    positions->add_flag("--table2", table2, "Use the three reference steering-angle rows");
    auto *pattern = app.add_subcommand("pattern", "Beam gain versus angle");
    auto *rates = app.add_subcommand("rates", "Primary and secondary rates at the configured power");
    auto *region = app.add_subcommand("region", "Rate region: FPA frontier, MA corner, bounds");
    auto *sweep = app.add_subcommand("sweep-power", "Secondary rate versus transmit power, MA and FPA");
    auto *verify = app.add_subcommand("verify", "Check the closed form against the search oracle");
    verify->add_flag("--table2", table2, "Use the three reference steering-angle rows");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_invalid_config;
    }

    Table table;
    int rc = exit_ok;
    try
    {
        nlohmann::json doc = config_path.empty() ? nlohmann::json::object() : load_config_file(config_path);
        for (const auto &o : overrides)
            apply_override(doc, o);
        if (seed)
            doc["seed"] = *seed;
        const RunConfig cfg = parse_config(doc);

        if (*positions)
            table = cmd_positions(cfg, table2);
        else if (*pattern)
            table = cmd_pattern(cfg);
        else if (*rates)
            table = cmd_rates(cfg);
        else if (*region)
            table = cmd_region(cfg);
        else if (*sweep)
            table = cmd_sweep_power(cfg);
        else if (*verify)
        {
            auto v = cmd_verify(cfg, table2);
            table = std::move(v.table);
            if (!v.passed)
            {
                std::cerr << "verify: oracle gap exceeds 1% of N\n";
                rc = exit_verification_failed;
            }
        }
    }
    catch (const masr::degenerate_geometry &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_degenerate_geometry;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid_config;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io_error;
    }

    const std::string text = render(table, format == "json" ? Format::json : Format::csv);
    if (out_path.empty())
    {
        std::cout << text;
        return rc;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << text) || !out.flush())
    {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return exit_io_error;
    }
    return rc;
}
