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

#pragma once

#include <cctype>
#include <cmath>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "../experiments.hpp"
#include "../scene.hpp"
#include "../units.hpp"

namespace masr::cli
{
    // Invalid or unknown configuration field; maps to exit code 2
    class config_error : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    enum class AngleUnit
    {
        pi, // multiples of pi
        rad
    };

    /*!MD
    # RunConfig
    Flat key-value JSON document. Every key is optional; defaults reproduce the reference setup.

    | key                  | default        | meaning                                            |
    |----------------------|----------------|----------------------------------------------------|
    | `wavelength_m`       | 0.5            | carrier wavelength                                 |
    | `num_antennas`       | 4              | N                                                  |
    | `angle_unit`         | `"pi"`         | unit of numeric angles: `"pi"` or `"rad"`          |
    | `theta_p`, `theta_b` | 1/3, 3/4       | steering angles; numbers or strings like `"3/4 pi"`|
    | `d_p_m`, `d_b_m`     | 40, 20 sqrt(3) | PT->PU and PT->BD distances                        |
    | `transmit_power_dbm` | 30             | P_t (mutually exclusive with `transmit_power_w`)   |
    | `transmit_power_w`   |                | P_t in watts, allows 0                             |
    | `noise_power_dbm`    | -80            | sigma^2                                            |
    | `spread_factor`      | 15             | L                                                  |
    | `scheme`             | `"ma"`         | `"ma"` or `"fpa"`                                  |
    | `pattern_samples`    | 2048           | beam pattern grid size                             |
    | `frontier_samples`   | 201            | FPA frontier points                                |
    | `p_dbm_start/stop/step` | 20 / 40 / 0.25 | transmit power sweep grid                       |
    | `oracle_budget`      | 2000           | random starts of the placement search              |
    | `seed`               | 7              | search seed                                        |
    | `rows`               |                | list of `[theta_p, theta_b]` pairs                 |
    MD!*/
    struct RunConfig
    {
        SceneParams scene;
        Scheme scheme = Scheme::MA;
        std::size_t pattern_samples = default_pattern_samples;
        std::size_t frontier_samples = 201;
        double p_dbm_start = 20.0;
        double p_dbm_stop = 40.0;
        double p_dbm_step = 0.25;
        std::size_t oracle_budget = 2000;
        std::uint64_t seed = 7;
        std::optional<std::vector<std::pair<double, double>>> rows;

        Scene make_scene() const
        {
            try
            {
                return Scene(scene);
            }
            catch (const degenerate_geometry &)
            {
                throw;
            }
            catch (const std::invalid_argument &e)
            {
                throw config_error(e.what());
            }
        }

        std::vector<double> power_grid() const
        {
            std::vector<double> g;
            const auto steps = static_cast<long>(std::floor((p_dbm_stop - p_dbm_start) / p_dbm_step + 1e-9));
            for (long i = 0; i <= steps; ++i)
                g.push_back(p_dbm_start + static_cast<double>(i) * p_dbm_step);
            return g;
        }
    };

    namespace detail
    {
        inline std::string trim(std::string s)
        {
            std::string out;
            for (char c : s)
                if (!std::isspace(static_cast<unsigned char>(c)))
                    out += c;
            return out;
        }

        inline double parse_number(const std::string &field, const std::string &s)
        {
            double v = 0.0;
            const auto *end = s.data() + s.size();
            auto [ptr, ec] = std::from_chars(s.data(), end, v);
            if (ec != std::errc() || ptr != end || s.empty())
                throw config_error(field + ": cannot parse '" + s + "' as a number");
            return v;
        }

        // "a/b" or "a"
        inline double parse_fraction(const std::string &field, const std::string &s)
        {
            const auto slash = s.find('/');
            if (slash == std::string::npos)
                return parse_number(field, s);
            const double den = parse_number(field, s.substr(slash + 1));
            if (den == 0.0)
                throw config_error(field + ": zero denominator");
            return parse_number(field, s.substr(0, slash)) / den;
        }

        // Accepts "pi", "0.25pi", "1/3 pi", "3pi/4", "3*pi/4"
        inline double parse_pi_string(const std::string &field, const std::string &raw)
        {
            std::string s = trim(raw);
            const auto at = s.find("pi");
            if (at == std::string::npos)
                throw config_error(field + ": angle string '" + raw + "' must be a multiple of pi");
            std::string coef = s.substr(0, at);
            std::string tail = s.substr(at + 2);
            if (!coef.empty() && coef.back() == '*')
                coef.pop_back();
            double v = coef.empty() ? 1.0 : parse_fraction(field, coef);
            if (!tail.empty())
            {
                if (tail.front() != '/')
                    throw config_error(field + ": unexpected '" + tail + "' in angle '" + raw + "'");
                const double den = parse_number(field, tail.substr(1));
                if (den == 0.0)
                    throw config_error(field + ": zero denominator");
                v /= den;
            }
            return v * pi;
        }

        inline double parse_angle(const std::string &field, const nlohmann::json &j, AngleUnit unit)
        {
            if (j.is_number())
            {
                const double v = j.get<double>();
                return unit == AngleUnit::pi ? v * pi : v;
            }
            if (j.is_string())
                return parse_pi_string(field, j.get<std::string>());
            throw config_error(field + ": angle must be a number or a string such as \"1/3 pi\"");
        }

        inline double get_real(const std::string &field, const nlohmann::json &j)
        {
            if (!j.is_number())
                throw config_error(field + ": expected a number");
            return j.get<double>();
        }

        inline std::uint64_t get_count(const std::string &field, const nlohmann::json &j)
        {
            if (j.is_number_unsigned())
                return j.get<std::uint64_t>();
            if (j.is_number_integer())
            {
                const auto v = j.get<std::int64_t>();
                if (v < 0)
                    throw config_error(field + ": must be nonnegative");
                return static_cast<std::uint64_t>(v);
            }
            throw config_error(field + ": expected an integer");
        }
    }

    inline const std::set<std::string> &known_keys()
    {
        static const std::set<std::string> keys{
            "wavelength_m", "num_antennas", "angle_unit", "theta_p", "theta_b", "d_p_m", "d_b_m",
            "transmit_power_dbm", "transmit_power_w", "noise_power_dbm", "spread_factor", "scheme",
            "pattern_samples", "frontier_samples", "p_dbm_start", "p_dbm_stop", "p_dbm_step",
            "oracle_budget", "seed", "rows"};
        return keys;
    }

    inline RunConfig parse_config(const nlohmann::json &doc)
    {
        using detail::get_count;
        using detail::get_real;

        if (!doc.is_object())
            throw config_error("config: top level must be a JSON object");
        for (const auto &[key, _] : doc.items())
            if (!known_keys().contains(key))
                throw config_error(key + ": unknown configuration key");

        RunConfig cfg;
        AngleUnit unit = AngleUnit::pi;
        if (doc.contains("angle_unit"))
        {
            const auto &u = doc["angle_unit"];
            if (u == "pi")
                unit = AngleUnit::pi;
            else if (u == "rad")
                unit = AngleUnit::rad;
            else
                throw config_error("angle_unit: expected \"pi\" or \"rad\"");
        }

        auto &s = cfg.scene;
        if (doc.contains("wavelength_m"))
            s.wavelength_m = get_real("wavelength_m", doc["wavelength_m"]);
        if (doc.contains("num_antennas"))
            s.num_antennas = get_count("num_antennas", doc["num_antennas"]);
        if (doc.contains("theta_p"))
            s.theta_p = detail::parse_angle("theta_p", doc["theta_p"], unit);
        if (doc.contains("theta_b"))
            s.theta_b = detail::parse_angle("theta_b", doc["theta_b"], unit);
        if (doc.contains("d_p_m"))
            s.d_p_m = get_real("d_p_m", doc["d_p_m"]);
        if (doc.contains("d_b_m"))
            s.d_b_m = get_real("d_b_m", doc["d_b_m"]);
        if (doc.contains("transmit_power_dbm") && doc.contains("transmit_power_w"))
            throw config_error("transmit_power_w: conflicts with transmit_power_dbm");
        try
        {
            if (doc.contains("transmit_power_dbm"))
                s.transmit_power_w = dbm_to_watt(get_real("transmit_power_dbm", doc["transmit_power_dbm"]));
            if (doc.contains("transmit_power_w"))
                s.transmit_power_w = get_real("transmit_power_w", doc["transmit_power_w"]);
            if (doc.contains("noise_power_dbm"))
                s.noise_power_w = dbm_to_watt(get_real("noise_power_dbm", doc["noise_power_dbm"]));
        }
        catch (const config_error &)
        {
            throw;
        }
        catch (const std::invalid_argument &e)
        {
            throw config_error(std::string("power: ") + e.what());
        }
        if (doc.contains("spread_factor"))
            s.spread_factor = get_count("spread_factor", doc["spread_factor"]);

        if (doc.contains("scheme"))
        {
            const auto &v = doc["scheme"];
            if (v == "ma")
                cfg.scheme = Scheme::MA;
            else if (v == "fpa")
                cfg.scheme = Scheme::FPA;
            else
                throw config_error("scheme: expected \"ma\" or \"fpa\"");
        }
        if (doc.contains("pattern_samples"))
            cfg.pattern_samples = get_count("pattern_samples", doc["pattern_samples"]);
        if (doc.contains("frontier_samples"))
            cfg.frontier_samples = get_count("frontier_samples", doc["frontier_samples"]);
        if (doc.contains("p_dbm_start"))
            cfg.p_dbm_start = get_real("p_dbm_start", doc["p_dbm_start"]);
        if (doc.contains("p_dbm_stop"))
            cfg.p_dbm_stop = get_real("p_dbm_stop", doc["p_dbm_stop"]);
        if (doc.contains("p_dbm_step"))
            cfg.p_dbm_step = get_real("p_dbm_step", doc["p_dbm_step"]);
        if (!(cfg.p_dbm_step > 0.0) || !(cfg.p_dbm_stop >= cfg.p_dbm_start))
            throw config_error("p_dbm_step: grid must have positive step and stop >= start");
        if (doc.contains("oracle_budget"))
            cfg.oracle_budget = get_count("oracle_budget", doc["oracle_budget"]);
        if (doc.contains("seed"))
            cfg.seed = get_count("seed", doc["seed"]);

        if (doc.contains("rows"))
        {
            const auto &r = doc["rows"];
            if (!r.is_array() || r.empty())
                throw config_error("rows: expected a nonempty array of [theta_p, theta_b] pairs");
            std::vector<std::pair<double, double>> rows;
            for (std::size_t i = 0; i < r.size(); ++i)
            {
                const std::string f = "rows[" + std::to_string(i) + "]";
                if (!r[i].is_array() || r[i].size() != 2)
                    throw config_error(f + ": expected [theta_p, theta_b]");
                rows.emplace_back(detail::parse_angle(f, r[i][0], unit), detail::parse_angle(f, r[i][1], unit));
            }
            cfg.rows = std::move(rows);
        }
        return cfg;
    }

    // "key=value"; value is JSON when it parses as JSON, otherwise a plain string
    inline void apply_override(nlohmann::json &doc, const std::string &assignment)
    {
        const auto eq = assignment.find('=');
        if (eq == std::string::npos || eq == 0)
            throw config_error("--set: expected key=value, got '" + assignment + "'");
        const std::string key = assignment.substr(0, eq);
        const std::string value = assignment.substr(eq + 1);
        auto parsed = nlohmann::json::parse(value, nullptr, false);
        doc[key] = parsed.is_discarded() ? nlohmann::json(value) : parsed;
    }

    inline nlohmann::json load_config_file(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw config_error("--config: cannot open '" + path + "'");
        auto doc = nlohmann::json::parse(in, nullptr, false);
        if (doc.is_discarded())
            throw config_error("--config: '" + path + "' is not valid JSON");
        return doc;
    }
}
