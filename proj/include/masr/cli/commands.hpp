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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "../masr.hpp"
#include "config.hpp"
#include "table.hpp"

namespace masr::cli
{
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_io_error = 1,
        exit_invalid_config = 2,
        exit_degenerate_geometry = 3,
        exit_verification_failed = 4
    };

    inline const char *scheme_label(Scheme s)
    {
        return s == Scheme::MA ? "ma" : "fpa";
    }

    namespace detail
    {
        inline std::vector<std::pair<double, double>> angle_rows(const RunConfig &cfg, bool table2)
        {
            if (table2)
                return table2_angle_rows();
            if (cfg.rows)
                return *cfg.rows;
            return {{cfg.scene.theta_p, cfg.scene.theta_b}};
        }

        inline Scene scene_for(const RunConfig &cfg, double tp, double tb)
        {
            RunConfig c = cfg;
            c.scene.theta_p = tp;
            c.scene.theta_b = tb;
            return c.make_scene();
        }
    }

    // delta,x1..xN with positions in wavelengths, 4 decimals
    inline Table cmd_positions(const RunConfig &cfg, bool table2)
    {
        const auto rows = detail::angle_rows(cfg, table2);
        for (const auto &[tp, tb] : rows)
            (void)detail::scene_for(cfg, tp, tb);
        const auto report = table2_report(detail::scene_for(cfg, rows.front().first, rows.front().second), rows);

        Table t;
        t.columns.push_back("delta");
        for (std::size_t n = 1; n <= cfg.scene.num_antennas; ++n)
            t.columns.push_back("x" + std::to_string(n));
        for (const auto &r : report)
        {
            std::vector<Cell> row{r.delta};
            for (double x : r.positions_lambda)
                row.emplace_back(x);
            t.add(std::move(row));
        }
        return t;
    }

    inline Table cmd_pattern(const RunConfig &cfg)
    {
        const Scene scene = cfg.make_scene();
        const auto xs = scheme_positions(scene, cfg.scheme);
        const auto bp = beam_pattern_sweep(scene, xs, cfg.pattern_samples, cfg.scheme);
        Table t{{"theta_rad", "gain", "scheme"}, {}};
        for (const auto &s : bp.samples)
            t.add({s.theta, s.gain, std::string(scheme_label(cfg.scheme))});
        return t;
    }

    inline Table cmd_rates(const RunConfig &cfg)
    {
        const Scene scene = cfg.make_scene();
        const auto xs = scheme_positions(scene, cfg.scheme);
        const auto w = mrt_beamformer(xs, scene);
        Table t{{"scheme", "r_p_approx", "r_p_exact", "r_c"}, {}};
        t.add({std::string(scheme_label(cfg.scheme)), primary_rate_approx(scene, xs, w),
               primary_rate_exact(scene, xs, w), secondary_rate(scene, xs, w)});
        return t;
    }

    inline Table cmd_region(const RunConfig &cfg)
    {
        const Scene scene = cfg.make_scene();
        const auto rr = rate_region(scene, cfg.frontier_samples);
        Table t{{"r_p", "r_c", "label"}, {}};
        for (const auto &p : rr.fpa_frontier)
            t.add({p.primary_rate_bpshz, p.secondary_rate_bpshz, std::string("fpa_frontier")});
        t.add({rr.ma_corner.primary_rate_bpshz, rr.ma_corner.secondary_rate_bpshz, std::string("ma_corner")});
        t.add({rr.bounds.primary_rate_bpshz, rr.bounds.secondary_rate_bpshz, std::string("bound")});
        return t;
    }

    inline Table cmd_sweep_power(const RunConfig &cfg)
    {
        const Scene scene = cfg.make_scene();
        const auto grid = cfg.power_grid();
        const std::vector<Scheme> schemes{Scheme::MA, Scheme::FPA};
        Table t{{"p_dbm", "scheme", "r_c"}, {}};
        for (const auto &r : rate_vs_power_sweep(scene, grid, schemes))
            t.add({r.p_dbm, std::string(scheme_label(r.scheme)), r.r_c});
        return t;
    }

    struct VerifyOutcome
    {
        Table table;
        bool passed;
    };

    // Search oracle against the closed form; fails when the gap exceeds 1% of N
    inline VerifyOutcome cmd_verify(const RunConfig &cfg, bool table2)
    {
        VerifyOutcome out{{{"delta", "closed_form_gain", "oracle_gain", "gap"}, {}}, true};
        for (const auto &[tp, tb] : detail::angle_rows(cfg, table2))
        {
            const Scene scene = detail::scene_for(cfg, tp, tb);
            const double closed = optimal_ma_positions(scene).achieved_gain;
            const double oracle = search_oracle(scene, cfg.oracle_budget, cfg.seed).achieved_gain;
            const double gap = closed - oracle;
            out.table.add({scene.delta(), closed, oracle, gap});
            if (gap > 0.01 * static_cast<double>(scene.num_antennas()))
                out.passed = false;
        }
        return out;
    }
}
