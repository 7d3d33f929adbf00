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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "beamforming.hpp"
#include "placement.hpp"
#include "scene.hpp"

namespace masr
{
    enum class Scheme
    {
        MA,
        FPA
    };

    inline const char *to_string(Scheme s)
    {
        return s == Scheme::MA ? "MA" : "FPA";
    }

    // Closed-form optimum for MA, half-wavelength array for FPA
    inline PositionVector scheme_positions(const Scene &scene, Scheme s)
    {
        return s == Scheme::MA ? optimal_ma_positions(scene).positions : fpa_positions(scene);
    }

    struct PatternSample
    {
        double theta;
        double gain;
    };

    struct BeamPattern
    {
        std::vector<PatternSample> samples;
        Scheme scheme_tag;
    };

    inline constexpr std::size_t default_pattern_samples = 2048;

    // Gain of the MRT beam (steered at theta_p) on the grid theta_k = k pi / (samples + 1), k = 1..samples,
    // with theta_p and theta_b inserted exactly. A grid point within 1e-12 of either is replaced by it.
    inline BeamPattern beam_pattern_sweep(const Scene &scene, const PositionVector &xs, std::size_t samples,
                                          Scheme scheme)
    {
        if (samples < 2)
            throw std::invalid_argument("beam_pattern_sweep: samples must be at least 2");

        std::vector<double> thetas;
        thetas.reserve(samples + 2);
        const double tp = scene.theta_p(), tb = scene.theta_b();
        for (std::size_t k = 1; k <= samples; ++k)
        {
            const double t = static_cast<double>(k) * pi / static_cast<double>(samples + 1);
            if (std::abs(t - tp) > 1e-12 && std::abs(t - tb) > 1e-12)
                thetas.push_back(t);
        }
        thetas.push_back(tp);
        thetas.push_back(tb);
        std::sort(thetas.begin(), thetas.end());

        BeamPattern bp{{}, scheme};
        bp.samples.reserve(thetas.size());
        for (double t : thetas)
            bp.samples.push_back({t, beam_gain(xs, tp, t, scene.wavelength())});
        return bp;
    }

    struct PowerSweepRow
    {
        double p_dbm;
        Scheme scheme;
        double r_c;
    };

    // Default transmit-power grid: 20..40 dBm in 0.25 dB steps
    inline std::vector<double> default_power_grid_dbm()
    {
        std::vector<double> g;
        for (int i = 0; i <= 80; ++i)
            g.push_back(20.0 + 0.25 * i);
        return g;
    }

    // Secondary rate under MRT for each (power, scheme), emitted in grid order then scheme order
    inline std::vector<PowerSweepRow> rate_vs_power_sweep(const Scene &scene_template, std::span<const double> p_dbm_grid,
                                                          std::span<const Scheme> schemes)
    {
        if (p_dbm_grid.empty())
            throw std::invalid_argument("rate_vs_power_sweep: empty power grid");

        std::vector<std::pair<Scheme, PositionVector>> pos;
        for (Scheme s : schemes)
            pos.emplace_back(s, scheme_positions(scene_template, s));

        std::vector<PowerSweepRow> rows;
        rows.reserve(p_dbm_grid.size() * schemes.size());
        for (double p_dbm : p_dbm_grid)
        {
            const Scene scene = scene_template.with_transmit_power(dbm_to_watt(p_dbm));
            for (const auto &[s, xs] : pos)
                rows.push_back({p_dbm, s, secondary_rate(scene, xs, mrt_beamformer(xs, scene))});
        }
        return rows;
    }

    /*!MD
    # FrontierFamily
    Two-dimensional beamformer family spanning the PU and BD channels at fixed antenna positions.

    With `u1 = h_p / ||h_p||`, residual `r = h_b - (u1^H h_b) u1` and `u2 = r / ||r||`:

    w(t) = sqrt(P_t) (cos t u1 + sin t e^{j phi} u2)

    where `phi` co-phases both contributions to `h_b^H w`. `t = 0` is MRT toward the PU; `t = t_max()`
    is MRT toward the BD (w proportional to h_b). On `[0, t_max()]` the primary rate falls and the
    secondary rate rises, tracing the Pareto boundary. Components outside span{h_p, h_b} only waste power.

    When `h_b` is parallel to `h_p` within 1e-12 the family collapses to `t = 0`.
    MD!*/
    class FrontierFamily
    {
    public:
        FrontierFamily(const Scene &scene, PositionVector xs)
            : scene_(scene), xs_(std::move(xs))
        {
            const auto hp = channel_pt_pu(scene_, xs_).coeffs;
            const auto hb = channel_pt_bd(scene_, xs_).coeffs;
            const double hp_norm = std::sqrt(ChannelVector{hp, NodeTag::PU}.squared_norm());
            const double hb_norm = std::sqrt(ChannelVector{hb, NodeTag::BD}.squared_norm());

            u1_ = hp;
            for (auto &c : u1_)
                c /= hp_norm;
            const complex a = inner(u1_, hb);
            cvec r(hb.size());
            double r_norm2 = 0.0;
            for (std::size_t i = 0; i < hb.size(); ++i)
            {
                r[i] = hb[i] - a * u1_[i];
                r_norm2 += std::norm(r[i]);
            }
            const double r_norm = std::sqrt(r_norm2);
            degenerate_ = r_norm <= 1e-12 * hb_norm;
            if (!degenerate_)
            {
                u2_ = std::move(r);
                for (auto &c : u2_)
                    c /= r_norm;
                // h_b^H u1 = conj(a), h_b^H u2 = ||r|| > 0
                cophase_ = std::polar(1.0, -std::arg(a));
                t_max_ = std::atan2(r_norm, std::abs(a));
            }
        }

        bool degenerate() const { return degenerate_; }
        double t_max() const { return t_max_; }
        const PositionVector &positions() const { return xs_; }

        BeamformingVector beamformer(double t) const
        {
            const double p = scene_.transmit_power();
            const double sp = std::sqrt(p);
            BeamformingVector w{cvec(u1_.size()), p};
            if (degenerate_)
            {
                for (std::size_t i = 0; i < u1_.size(); ++i)
                    w.weights[i] = sp * u1_[i];
                return w;
            }
            const double c = std::cos(t), s = std::sin(t);
            for (std::size_t i = 0; i < u1_.size(); ++i)
                w.weights[i] = sp * (c * u1_[i] + s * cophase_ * u2_[i]);
            return w;
        }

        RatePoint point(double t) const
        {
            return rates(scene_, xs_, beamformer(t));
        }

    private:
        Scene scene_;
        PositionVector xs_;
        cvec u1_, u2_;
        complex cophase_{1.0, 0.0};
        double t_max_ = 0.0;
        bool degenerate_ = false;
    };

    struct RateRegion
    {
        std::vector<RatePoint> fpa_frontier; // increasing primary rate
        RatePoint ma_corner;
        RatePoint bounds;
        bool degenerate = false;
    };

    // Per-axis maxima over all beamformers with ||w||^2 <= P_t and all positions:
    // both channel products are bounded by Cauchy-Schwarz with kappa = N.
    inline RatePoint rate_bounds(const Scene &scene)
    {
        const double n = static_cast<double>(scene.num_antennas());
        const double p = scene.transmit_power();
        const double s2 = scene.noise_power();
        const double l = static_cast<double>(scene.spread_factor());
        const double g2 = std::norm(bd_pu_channel(scene));
        const double bp2 = scene.beta_p() * scene.beta_p();
        const double bb2 = scene.beta_b() * scene.beta_b();
        return {std::log2(1.0 + p * n * (bp2 + g2 * bb2) / s2),
                std::log2(1.0 + l * g2 * bb2 * p * n / s2) / l};
    }

    inline RateRegion rate_region(const Scene &scene, std::size_t frontier_samples)
    {
        if (frontier_samples < 2)
            throw std::invalid_argument("rate_region: frontier_samples must be at least 2");

        RateRegion rr;
        const auto ma = optimal_ma_positions(scene).positions;
        rr.ma_corner = rates(scene, ma, mrt_beamformer(ma, scene));
        rr.bounds = rate_bounds(scene);

        const FrontierFamily fam(scene, fpa_positions(scene));
        rr.degenerate = fam.degenerate();
        if (fam.degenerate())
        {
            rr.fpa_frontier.push_back(fam.point(0.0));
            return rr;
        }
        rr.fpa_frontier.reserve(frontier_samples);
        for (std::size_t k = frontier_samples; k-- > 0;)
        {
            const double t = fam.t_max() * static_cast<double>(k) / static_cast<double>(frontier_samples - 1);
            rr.fpa_frontier.push_back(fam.point(t));
        }
        return rr;
    }

    struct Table2Row
    {
        double theta_p;
        double theta_b;
        double delta;                      // rounded to 4 decimals
        std::vector<double> positions_lambda; // x_n / lambda, rounded to 4 decimals
    };

    inline double round4(double v)
    {
        const double r = std::round(v * 1e4) / 1e4;
        return r == 0.0 ? 0.0 : r;
    }

    // The three steering-angle pairs of the reference placement table
    inline std::vector<std::pair<double, double>> table2_angle_rows()
    {
        return {{pi / 3.0, pi / 2.0}, {pi / 3.0, 3.0 * pi / 4.0}, {pi / 3.0, 8.0 * pi / 9.0}};
    }

    inline std::vector<Table2Row> table2_report(const Scene &scene_template,
                                                std::span<const std::pair<double, double>> rows)
    {
        std::vector<Table2Row> out;
        out.reserve(rows.size());
        for (const auto &[tp, tb] : rows)
        {
            SceneParams p = scene_template.params();
            p.theta_p = tp;
            p.theta_b = tb;
            const Scene scene(p);
            const auto res = optimal_ma_positions(scene);
            Table2Row row{tp, tb, round4(scene.delta()), {}};
            for (double x : res.positions.xs())
                row.positions_lambda.push_back(round4(x / scene.wavelength()));
            out.push_back(std::move(row));
        }
        return out;
    }
}
