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

#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "scene.hpp"

namespace masr
{
    struct BeamformingVector
    {
        cvec weights;
        double power_budget_w;

        double power() const
        {
            double s = 0.0;
            for (const auto &w : weights)
                s += std::norm(w);
            return s;
        }
    };

    // Primary / secondary achievable rates in bits/s/Hz
    struct RatePoint
    {
        double primary_rate_bpshz = 0.0;
        double secondary_rate_bpshz = 0.0;
    };

    // MRT toward the PU: w = sqrt(P_t / N) a(x, theta_p)
    inline BeamformingVector mrt_beamformer(const PositionVector &xs, const Scene &scene)
    {
        const double p = scene.transmit_power();
        const double scale = std::sqrt(p / static_cast<double>(xs.size()));
        BeamformingVector w{array_response(xs, scene.theta_p(), scene.wavelength()), p};
        for (auto &c : w.weights)
            c *= scale;
        return w;
    }

    /*!MD
    # beam_gain
    Beam gain of the array at positions `xs` toward a direction with spatial-frequency offset `delta`:

    kappa = | sum_n exp(j 2pi/lambda x_n delta) |,  0 <= kappa <= N

    `delta = cos(theta_p) - cos(theta)`. The overload taking two angles is the gain of the MRT beam
    steered at `theta_p`, observed at `theta`.
    MD!*/
    template <std::floating_point T>
    T beam_gain_delta(std::span<const T> xs, T delta, T lambda)
    {
        const T k = T(2) * std::numbers::pi_v<T> / lambda * delta;
        T re = T(0), im = T(0);
        for (T x : xs)
        {
            re += std::cos(k * x);
            im += std::sin(k * x);
        }
        return std::hypot(re, im);
    }

    inline double beam_gain(const PositionVector &xs, double theta_p, double theta, double lambda)
    {
        return beam_gain_delta<double>(xs.xs(), std::cos(theta_p) - std::cos(theta), lambda);
    }

    // FPA gain at x_n = n lambda / 2, evaluated by direct summation
    inline double fpa_beam_gain(std::size_t n, double delta)
    {
        if (!(std::abs(delta) < 2.0))
            throw std::invalid_argument("fpa_beam_gain: |delta| must be below 2");
        double re = 0.0, im = 0.0;
        for (std::size_t i = 1; i <= n; ++i)
        {
            const double phase = static_cast<double>(i) * pi * delta;
            re += std::cos(phase);
            im += std::sin(phase);
        }
        return std::hypot(re, im);
    }

    // Dirichlet-kernel closed form of fpa_beam_gain; only used as a cross-check
    inline double fpa_beam_gain_dirichlet(std::size_t n, double delta)
    {
        const double den = std::sin(pi * delta / 2.0);
        if (den == 0.0)
            return static_cast<double>(n);
        return std::abs(std::sin(static_cast<double>(n) * pi * delta / 2.0) / den);
    }

    namespace detail
    {
        struct LinkPowers
        {
            double primary;   // |h_p^H w|^2
            double secondary; // |g h_b^H w|^2
        };

        inline LinkPowers link_powers(const Scene &scene, const PositionVector &xs, const BeamformingVector &w)
        {
            const auto hp = channel_pt_pu(scene, xs);
            const auto hb = channel_pt_bd(scene, xs);
            const double g2 = std::norm(bd_pu_channel(scene));
            return {std::norm(inner(hp.coeffs, w.weights)), g2 * std::norm(inner(hb.coeffs, w.weights))};
        }
    }

    // Average SNR at the PU for decoding the primary symbol
    inline double average_snr_primary(const Scene &scene, const PositionVector &xs, const BeamformingVector &w)
    {
        const auto lp = detail::link_powers(scene, xs, w);
        return (lp.primary + lp.secondary) / scene.noise_power();
    }

    inline double primary_rate_exact(const Scene &scene, const PositionVector &xs, const BeamformingVector &w)
    {
        return std::log2(1.0 + average_snr_primary(scene, xs, w));
    }

    // Drops the backscatter contribution, which is below the direct link by the double-fading ratio
    inline double primary_rate_approx(const Scene &scene, const PositionVector &xs, const BeamformingVector &w)
    {
        const auto hp = channel_pt_pu(scene, xs);
        return std::log2(1.0 + std::norm(inner(hp.coeffs, w.weights)) / scene.noise_power());
    }

    // Secondary rate after SIC and MRC over L primary symbols
    inline double secondary_rate(const Scene &scene, const PositionVector &xs, const BeamformingVector &w)
    {
        const double l = static_cast<double>(scene.spread_factor());
        const double s = detail::link_powers(scene, xs, w).secondary;
        return std::log2(1.0 + l * s / scene.noise_power()) / l;
    }

    inline RatePoint rates(const Scene &scene, const PositionVector &xs, const BeamformingVector &w)
    {
        return {primary_rate_exact(scene, xs, w), secondary_rate(scene, xs, w)};
    }
}
