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
#include <complex>
#include <concepts>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "units.hpp"

namespace masr
{
    using complex = std::complex<double>;
    using cvec = std::vector<complex>;

    // Tolerance below which cos(theta_p) and cos(theta_b) are treated as equal
    inline constexpr double degenerate_delta_tol = 1e-12;

    /*!MD
    # SceneParams
    Raw system parameters of the PT / PU / BD link. Defaults reproduce the reference setup:
    - `wavelength_m = 0.5`, `num_antennas = 4`
    - `theta_p = pi/3`, `theta_b = 3pi/4` (steering angles, radians, open interval (0, pi))
    - `d_p_m = 40`, `d_b_m = 20 sqrt(3)`
    - `transmit_power_w = 1` (30 dBm), `noise_power_w = 1e-11` (-80 dBm)
    - `spread_factor = 15`
    MD!*/
    struct SceneParams
    {
        double wavelength_m = 0.5;
        std::size_t num_antennas = 4;
        double theta_p = pi / 3.0;
        double theta_b = 3.0 * pi / 4.0;
        double d_p_m = 40.0;
        double d_b_m = 20.0 * std::numbers::sqrt3;
        double transmit_power_w = 1.0;
        double noise_power_w = 1e-11;
        std::size_t spread_factor = 15;
    };

    struct NodePositions
    {
        std::pair<double, double> pu_xy_m;
        std::pair<double, double> bd_xy_m;
        double d_s_m; // BD -> PU distance
    };

    // Validated, immutable scene. Throws std::invalid_argument on out-of-range
    // fields and masr::degenerate_geometry when cos(theta_p) == cos(theta_b).
    class Scene
    {
    public:
        Scene() : Scene(SceneParams{}) {}

        explicit Scene(const SceneParams &p) : p_(p)
        {
            auto positive = [](double v)
            { return std::isfinite(v) && v > 0.0; };
            if (!positive(p.wavelength_m))
                throw std::invalid_argument("Scene: wavelength_m must be positive");
            if (p.num_antennas == 0)
                throw std::invalid_argument("Scene: num_antennas must be at least 1");
            if (!(std::isfinite(p.theta_p) && p.theta_p > 0.0 && p.theta_p < pi))
                throw std::invalid_argument("Scene: theta_p must lie in (0, pi)");
            if (!(std::isfinite(p.theta_b) && p.theta_b > 0.0 && p.theta_b < pi))
                throw std::invalid_argument("Scene: theta_b must lie in (0, pi)");
            if (!positive(p.d_p_m))
                throw std::invalid_argument("Scene: d_p_m must be positive");
            if (!positive(p.d_b_m))
                throw std::invalid_argument("Scene: d_b_m must be positive");
            if (!(std::isfinite(p.transmit_power_w) && p.transmit_power_w >= 0.0))
                throw std::invalid_argument("Scene: transmit_power_w must be nonnegative");
            if (!positive(p.noise_power_w))
                throw std::invalid_argument("Scene: noise_power_w must be positive");
            if (p.spread_factor == 0)
                throw std::invalid_argument("Scene: spread_factor must be at least 1");

            delta_ = std::cos(p.theta_p) - std::cos(p.theta_b);
            if (std::abs(delta_) < degenerate_delta_tol)
                throw degenerate_geometry("cos(theta_p) equals cos(theta_b)");
        }

        const SceneParams &params() const { return p_; }

        double wavelength() const { return p_.wavelength_m; }
        std::size_t num_antennas() const { return p_.num_antennas; }
        double theta_p() const { return p_.theta_p; }
        double theta_b() const { return p_.theta_b; }
        double d_p() const { return p_.d_p_m; }
        double d_b() const { return p_.d_b_m; }
        double transmit_power() const { return p_.transmit_power_w; }
        double noise_power() const { return p_.noise_power_w; }
        std::size_t spread_factor() const { return p_.spread_factor; }

        // cos(theta_p) - cos(theta_b), |delta| in (0, 2)
        double delta() const { return delta_; }

        // Minimum inter-antenna spacing, lambda / 2
        double d_min() const { return p_.wavelength_m / 2.0; }

        double beta_p() const { return p_.wavelength_m / (4.0 * pi * p_.d_p_m); }
        double beta_b() const { return p_.wavelength_m / (4.0 * pi * p_.d_b_m); }

        Scene with_transmit_power(double p_w) const
        {
            SceneParams q = p_;
            q.transmit_power_w = p_w;
            return Scene(q);
        }

        Scene with_num_antennas(std::size_t n) const
        {
            SceneParams q = p_;
            q.num_antennas = n;
            return Scene(q);
        }

    private:
        SceneParams p_;
        double delta_ = 0.0;
    };

    // Antenna x-coordinates on the linear array, strictly increasing.
    class PositionVector
    {
    public:
        explicit PositionVector(std::vector<double> xs) : xs_(std::move(xs))
        {
            if (xs_.empty())
                throw std::invalid_argument("PositionVector: at least one position is required");
            for (std::size_t i = 0; i < xs_.size(); ++i)
            {
                if (!std::isfinite(xs_[i]))
                    throw std::invalid_argument("PositionVector: positions must be finite");
                if (i > 0 && !(xs_[i] > xs_[i - 1]))
                    throw std::invalid_argument("PositionVector: positions must be strictly increasing");
            }
        }

        std::span<const double> xs() const { return xs_; }
        std::size_t size() const { return xs_.size(); }
        double operator[](std::size_t i) const { return xs_[i]; }

        double aperture() const { return xs_.back() - xs_.front(); }

        double min_gap() const
        {
            double g = std::numeric_limits<double>::infinity();
            for (std::size_t i = 1; i < xs_.size(); ++i)
                g = std::min(g, xs_[i] - xs_[i - 1]);
            return g;
        }

        PositionVector translated(double c) const
        {
            std::vector<double> ys = xs_;
            for (auto &y : ys)
                y += c;
            return PositionVector(std::move(ys));
        }

        friend bool operator==(const PositionVector &, const PositionVector &) = default;

    private:
        std::vector<double> xs_;
    };

    enum class NodeTag
    {
        PU,
        BD
    };

    struct ChannelVector
    {
        cvec coeffs;
        NodeTag node_tag;

        double squared_norm() const
        {
            double s = 0.0;
            for (const auto &c : coeffs)
                s += std::norm(c);
            return s;
        }
    };

    // Hermitian inner product a^H b
    inline complex inner(std::span<const complex> a, std::span<const complex> b)
    {
        if (a.size() != b.size())
            throw std::invalid_argument("inner: length mismatch");
        complex s{0.0, 0.0};
        for (std::size_t i = 0; i < a.size(); ++i)
            s += std::conj(a[i]) * b[i];
        return s;
    }

    inline NodePositions node_positions(const Scene &scene)
    {
        NodePositions np;
        np.pu_xy_m = {-scene.d_p() * std::cos(scene.theta_p()), scene.d_p() * std::sin(scene.theta_p())};
        np.bd_xy_m = {-scene.d_b() * std::cos(scene.theta_b()), scene.d_b() * std::sin(scene.theta_b())};
        np.d_s_m = std::hypot(np.pu_xy_m.first - np.bd_xy_m.first, np.pu_xy_m.second - np.bd_xy_m.second);
        return np;
    }

    // Far-field steering vector, entry n = exp(-j 2pi/lambda x_n cos(theta))
    template <std::floating_point T>
    std::vector<std::complex<T>> array_response(std::span<const T> xs, T theta, T lambda)
    {
        if (xs.empty())
            throw std::invalid_argument("array_response: empty position vector");
        const T k = T(2) * std::numbers::pi_v<T> / lambda * std::cos(theta);
        std::vector<std::complex<T>> a;
        a.reserve(xs.size());
        for (T x : xs)
            a.push_back(std::polar(T(1), -k * x));
        return a;
    }

    inline cvec array_response(const PositionVector &xs, double theta, double lambda)
    {
        return array_response<double>(xs.xs(), theta, lambda);
    }

    namespace detail
    {
        inline ChannelVector los_channel(const PositionVector &xs, double theta, double lambda, double d, NodeTag tag)
        {
            // h^H = beta e^{-j 2pi d / lambda} a^H, hence h carries the conjugate path phase
            const complex path = std::polar(lambda / (4.0 * pi * d), 2.0 * pi * d / lambda);
            ChannelVector h{array_response(xs, theta, lambda), tag};
            for (auto &c : h.coeffs)
                c *= path;
            return h;
        }
    }

    inline ChannelVector channel_pt_pu(const Scene &scene, const PositionVector &xs)
    {
        return detail::los_channel(xs, scene.theta_p(), scene.wavelength(), scene.d_p(), NodeTag::PU);
    }

    inline ChannelVector channel_pt_bd(const Scene &scene, const PositionVector &xs)
    {
        return detail::los_channel(xs, scene.theta_b(), scene.wavelength(), scene.d_b(), NodeTag::BD);
    }

    // BD -> PU scalar channel g
    inline complex bd_pu_channel(const Scene &scene)
    {
        const double d_s = node_positions(scene).d_s_m;
        if (!(d_s > 0.0))
            throw degenerate_geometry("PU and BD coincide (d_s = 0)");
        const double lambda = scene.wavelength();
        return std::polar(lambda / (4.0 * pi * d_s), -2.0 * pi * d_s / lambda);
    }

    // ||g h_b^H||^2 / ||h_p^H||^2 = (lambda d_p / (4 pi d_s d_b))^2, the double-fading penalty
    inline double channel_gain_ratio(const Scene &scene)
    {
        const double d_s = node_positions(scene).d_s_m;
        const double r = scene.wavelength() * scene.d_p() / (4.0 * pi * d_s * scene.d_b());
        return r * r;
    }
}
