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
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "beamforming.hpp"
#include "scene.hpp"

namespace masr
{
    enum class PlacementMethod
    {
        closed_form,
        search_oracle,
        fpa_baseline
    };

    inline const char *to_string(PlacementMethod m)
    {
        switch (m)
        {
        case PlacementMethod::closed_form:
            return "closed_form";
        case PlacementMethod::search_oracle:
            return "search_oracle";
        case PlacementMethod::fpa_baseline:
            return "fpa_baseline";
        }
        return "unknown";
    }

    struct PlacementResult
    {
        PositionVector positions;
        double achieved_gain; // kappa toward theta_b under MRT toward theta_p
        PlacementMethod method_tag;
    };

    // True iff every pair of antennas is at least lambda/2 apart (1e-12 slack)
    inline bool validate_spacing(std::span<const double> xs, double lambda)
    {
        std::vector<double> s(xs.begin(), xs.end());
        std::sort(s.begin(), s.end());
        for (std::size_t i = 1; i < s.size(); ++i)
            if (s[i] - s[i - 1] < lambda / 2.0 - 1e-12)
                return false;
        return true;
    }

    inline bool validate_spacing(const PositionVector &xs, double lambda)
    {
        return validate_spacing(xs.xs(), lambda);
    }

    /*!MD
    # optimal_ma_positions
    Closed-form antenna placement that attains the full beam gain N toward the BD while MRT keeps gain N
    toward the PU:

    x_n = (n - 1) lambda / |delta|,  n = 1..N

    The spacing lambda/|delta| always exceeds lambda/2 because |delta| < 2. Small |delta| widens the array.
    Any common translation of the result is also optimal; the canonical solution with x_1 = 0 is returned.
    MD!*/
    inline PlacementResult optimal_ma_positions(const Scene &scene)
    {
        const double delta = std::abs(scene.delta());
        if (delta < degenerate_delta_tol)
            throw degenerate_geometry("|delta| below tolerance, array aperture diverges");
        const double spacing = scene.wavelength() / delta;
        std::vector<double> xs(scene.num_antennas());
        for (std::size_t n = 0; n < xs.size(); ++n)
            xs[n] = static_cast<double>(n) * spacing;
        PositionVector pos(std::move(xs));
        const double gain = beam_gain(pos, scene.theta_p(), scene.theta_b(), scene.wavelength());
        return {std::move(pos), gain, PlacementMethod::closed_form};
    }

    // Half-wavelength uniform array starting at x_1 = lambda/2
    inline PositionVector fpa_positions(const Scene &scene)
    {
        std::vector<double> xs(scene.num_antennas());
        for (std::size_t n = 0; n < xs.size(); ++n)
            xs[n] = static_cast<double>(n + 1) * scene.wavelength() / 2.0;
        return PositionVector(std::move(xs));
    }

    inline PlacementResult fpa_placement(const Scene &scene)
    {
        auto pos = fpa_positions(scene);
        const double gain = beam_gain(pos, scene.theta_p(), scene.theta_b(), scene.wavelength());
        return {std::move(pos), gain, PlacementMethod::fpa_baseline};
    }

    struct OracleOptions
    {
        std::size_t passes = 3;
        double tol_wavelengths = 1e-6;    // golden-section tolerance in units of lambda
        std::optional<double> aperture_m; // default: (N-1) lambda/|delta| + lambda
    };

    namespace detail
    {
        // Uniform double in [0, 1) from the top 53 bits; identical on every platform
        inline double unit_uniform(std::mt19937_64 &rng)
        {
            return static_cast<double>(rng() >> 11) * 0x1.0p-53;
        }

        inline std::mt19937_64 sub_rng(std::uint64_t seed, std::uint64_t index)
        {
            std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                             static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
            return std::mt19937_64(sq);
        }

        // Sort, then push forward to d_min gaps and back inside [0, aperture]
        inline void repair_spacing(std::vector<double> &xs, double d_min, double aperture)
        {
            std::sort(xs.begin(), xs.end());
            xs.front() = std::max(xs.front(), 0.0);
            for (std::size_t i = 1; i < xs.size(); ++i)
                xs[i] = std::max(xs[i], xs[i - 1] + d_min);
            xs.back() = std::min(xs.back(), aperture);
            for (std::size_t i = xs.size() - 1; i-- > 0;)
                xs[i] = std::min(xs[i], xs[i + 1] - d_min);
        }

        // Maximise |s + exp(j k t)| over t in [lo, hi] by golden-section on segments short enough
        // to be unimodal, plus the segment endpoints.
        inline double refine_coordinate(complex s, double k, double lo, double hi, double seg_len, double tol)
        {
            auto f = [&](double t)
            { return std::abs(s + std::polar(1.0, k * t)); };
            constexpr double inv_phi = 0.6180339887498949;

            double best_t = lo, best_f = f(lo);
            if (f(hi) > best_f)
            {
                best_t = hi;
                best_f = f(hi);
            }
            const auto segments = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((hi - lo) / seg_len)));
            const double step = (hi - lo) / static_cast<double>(segments);
            for (std::size_t m = 0; m < segments; ++m)
            {
                double a = lo + static_cast<double>(m) * step;
                double b = (m + 1 == segments) ? hi : a + step;
                double c = b - inv_phi * (b - a);
                double d = a + inv_phi * (b - a);
                double fc = f(c), fd = f(d);
                while (b - a > tol)
                {
                    if (fc > fd)
                    {
                        b = d;
                        d = c;
                        fd = fc;
                        c = b - inv_phi * (b - a);
                        fc = f(c);
                    }
                    else
                    {
                        a = c;
                        c = d;
                        fc = fd;
                        d = a + inv_phi * (b - a);
                        fd = f(d);
                    }
                }
                const double t = 0.5 * (a + b);
                const double ft = f(t);
                if (ft > best_f)
                {
                    best_f = ft;
                    best_t = t;
                }
            }
            return best_t;
        }
    }

    /*!MD
    # search_oracle
    Independent numerical search for the placement problem, used to cross-check the closed form.

    ## Description:
    - Draws `budget` random position vectors inside the aperture `[0, A]` and repairs each to the
      lambda/2 spacing constraint.
    - Refines every start by coordinate-wise golden-section search on the beam gain toward theta_b,
      one antenna at a time with the others fixed, for `passes` sweeps.
    - Start `i` uses a generator seeded from `(seed, i)`; the best start wins, ties broken by the
      lexicographically smaller position vector. The result is a pure function of the inputs.

    ## Errors:
    - `std::invalid_argument` when `budget == 0`
    - `masr::infeasible_aperture` when `(N - 1) lambda/2 > A`
    MD!*/
    inline PlacementResult search_oracle(const Scene &scene, std::size_t budget, std::uint64_t seed,
                                         const OracleOptions &opt = {})
    {
        if (budget == 0)
            throw std::invalid_argument("search_oracle: budget must be at least 1");

        const std::size_t n = scene.num_antennas();
        const double lambda = scene.wavelength();
        const double delta = std::abs(scene.delta());
        const double d_min = scene.d_min();
        const double aperture = opt.aperture_m.value_or(static_cast<double>(n - 1) * lambda / delta + lambda);
        if (!(aperture >= 0.0) || static_cast<double>(n - 1) * d_min > aperture + 1e-12)
            throw infeasible_aperture("cannot place " + std::to_string(n) + " antennas at lambda/2 spacing within " +
                                      std::to_string(aperture) + " m");

        const double k = 2.0 * pi / lambda * delta;
        const double seg_len = 0.25 * lambda / delta;
        const double tol = opt.tol_wavelengths * lambda;

        std::vector<double> best;
        double best_gain = -1.0;
        std::vector<double> xs(n);

        for (std::size_t start = 0; start < budget; ++start)
        {
            auto rng = detail::sub_rng(seed, start);
            for (auto &x : xs)
                x = aperture * detail::unit_uniform(rng);
            detail::repair_spacing(xs, d_min, aperture);

            for (std::size_t pass = 0; pass < opt.passes; ++pass)
            {
                for (std::size_t i = 0; i < n; ++i)
                {
                    const double lo = (i == 0) ? 0.0 : xs[i - 1] + d_min;
                    const double hi = (i + 1 == n) ? aperture : xs[i + 1] - d_min;
                    if (!(hi > lo))
                        continue;
                    complex s{0.0, 0.0};
                    for (std::size_t m = 0; m < n; ++m)
                        if (m != i)
                            s += std::polar(1.0, k * xs[m]);
                    xs[i] = detail::refine_coordinate(s, k, lo, hi, seg_len, tol);
                }
            }

            const double gain = beam_gain_delta<double>(xs, delta, lambda);
            if (gain > best_gain || (gain == best_gain && xs < best))
            {
                best_gain = gain;
                best = xs;
            }
        }

        PositionVector pos(std::move(best));
        const double gain = beam_gain(pos, scene.theta_p(), scene.theta_b(), lambda);
        return {std::move(pos), gain, PlacementMethod::search_oracle};
    }
}
