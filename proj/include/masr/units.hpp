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
#include <numbers>
#include <stdexcept>

namespace masr
{
    inline constexpr double pi = std::numbers::pi;

    // Power conversion, 30 dBm = 1 W
    inline double dbm_to_watt(double p_dbm)
    {
        if (!std::isfinite(p_dbm))
            throw std::invalid_argument("dbm_to_watt: power in dBm must be finite");
        return std::pow(10.0, (p_dbm - 30.0) / 10.0);
    }

    inline double watt_to_dbm(double p_w)
    {
        if (!(p_w > 0.0) || !std::isfinite(p_w))
            throw std::invalid_argument("watt_to_dbm: power must be positive and finite");
        return 10.0 * std::log10(p_w) + 30.0;
    }
}
