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

#include <stdexcept>
#include <string>

namespace masr
{
    // Steering directions that cannot be separated (cos(theta_p) == cos(theta_b)),
    // or coincident PU/BD nodes.
    class degenerate_geometry : public std::domain_error
    {
    public:
        explicit degenerate_geometry(const std::string &what)
            : std::domain_error("degenerate geometry: " + what) {}
    };

    // The search aperture cannot hold N antennas at the minimum spacing.
    class infeasible_aperture : public std::domain_error
    {
    public:
        explicit infeasible_aperture(const std::string &what)
            : std::domain_error("infeasible aperture: " + what) {}
    };
}
