// SPDX-License-Identifier: Apache-2.0
//
// sgrelay: outage analysis for satellite downlinks with ground relaying
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

#ifndef SGRELAY_COMMANDS_HPP
#define SGRELAY_COMMANDS_HPP

#include "sgrelay/config.hpp"
#include "sgrelay/validation.hpp"

#include <ostream>
#include <string>

namespace sgrelay::cli
{
    // Process exit codes.
    inline constexpr int kExitOk = 0;
    inline constexpr int kExitValidationFailed = 1;
    inline constexpr int kExitConfigError = 2;
    inline constexpr int kExitNumerical = 3;

    // Marker written to analytic_status when no closed form exists (N != 2).
    inline constexpr const char *kSimulationOnly = "simulation-only";
    inline constexpr const char *kClosedForm = "closed-form";

    // Relay SNR densities on the grid (dB -> linear):
    // snr_linear,pdf_perfect_analytic,pdf_imperfect_analytic[,pdf_perfect_mc,pdf_imperfect_mc]
    std::string cmd_pdf(const RunConfig &cfg);

    // One row per grid point with closed-form and (optionally) Monte Carlo
    // relay, destination and end-to-end outage.
    std::string cmd_outage_sweep(const RunConfig &cfg);

    // Coefficient dump with FTR mass and renormalization diagnostics.
    std::string cmd_coeffs(const RunConfig &cfg);

    ValidationReport cmd_validate(const RunConfig &cfg);

    // Formats a double for CSV: 17 significant digits.
    std::string csv_number(double v);
}

#endif
