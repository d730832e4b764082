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

#ifndef SGRELAY_VALIDATION_HPP
#define SGRELAY_VALIDATION_HPP

#include "sgrelay/config.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace sgrelay::cli
{
    struct Check
    {
        std::string name;
        bool pass = false;
        double value = 0.0;
        std::string tolerance;
    };

    // Informational line, never gating (e.g. truncation error at the
    // configured series length).
    struct Note
    {
        std::string name;
        double value = 0.0;
        std::string detail;
    };

    struct ValidationReport
    {
        std::vector<Check> checks;
        std::vector<Note> notes;

        bool all_pass() const;
        // "CHECK name PASS|FAIL value tolerance" per check, then "NOTE ..." lines.
        void write(std::ostream &os) const;
    };

    struct ValidationOptions
    {
        // Replaces the FTR coefficients built from the config (mutation tests).
        std::optional<FTRCoeffParts> ftr_parts;
        // Monte Carlo sample count for the distribution checks.
        std::uint64_t mc_samples = 200'000;
    };

    ValidationReport run_validation(const RunConfig &cfg, const ValidationOptions &opts = {});
}

#endif
