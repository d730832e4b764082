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

#ifndef SGRELAY_CONFIG_HPP
#define SGRELAY_CONFIG_HPP

#include "sgrelay/channels.hpp"
#include "sgrelay/montecarlo.hpp"
#include "sgrelay/outage.hpp"
#include "sgrelay/snr.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sgrelay::cli
{
    enum class SweepAxis
    {
        Threshold, // grid over eta (dB), fixed average SNRs
        Snr,       // grid over average SNR (dB) of both hops, fixed eta
    };

    std::string_view to_string(SweepAxis axis);
    SweepAxis parse_axis(std::string_view text);

    // User-facing budget: transmit power linear, gain and noise in dB.
    struct BudgetDb
    {
        double ps = 1.0;
        double gain_db = 0.0;
        double n0_db = -1.0;

        LinkBudget linear() const;
        double rho_db() const;

        bool operator==(const BudgetDb &) const = default;
    };

    // Experiment manifest. Defaults reproduce the reference setup: m = 5
    // unit-power satellite links with omega = 0.75, 1 dB per-link average SNR,
    // two antennas, and an FTR ground hop with m = 5, K = 5, Delta = 0.9.
    struct RunConfig
    {
        int sr_m = 5;
        double sr_omega = 0.75;
        double sr_sigma2 = 0.125;
        bool sr_normalize = true;

        int ftr_m = 5;
        double ftr_k = 5.0;
        double ftr_delta = 0.9;
        double ftr_sigma2 = 1.0 / 12.0;
        bool ftr_normalize = true;
        FtrNodeRule ftr_nodes = FtrNodeRule::Cosine;

        BudgetDb sr_budget;
        BudgetDb rd_budget;

        CsiMode csi = CsiMode::Perfect;
        int antennas = 2;

        SweepAxis axis = SweepAxis::Threshold;
        double grid_start = -10.0;
        double grid_stop = 15.0;
        double grid_step = 1.0;
        double threshold_db = 0.0; // eta for the snr axis

        bool mc = true;
        std::uint64_t samples = 1'000'000;
        std::uint64_t seed = 1;
        std::uint64_t chunk_size = 1u << 16;
        unsigned threads = 0;

        int truncation = 30;
        double tail_tol = 0.0;

        std::string out; // empty: stdout

        SRParams sr_params() const;
        FTRParams ftr_params() const;
        SeriesTruncation series() const { return {truncation, tail_tol}; }
        mc::SimConfig sim_config() const;

        // Grid values in dB: start, start + step, ... <= stop.
        std::vector<double> grid_db() const;

        // Re-validates every parameter; throws ConfigError.
        void validate() const;

        bool operator==(const RunConfig &) const = default;
    };

    // Flat "key = value" text with [sr] [ftr] [budget] [sweep] [mc] [run]
    // section headers; '#' starts a comment. Unknown keys are errors.
    RunConfig parse_config(std::string_view text, RunConfig base = {});
    RunConfig load_config(const std::string &path, RunConfig base = {});

    // Sets one "section.key" to a textual value.
    void set_config_value(RunConfig &cfg, std::string_view section, std::string_view key, std::string_view value);

    // Inverse of parse_config; doubles printed with 17 significant digits.
    std::string serialize_config(const RunConfig &cfg);
}

#endif
