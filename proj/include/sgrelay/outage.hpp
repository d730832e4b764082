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

#ifndef SGRELAY_OUTAGE_HPP
#define SGRELAY_OUTAGE_HPP

#include "sgrelay/channels.hpp"
#include "sgrelay/snr.hpp"

#include <span>
#include <vector>

namespace sgrelay
{
    // Linear SNR decoding threshold.
    struct ThresholdSpec
    {
        double eta_th = 1.0;
    };

    // eta_th = 2^{rate * bandwidth} - 1. Note the common textbook mapping is
    // 2^{R/B} - 1; this function does not use it.
    // Throws DomainError for rate * bandwidth > 1024.
    ThresholdSpec threshold_from_rate(double rate, double bandwidth);

    // Truncation of the d-series in the phase-only satellite-hop outage.
    struct SeriesTruncation
    {
        int d_max = 30;
        // Stop early once a term falls below tail_tol * |partial sum|;
        // 0 disables the adaptive stop.
        double tail_tol = 0.0;
    };

    // Probabilities may overshoot [0, 1] by at most this much before being
    // treated as a numerical error.
    inline constexpr double kProbabilitySlack = 1e-12;

    struct SeriesOutage
    {
        double probability = 0.0;
        int terms_used = 0;
        double last_term = 0.0;        // signed contribution of the last d
        bool truncation_warning = false; // last term above tail_tol * sum
    };

    struct OutageResult
    {
        double p_sr = 0.0;
        double p_rd = 0.0;
        double p_total = 0.0;
        int terms_used = 0;  // 0 for perfect CSI
        double renorm = 1.0; // FTR constant applied to p_rd
    };

    // P(rho (|h1|^2 + |h2|^2) <= eta).
    double outage_sr_perfect(const ScaledSRCoeffs &sc, double eta);

    // P((rho / 2)(|h1| + |h2|)^2 <= eta), series truncated per trunc.
    SeriesOutage outage_sr_imperfect(const ScaledSRCoeffs &sc, double eta, const SeriesTruncation &trunc = {});

    // P(rho |h_FTR|^2 <= eta), including the renormalization constant.
    double outage_ftr(const FTRCoeffs &coeffs, const LinkBudget &budget, double eta);

    // Evaluates outage_ftr on a nondecreasing grid and throws
    // NumericalError("non-monotone ...") on any decrease beyond 1e-12.
    std::vector<double> outage_ftr_curve(const FTRCoeffs &coeffs, const LinkBudget &budget, std::span<const double> etas);

    // p_sr + (1 - p_sr) p_rd; decode-and-forward, not symmetric in spirit.
    double total_outage(double p_sr, double p_rd);

    OutageResult evaluate_outage(const ScaledSRCoeffs &sc, CsiMode mode, const FTRCoeffs &ftr, const LinkBudget &rd_budget,
                                 double eta, const SeriesTruncation &trunc = {});

    // Clamps to [0, 1] within kProbabilitySlack; throws NumericalError beyond.
    double checked_probability(double p, const char *what);
}

#endif
