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

#ifndef SGRELAY_SNR_HPP
#define SGRELAY_SNR_HPP

#include "sgrelay/channels.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace sgrelay
{
    double to_db(double linear);
    double from_db(double db);

    // Per-hop power bundle. rho_bar = ps * gain / n0 (linear).
    struct LinkBudget
    {
        double ps = 1.0;
        double gain = 1.0;
        double n0 = 1.0;

        double rho_bar() const { return ps * gain / n0; }

        // ps = gain = 1, n0 chosen so that rho_bar equals the given dB value.
        static LinkBudget from_rho_db(double rho_db);

        void validate() const;

        bool operator==(const LinkBudget &) const = default;
    };

    // Precoding regime at the satellite.
    enum class CsiMode
    {
        Perfect,   // w = h* / norm: SNR = rho_bar * sum |h_i|^2
        PhaseOnly, // w = e^{-j theta} / sqrt(N): SNR = rho_bar / N * (sum |h_i|)^2
    };

    std::string_view to_string(CsiMode mode);
    // Accepts "perfect" and "phase-only"; throws ConfigError otherwise.
    CsiMode parse_csi_mode(std::string_view text);

    // Per-link SNR density sum_k alpha'_k x^k e^{-beta' x} with
    // alpha'_k = alpha_k / rho^{k+1} and beta' = beta / rho.
    struct ScaledSRCoeffs
    {
        std::vector<double> alpha_prime;
        std::vector<double> log_alpha_prime;
        double beta_prime = 1.0;
        double rho_bar = 1.0;

        int m() const { return static_cast<int>(alpha_prime.size()); }
    };

    ScaledSRCoeffs scale_coeffs(const SRCoeffs &coeffs, const LinkBudget &budget);

    // Density of rho (|h1|^2 + |h2|^2) for two i.i.d. SR links.
    double relay_snr_pdf_perfect(const ScaledSRCoeffs &sc, double x);

    // Density of h_t = |h1| + |h2| for two i.i.d. SR links.
    double amplitude_sum_pdf(const SRCoeffs &coeffs, double x);

    // Density of (rho / 2) h_t^2, the phase-only precoding SNR.
    double relay_snr_pdf_imperfect(const ScaledSRCoeffs &sc, double x);

    // Density of the ground-hop SNR rho |h_FTR|^2, including the FTR
    // renormalization constant.
    double destination_snr_pdf(const FTRCoeffs &coeffs, const LinkBudget &budget, double x);

    double relay_snr_pdf(const ScaledSRCoeffs &sc, CsiMode mode, double x);
}

#endif
