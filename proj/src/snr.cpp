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

#include "sgrelay/snr.hpp"

#include "sgrelay/detail/summation.hpp"
#include "sgrelay/errors.hpp"
#include "sgrelay/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace sgrelay
{
    namespace
    {
        constexpr double kNegInf = -std::numeric_limits<double>::infinity();

        double log_binomial(int n, int k)
        {
            return special::log_factorial(n) - special::log_factorial(k) - special::log_factorial(n - k);
        }

        // Shared quadruple sum behind the amplitude-sum and phase-only SNR
        // densities. Only b1 + b2 even contributes; the sign is + when both
        // are even and - when both are odd.
        //
        // log|term| = log_alpha[k1] + log_alpha[k2] + log C C + log 2
        //             - two_exp(k1 + k2, n) log 2 - a log beta + power(k1 + k2, n) log x
        //             - arg + log gamma(a, arg),  a = (n + 1) / 2
        template <typename TwoExp, typename Power>
        double quadruple_sum(std::span<const double> log_alpha, double beta, double x, double arg, TwoExp two_exp, Power power)
        {
            const int m = static_cast<int>(log_alpha.size());
            const int n_max = 4 * m;
            std::vector<double> log_gamma(n_max + 1, kNegInf);
            for (int n = 0; n <= n_max; n += 2)
                log_gamma[n] = special::log_lower_incomplete_gamma(0.5 * (n + 1), arg);

            const double lx = std::log(x);
            const double lb = std::log(beta);
            detail::CompensatedSum sum;
            for (int k1 = 0; k1 < m; ++k1)
            {
                if (log_alpha[k1] == kNegInf)
                    continue;
                for (int k2 = 0; k2 < m; ++k2)
                {
                    if (log_alpha[k2] == kNegInf)
                        continue;
                    const int s = k1 + k2;
                    const double base = log_alpha[k1] + log_alpha[k2] + std::numbers::ln2 - arg;
                    for (int b1 = 0; b1 <= 2 * k1 + 1; ++b1)
                    {
                        const double lc1 = log_binomial(2 * k1 + 1, b1);
                        for (int b2 = b1 % 2; b2 <= 2 * k2 + 1; b2 += 2)
                        {
                            const int n = b1 + b2;
                            const double a = 0.5 * (n + 1);
                            const double lt = base + lc1 + log_binomial(2 * k2 + 1, b2) - two_exp(s, n) * std::numbers::ln2 - a * lb +
                                              power(s, n) * lx + log_gamma[n];
                            const double t = std::exp(lt);
                            sum.add(b1 % 2 == 0 ? t : -t);
                        }
                    }
                }
            }
            return sum.value();
        }

        double nonnegative(double v, const char *what)
        {
            if (v < 0.0)
            {
                if (v < -1e-12)
                    throw NumericalError(std::string("negative density in ") + what + ": " + std::to_string(v));
                return 0.0;
            }
            return v;
        }
    }

    double to_db(double linear)
    {
        detail::require(linear > 0.0, "to_db: value must be positive");
        return 10.0 * std::log10(linear);
    }

    double from_db(double db)
    {
        return std::pow(10.0, db / 10.0);
    }

    LinkBudget LinkBudget::from_rho_db(double rho_db)
    {
        return LinkBudget{1.0, 1.0, 1.0 / from_db(rho_db)};
    }

    void LinkBudget::validate() const
    {
        detail::require(ps > 0.0 && gain > 0.0 && n0 > 0.0 && std::isfinite(rho_bar()),
                        "LinkBudget: ps, gain and n0 must be positive");
    }

    std::string_view to_string(CsiMode mode)
    {
        return mode == CsiMode::Perfect ? "perfect" : "phase-only";
    }

    CsiMode parse_csi_mode(std::string_view text)
    {
        if (text == "perfect")
            return CsiMode::Perfect;
        if (text == "phase-only")
            return CsiMode::PhaseOnly;
        throw ConfigError("unknown CSI mode '" + std::string(text) + "' (expected perfect or phase-only)");
    }

    ScaledSRCoeffs scale_coeffs(const SRCoeffs &coeffs, const LinkBudget &budget)
    {
        budget.validate();
        const double rho = budget.rho_bar();
        const double lr = std::log(rho);
        ScaledSRCoeffs sc;
        sc.rho_bar = rho;
        sc.beta_prime = coeffs.beta() / rho;
        const auto la = coeffs.log_alpha();
        for (std::size_t k = 0; k < la.size(); ++k)
        {
            const double l = (la[k] == kNegInf) ? kNegInf : la[k] - (k + 1.0) * lr;
            sc.log_alpha_prime.push_back(l);
            sc.alpha_prime.push_back(l == kNegInf ? 0.0 : std::exp(l));
        }
        return sc;
    }

    double relay_snr_pdf_perfect(const ScaledSRCoeffs &sc, double x)
    {
        detail::require(x >= 0.0, "relay_snr_pdf_perfect: x must be nonnegative");
        if (x == 0.0)
            return 0.0;
        const int m = sc.m();
        const double lx = std::log(x);
        double s = 0.0;
        for (int k1 = 0; k1 < m; ++k1)
        {
            for (int k2 = 0; k2 < m; ++k2)
            {
                if (sc.log_alpha_prime[k1] == kNegInf || sc.log_alpha_prime[k2] == kNegInf)
                    continue;
                s += std::exp(sc.log_alpha_prime[k1] + sc.log_alpha_prime[k2] + special::log_beta(k1 + 1.0, k2 + 1.0) +
                              (k1 + k2 + 1.0) * lx - sc.beta_prime * x);
            }
        }
        return s;
    }

    double amplitude_sum_pdf(const SRCoeffs &coeffs, double x)
    {
        detail::require(x >= 0.0, "amplitude_sum_pdf: x must be nonnegative");
        if (x == 0.0)
            return 0.0;
        const double beta = coeffs.beta();
        const double v = quadruple_sum(
            coeffs.log_alpha(), beta, x, 0.5 * beta * x * x,
            [](int s, int n) { return 2.0 * s + 1.0 - 0.5 * (n - 1); },
            [](int s, int n) { return 2.0 * s + 2.0 - n; });
        return nonnegative(v, "amplitude_sum_pdf");
    }

    double relay_snr_pdf_imperfect(const ScaledSRCoeffs &sc, double x)
    {
        detail::require(x >= 0.0, "relay_snr_pdf_imperfect: x must be nonnegative");
        if (x == 0.0)
            return 0.0;
        const double v = quadruple_sum(
            sc.log_alpha_prime, sc.beta_prime, x, sc.beta_prime * x,
            [](int s, int) { return s + 1.0; },
            [](int s, int n) { return s - 0.5 * (n - 1); });
        return nonnegative(v, "relay_snr_pdf_imperfect");
    }

    double relay_snr_pdf(const ScaledSRCoeffs &sc, CsiMode mode, double x)
    {
        return mode == CsiMode::Perfect ? relay_snr_pdf_perfect(sc, x) : relay_snr_pdf_imperfect(sc, x);
    }

    double destination_snr_pdf(const FTRCoeffs &coeffs, const LinkBudget &budget, double x)
    {
        budget.validate();
        detail::require(x >= 0.0, "destination_snr_pdf: x must be nonnegative");
        const double rho = budget.rho_bar();
        return ftr_power_pdf(coeffs, x / rho) / rho;
    }
}
