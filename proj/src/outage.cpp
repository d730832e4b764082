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

#include "sgrelay/outage.hpp"

#include "sgrelay/detail/summation.hpp"
#include "sgrelay/errors.hpp"
#include "sgrelay/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace sgrelay
{
    namespace
    {
        constexpr double kNegInf = -std::numeric_limits<double>::infinity();

        double log_binomial(int n, int k)
        {
            return special::log_factorial(n) - special::log_factorial(k) - special::log_factorial(n - k);
        }

        void check_eta(double eta)
        {
            detail::require(eta >= 0.0 && !std::isnan(eta), "outage: eta must be nonnegative");
        }
    }

    double checked_probability(double p, const char *what)
    {
        if (std::isnan(p) || p < -kProbabilitySlack || p > 1.0 + kProbabilitySlack)
            throw NumericalError(std::string(what) + ": probability out of range: " + std::to_string(p));
        return std::clamp(p, 0.0, 1.0);
    }

    ThresholdSpec threshold_from_rate(double rate, double bandwidth)
    {
        detail::require(rate > 0.0 && bandwidth > 0.0, "threshold_from_rate: rate and bandwidth must be positive");
        const double exponent = rate * bandwidth;
        detail::require(exponent <= 1024.0, "threshold_from_rate: rate * bandwidth exceeds 1024 (threshold overflows)");
        return ThresholdSpec{exponent < 1.0 ? std::expm1(exponent * std::numbers::ln2) : std::exp2(exponent) - 1.0};
    }

    double outage_sr_perfect(const ScaledSRCoeffs &sc, double eta)
    {
        check_eta(eta);
        if (eta == 0.0)
            return 0.0;
        const int m = sc.m();
        const double y = sc.beta_prime * eta;
        const double lb = std::log(sc.beta_prime);
        detail::CompensatedSum sum;
        for (int k1 = 0; k1 < m; ++k1)
        {
            for (int k2 = 0; k2 < m; ++k2)
            {
                if (sc.log_alpha_prime[k1] == kNegInf || sc.log_alpha_prime[k2] == kNegInf)
                    continue;
                const double a = k1 + k2 + 2.0;
                sum.add(std::exp(sc.log_alpha_prime[k1] + sc.log_alpha_prime[k2] + special::log_beta(k1 + 1.0, k2 + 1.0) +
                                 special::log_lower_incomplete_gamma(a, y) - a * lb));
            }
        }
        return checked_probability(sum.value(), "outage_sr_perfect");
    }

    SeriesOutage outage_sr_imperfect(const ScaledSRCoeffs &sc, double eta, const SeriesTruncation &trunc)
    {
        check_eta(eta);
        detail::require(trunc.d_max >= 1, "SeriesTruncation: d_max must be at least 1");
        detail::require(trunc.tail_tol >= 0.0, "SeriesTruncation: tail_tol must be nonnegative");
        SeriesOutage out;
        if (eta == 0.0)
            return out;

        const int m = sc.m();
        const int s_max = 2 * m - 2;
        const int n_max = 4 * m;
        const double y = 2.0 * sc.beta_prime * eta;
        const double lb = std::log(sc.beta_prime);

        // Collapse the (k1, k2, b1, b2) sum onto s = k1 + k2 and n = b1 + b2:
        // everything else in a term depends only on (s, n, d).
        std::vector<detail::CompensatedSum> coef((s_max + 1) * (n_max + 1));
        for (int k1 = 0; k1 < m; ++k1)
        {
            if (sc.log_alpha_prime[k1] == kNegInf)
                continue;
            for (int k2 = 0; k2 < m; ++k2)
            {
                if (sc.log_alpha_prime[k2] == kNegInf)
                    continue;
                const double base = sc.log_alpha_prime[k1] + sc.log_alpha_prime[k2] + std::numbers::ln2;
                for (int b1 = 0; b1 <= 2 * k1 + 1; ++b1)
                {
                    for (int b2 = b1 % 2; b2 <= 2 * k2 + 1; b2 += 2)
                    {
                        const double t = std::exp(base + log_binomial(2 * k1 + 1, b1) + log_binomial(2 * k2 + 1, b2));
                        coef[(k1 + k2) * (n_max + 1) + b1 + b2].add(b1 % 2 == 0 ? t : -t);
                    }
                }
            }
        }

        detail::CompensatedSum total;
        for (int d = 0; d < trunc.d_max; ++d)
        {
            detail::CompensatedSum term;
            for (int s = 0; s <= s_max; ++s)
            {
                // gamma(s + d + 2, y) / (2^{2s+d+3} beta'^{s+2})
                const double lg = special::log_lower_incomplete_gamma(s + d + 2.0, y) - (2.0 * s + d + 3.0) * std::numbers::ln2 -
                                  (s + 2.0) * lb;
                for (int n = 0; n <= n_max; n += 2)
                {
                    const double c = coef[s * (n_max + 1) + n].value();
                    if (c == 0.0)
                        continue;
                    const double a = 0.5 * (n + 1);
                    const double ratio = std::lgamma(a) - std::lgamma(a + d + 1.0);
                    term.add(c * std::exp(lg + ratio));
                }
            }
            const double t = term.value();
            total.add(t);
            out.terms_used = d + 1;
            out.last_term = t;
            if (trunc.tail_tol > 0.0 && std::fabs(t) < trunc.tail_tol * std::fabs(total.value()))
                break;
        }
        out.truncation_warning = trunc.tail_tol > 0.0 && std::fabs(out.last_term) >= trunc.tail_tol * std::fabs(total.value());
        out.probability = checked_probability(total.value(), "outage_sr_imperfect");
        return out;
    }

    double outage_ftr(const FTRCoeffs &coeffs, const LinkBudget &budget, double eta)
    {
        check_eta(eta);
        budget.validate();
        if (eta == 0.0)
            return 0.0;
        const double rho = budget.rho_bar();
        detail::CompensatedSum sum;
        for (int i = 1; i <= coeffs.big_m(); ++i)
        {
            for (int j = 1; j <= 2; ++j)
            {
                const double beta_p = coeffs.beta(i, j) / rho;
                const double lb = std::log(beta_p);
                const double lg = std::log(rho);
                for (int b = 0; b < coeffs.m(); ++b)
                {
                    const double alpha = coeffs.alpha(i, j, b);
                    if (alpha == 0.0)
                        continue;
                    // alpha' / beta'^{b+1} gamma(b+1, beta' eta), alpha' = alpha / rho^{b+1}
                    const double mag = std::exp(std::log(std::fabs(alpha)) - (b + 1.0) * lg - (b + 1.0) * lb +
                                                special::log_lower_incomplete_gamma(b + 1.0, beta_p * eta));
                    sum.add(alpha > 0.0 ? mag : -mag);
                }
            }
        }
        return checked_probability(coeffs.renorm() * sum.value(), "outage_ftr");
    }

    std::vector<double> outage_ftr_curve(const FTRCoeffs &coeffs, const LinkBudget &budget, std::span<const double> etas)
    {
        std::vector<double> out;
        out.reserve(etas.size());
        for (std::size_t k = 0; k < etas.size(); ++k)
        {
            const double p = outage_ftr(coeffs, budget, etas[k]);
            if (k > 0 && etas[k] >= etas[k - 1] && p < out.back() - 1e-12)
                throw NumericalError("non-monotone FTR outage curve at eta = " + std::to_string(etas[k]));
            out.push_back(p);
        }
        return out;
    }

    double total_outage(double p_sr, double p_rd)
    {
        detail::require(p_sr >= 0.0 && p_sr <= 1.0 && p_rd >= 0.0 && p_rd <= 1.0, "total_outage: probabilities must lie in [0, 1]");
        return p_sr + (1.0 - p_sr) * p_rd;
    }

    OutageResult evaluate_outage(const ScaledSRCoeffs &sc, CsiMode mode, const FTRCoeffs &ftr, const LinkBudget &rd_budget,
                                 double eta, const SeriesTruncation &trunc)
    {
        OutageResult r;
        if (mode == CsiMode::Perfect)
        {
            r.p_sr = outage_sr_perfect(sc, eta);
        }
        else
        {
            const SeriesOutage s = outage_sr_imperfect(sc, eta, trunc);
            r.p_sr = s.probability;
            r.terms_used = s.terms_used;
        }
        r.p_rd = outage_ftr(ftr, rd_budget, eta);
        r.p_total = total_outage(r.p_sr, r.p_rd);
        r.renorm = ftr.renorm();
        return r;
    }
}
