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

#include "sgrelay/channels.hpp"

#include "sgrelay/detail/summation.hpp"
#include "sgrelay/errors.hpp"
#include "sgrelay/quadrature.hpp"
#include "sgrelay/special.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace sgrelay
{
    namespace
    {
        using boost::multiprecision::cpp_int;
        using boost::multiprecision::cpp_rational;

        constexpr double kNegInf = -std::numeric_limits<double>::infinity();

        cpp_int factorial(int n)
        {
            cpp_int r = 1;
            for (int k = 2; k <= n; ++k)
                r *= k;
            return r;
        }

        // Exact value of the product integral for node index i (1-based).
        cpp_rational exact_poly_integral(int i, int big_m)
        {
            const int nodes = 2 * big_m;
            // coefficients of prod_{k != i} (u - (k-1)), lowest degree first
            std::vector<cpp_int> poly{1};
            for (int k = 1; k <= nodes; ++k)
            {
                if (k == i)
                    continue;
                const cpp_int root = k - 1;
                std::vector<cpp_int> next(poly.size() + 1, 0);
                for (std::size_t p = 0; p < poly.size(); ++p)
                {
                    next[p + 1] += poly[p];
                    next[p] -= root * poly[p];
                }
                poly = std::move(next);
            }
            const cpp_int upper = nodes - 1;
            cpp_rational total = 0;
            cpp_int power = upper;
            for (std::size_t p = 0; p < poly.size(); ++p)
            {
                total += cpp_rational(poly[p] * power, cpp_int(p + 1));
                power *= upper;
            }
            return total;
        }

        cpp_rational exact_weight(int i, int big_m, const cpp_rational &integral)
        {
            const int nodes = 2 * big_m;
            const cpp_int denom = cpp_int(nodes - 1) * factorial(nodes - i) * factorial(i - 1);
            cpp_rational w = integral / cpp_rational(denom);
            return (i % 2 == 0) ? w : cpp_rational(-w);
        }

        double sum_exp_terms(std::span<const double> log_alpha, double beta, double x)
        {
            // all SR coefficients are nonnegative
            const double lx = std::log(x);
            double s = 0.0;
            for (std::size_t k = 0; k < log_alpha.size(); ++k)
            {
                if (log_alpha[k] == kNegInf)
                    continue;
                s += std::exp(log_alpha[k] + static_cast<double>(k) * lx - beta * x);
            }
            return s;
        }
    }

    // ---------------------------------------------------------------------

    SRParams SRParams::unit_power(int m, double omega)
    {
        SRParams p{m, omega, 0.5 * (1.0 - omega)};
        p.validate();
        return p;
    }

    void SRParams::validate() const
    {
        detail::require(m >= 1, "SR: m must be a positive integer");
        detail::require(omega >= 0.0 && std::isfinite(omega), "SR: omega must be nonnegative");
        detail::require(sigma2 > 0.0 && std::isfinite(sigma2), "SR: sigma2 must be positive");
    }

    SRCoeffs::SRCoeffs(std::vector<double> alpha, std::vector<double> log_alpha, double beta)
        : alpha_(std::move(alpha)), log_alpha_(std::move(log_alpha)), beta_(beta)
    {
    }

    SRCoeffs sr_coeffs(const SRParams &params)
    {
        params.validate();
        const int m = params.m;
        const double two_s2 = 2.0 * params.sigma2;
        const double scale = two_s2 * m + params.omega;

        std::vector<double> alpha(m), log_alpha(m);
        for (int k = 0; k < m; ++k)
        {
            if (k > 0 && params.omega == 0.0)
            {
                alpha[k] = 0.0;
                log_alpha[k] = kNegInf;
                continue;
            }
            // (-omega)^k (1-m)_k >= 0 for k < m
            const double poch = special::pochhammer(1.0 - m, k);
            const double la = m * std::log(static_cast<double>(m)) + detail::log_pow(params.omega, k) + std::log(std::fabs(poch)) -
                              (k - m + 1) * std::log(two_s2) - (k + m) * std::log(scale) - 2.0 * special::log_factorial(k);
            log_alpha[k] = la;
            alpha[k] = std::exp(la);
        }
        const double beta = two_s2 * m / (two_s2 * scale);
        return SRCoeffs(std::move(alpha), std::move(log_alpha), beta);
    }

    double sr_power_pdf(const SRCoeffs &coeffs, double x)
    {
        detail::require(x >= 0.0, "sr_power_pdf: x must be nonnegative");
        if (x == 0.0)
            return coeffs.alpha()[0];
        return sum_exp_terms(coeffs.log_alpha(), coeffs.beta(), x);
    }

    double sr_power_pdf_reference(const SRParams &params, double x)
    {
        params.validate();
        detail::require(x >= 0.0, "sr_power_pdf_reference: x must be nonnegative");
        const int m = params.m;
        const double two_s2 = 2.0 * params.sigma2;
        const double scale = two_s2 * m + params.omega;
        const double log_a = m * std::log(two_s2 * m) - std::log(two_s2) - m * std::log(scale);
        const double b = params.omega / (two_s2 * scale);
        const double f11 = special::confluent_1f1(m, b * x);
        return std::exp(log_a - x / two_s2 + std::log(f11));
    }

    // ---------------------------------------------------------------------

    FTRParams FTRParams::unit_power(int m, double k_ratio, double delta)
    {
        FTRParams p{m, k_ratio, delta, 0.5 / (k_ratio + 1.0)};
        p.validate();
        return p;
    }

    void FTRParams::validate() const
    {
        detail::require(m >= 1, "FTR: m must be a positive integer");
        detail::require(k_ratio >= 0.0 && std::isfinite(k_ratio), "FTR: K must be nonnegative");
        detail::require(delta >= 0.0 && delta <= 1.0, "FTR: Delta must lie in [0, 1]");
        detail::require(sigma2 > 0.0 && std::isfinite(sigma2), "FTR: sigma2 must be positive");
    }

    double poly_product_integral(int i, int big_m)
    {
        detail::require(big_m >= 1 && i >= 1 && i <= 2 * big_m, "poly_product_integral: need 1 <= i <= 2M");
        return exact_poly_integral(i, big_m).convert_to<double>();
    }

    FTRCoeffParts ftr_coeff_parts(const FTRParams &params, FtrNodeRule rule)
    {
        params.validate();
        const int m = params.m;
        const double K = params.k_ratio;
        const int big_m = static_cast<int>(std::ceil(K * params.delta)) + 1;
        const double power = params.mean_power();
        const double log_power = std::log(power);

        FTRCoeffParts parts;
        parts.m = m;
        parts.big_m = big_m;
        parts.delta_i.resize(big_m);
        parts.poly_int.resize(big_m);
        parts.weight.resize(big_m);
        parts.alpha.assign(static_cast<std::size_t>(big_m) * 2 * m, 0.0);
        parts.beta.assign(static_cast<std::size_t>(big_m) * 2, 0.0);

        const double span = 2.0 * big_m - 1.0;
        for (int i = 1; i <= big_m; ++i)
        {
            const double node = (rule == FtrNodeRule::Cosine)
                                    ? params.delta * std::cos((i - 1) * std::numbers::pi / span)
                                    : params.delta * std::cos((i - 1) * std::numbers::pi) / span;
            const cpp_rational integral = exact_poly_integral(i, big_m);
            const double w = exact_weight(i, big_m, integral).convert_to<double>();
            parts.delta_i[i - 1] = node;
            parts.poly_int[i - 1] = integral.convert_to<double>();
            parts.weight[i - 1] = w;

            for (int j = 1; j <= 2; ++j)
            {
                const double kj = K * (1.0 + (j % 2 == 0 ? 1.0 : -1.0) * node);
                const std::size_t ij = static_cast<std::size_t>(i - 1) * 2 + (j - 1);
                parts.beta[ij] = (K + 1.0) * m / (kj + m) / power;
                for (int b = 0; b < m; ++b)
                {
                    if (b > 0 && kj == 0.0)
                        continue;
                    const double la = m * std::log(static_cast<double>(m)) + (b + 1) * std::log(K + 1.0) + detail::log_pow(kj, b) +
                                      std::log(special::binomial(m - 1, b)) - (m + b) * std::log(kj + m) - special::log_factorial(b) -
                                      (b + 1) * log_power;
                    parts.alpha[ij * m + b] = w * std::exp(la);
                }
            }
        }
        return parts;
    }

    FTRCoeffs::FTRCoeffs(FTRCoeffParts parts) : parts_(std::move(parts))
    {
        detail::require(parts_.m >= 1 && parts_.big_m >= 1, "FTRCoeffs: invalid sizes");
        detail::require(parts_.alpha.size() == static_cast<std::size_t>(parts_.big_m) * 2 * parts_.m &&
                            parts_.beta.size() == static_cast<std::size_t>(parts_.big_m) * 2,
                        "FTRCoeffs: coefficient array sizes do not match (M, m)");
        for (double b : parts_.beta)
            detail::require(b > 0.0, "FTRCoeffs: beta must be positive");

        raw_mass_ = quadrature::integrate([this](double x) { return raw_density(x); }, 0.0,
                                          std::numeric_limits<double>::infinity());
        if (!(raw_mass_ > 0.0))
            throw NumericalError("FTR density has nonpositive total mass " + std::to_string(raw_mass_));
        renorm_ = (std::fabs(raw_mass_ - 1.0) <= kRenormTolerance) ? 1.0 : 1.0 / raw_mass_;
    }

    double FTRCoeffs::alpha(int i, int j, int b) const
    {
        detail::require(i >= 1 && i <= parts_.big_m && j >= 1 && j <= 2 && b >= 0 && b < parts_.m, "FTRCoeffs::alpha: index out of range");
        return parts_.alpha[(static_cast<std::size_t>(i - 1) * 2 + (j - 1)) * parts_.m + b];
    }

    double FTRCoeffs::beta(int i, int j) const
    {
        detail::require(i >= 1 && i <= parts_.big_m && j >= 1 && j <= 2, "FTRCoeffs::beta: index out of range");
        return parts_.beta[static_cast<std::size_t>(i - 1) * 2 + (j - 1)];
    }

    double FTRCoeffs::raw_density(double x) const
    {
        detail::CompensatedSum sum;
        const int m = parts_.m;
        for (std::size_t ij = 0; ij < parts_.beta.size(); ++ij)
        {
            const double e = std::exp(-parts_.beta[ij] * x);
            double xb = 1.0;
            for (int b = 0; b < m; ++b)
            {
                sum.add(parts_.alpha[ij * m + b] * xb * e);
                xb *= x;
            }
        }
        return sum.value();
    }

    FTRCoeffs ftr_coeffs(const FTRParams &params, FtrNodeRule rule)
    {
        return FTRCoeffs(ftr_coeff_parts(params, rule));
    }

    double ftr_power_pdf(const FTRCoeffs &coeffs, double x)
    {
        detail::require(x >= 0.0, "ftr_power_pdf: x must be nonnegative");
        const double v = coeffs.renorm() * coeffs.raw_density(x);
        if (v < 0.0)
        {
            if (v < -kNegativeDensityTolerance)
                throw NumericalError("negative density " + std::to_string(v) + " at x = " + std::to_string(x));
            return 0.0;
        }
        return v;
    }
}
