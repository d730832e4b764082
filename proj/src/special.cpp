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

#include "sgrelay/special.hpp"

#include "sgrelay/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace sgrelay::special
{
    namespace
    {
        constexpr double kEps = std::numeric_limits<double>::epsilon();
        constexpr int kMaxIter = 100000;

        // Series sum for P(a, x) without the prefactor x^a e^{-x} / Gamma(a+1).
        double lower_gamma_series(double a, double x)
        {
            double term = 1.0 / a;
            double sum = term;
            for (int n = 1; n < kMaxIter; ++n)
            {
                term *= x / (a + n);
                sum += term;
                if (std::fabs(term) < std::fabs(sum) * kEps)
                    return sum;
            }
            throw NumericalError("incomplete gamma series did not converge");
        }

        // Continued fraction for Q(a, x) without the prefactor x^a e^{-x} / Gamma(a).
        double upper_gamma_fraction(double a, double x)
        {
            constexpr double tiny = 1e-300;
            double b = x + 1.0 - a;
            double c = 1.0 / tiny;
            double d = 1.0 / b;
            double h = d;
            for (int i = 1; i < kMaxIter; ++i)
            {
                const double an = -i * (i - a);
                b += 2.0;
                d = an * d + b;
                if (std::fabs(d) < tiny)
                    d = tiny;
                c = b + an / c;
                if (std::fabs(c) < tiny)
                    c = tiny;
                d = 1.0 / d;
                const double delta = d * c;
                h *= delta;
                if (std::fabs(delta - 1.0) < kEps)
                    return h;
            }
            throw NumericalError("incomplete gamma continued fraction did not converge");
        }

        void check_gamma_args(double a, double x)
        {
            detail::require(a > 0.0, "incomplete gamma: a must be positive");
            detail::require(x >= 0.0, "incomplete gamma: x must be nonnegative");
        }
    }

    double pochhammer(double a, int k)
    {
        detail::require(k >= 0, "pochhammer: k must be nonnegative");
        double r = 1.0;
        for (int i = 0; i < k; ++i)
        {
            const double f = a + i;
            if (f == 0.0)
                return 0.0;
            r *= f;
        }
        return r;
    }

    double log_factorial(int n)
    {
        detail::require(n >= 0, "log_factorial: n must be nonnegative");
        return std::lgamma(n + 1.0);
    }

    double binomial(int n, int k)
    {
        detail::require(n >= 0 && k >= 0 && k <= n, "binomial: need 0 <= k <= n");
        return std::round(std::exp(log_factorial(n) - log_factorial(k) - log_factorial(n - k)));
    }

    double log_beta(double a, double b)
    {
        detail::require(a > 0.0 && b > 0.0, "beta: arguments must be positive");
        return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
    }

    double beta_fn(double a, double b)
    {
        return std::exp(log_beta(a, b));
    }

    double regularized_lower_gamma(double a, double x)
    {
        check_gamma_args(a, x);
        if (x == 0.0)
            return 0.0;
        const double log_pre = a * std::log(x) - x - std::lgamma(a);
        if (x < a + 1.0)
            return std::exp(log_pre + std::log(lower_gamma_series(a, x)));
        return 1.0 - std::exp(log_pre + std::log(upper_gamma_fraction(a, x)));
    }

    double log_lower_incomplete_gamma(double a, double x)
    {
        check_gamma_args(a, x);
        if (x == 0.0)
            return -std::numeric_limits<double>::infinity();
        const double log_pre = a * std::log(x) - x;
        if (x < a + 1.0)
            return log_pre + std::log(lower_gamma_series(a, x));
        // log Gamma(a) + log(1 - Q)
        const double q = std::exp(log_pre - std::lgamma(a) + std::log(upper_gamma_fraction(a, x)));
        return std::lgamma(a) + std::log1p(-q);
    }

    double lower_incomplete_gamma(double a, double x)
    {
        return std::exp(log_lower_incomplete_gamma(a, x));
    }

    double gamma_series_term(double a, int d, double x)
    {
        detail::require(a > 0.0 && d >= 0 && x >= 0.0, "gamma_series_term: invalid arguments");
        if (x == 0.0)
            return 0.0;
        return std::exp(std::lgamma(a) - std::lgamma(a + d + 1.0) + (a + d) * std::log(x) - x);
    }

    double confluent_1f1(int a, double z)
    {
        detail::require(std::isfinite(z), "confluent_1f1: z must be finite");
        double term = 1.0;
        double sum = 1.0;
        for (int k = 0; k < kConfluentTermCap; ++k)
        {
            // t_{k+1} / t_k = (a + k) z / (k + 1)^2
            term *= (a + k) * z / ((k + 1.0) * (k + 1.0));
            sum += term;
            if (term == 0.0 || std::fabs(term) <= 1e-14 * std::fabs(sum))
                return sum;
        }
        throw NumericalError("confluent_1f1: no convergence within " + std::to_string(kConfluentTermCap) +
                             " terms (z = " + std::to_string(z) + ")");
    }
}
