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

#ifndef SGRELAY_SPECIAL_HPP
#define SGRELAY_SPECIAL_HPP

// Scalar special functions used by the closed-form densities and outage
// expressions. All functions are pure and reentrant.

namespace sgrelay::special
{
    // Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
    // Exactly 0 when a is a nonpositive integer with |a| < k.
    double pochhammer(double a, int k);

    double log_factorial(int n);

    // Binomial coefficient C(n, k) for 0 <= k <= n, computed in log domain.
    double binomial(int n, int k);

    double log_beta(double a, double b);

    // B(a, b) = Gamma(a) Gamma(b) / Gamma(a+b); a, b > 0.
    double beta_fn(double a, double b);

    // Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
    // Power series for x < a + 1, Lentz continued fraction otherwise.
    double regularized_lower_gamma(double a, double x);

    // log gamma(a, x). Returns -inf at x = 0. Stays finite where gamma(a, x)
    // itself would underflow or overflow.
    double log_lower_incomplete_gamma(double a, double x);

    // gamma(a, x) = int_0^x t^{a-1} e^{-t} dt; a > 0, x >= 0.
    double lower_incomplete_gamma(double a, double x);

    // d-th term Gamma(a)/Gamma(a+d+1) x^{a+d} e^{-x} of the expansion
    // gamma(a, x) = sum_d ...; a > 0, d >= 0, x >= 0.
    double gamma_series_term(double a, int d, double x);

    // 1F1(a; 1; z) by direct power series sum_k (a)_k z^k / (k!)^2.
    // Stops at relative term size 1e-14; throws NumericalError after
    // kConfluentTermCap terms.
    inline constexpr int kConfluentTermCap = 10000;
    double confluent_1f1(int a, double z);
}

#endif
