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

#ifndef SGRELAY_CHANNELS_HPP
#define SGRELAY_CHANNELS_HPP

#include <span>
#include <vector>

namespace sgrelay
{
    // ---------------------------------------------------------------------
    // Shadowed-Rician (satellite hop)
    // ---------------------------------------------------------------------

    // h = zeta sqrt(omega) e^{j phi} + X + jY with zeta unit-power Nakagami-m,
    // phi ~ U[0, 2pi) and X, Y ~ N(0, sigma2).
    struct SRParams
    {
        int m = 1;            // Nakagami shape of the specular component
        double omega = 0.0;   // specular power
        double sigma2 = 0.5;  // per-dimension diffuse variance

        // omega + 2 sigma2 = 1.
        static SRParams unit_power(int m, double omega);

        double mean_power() const { return omega + 2.0 * sigma2; }

        // Throws DomainError on m < 1, omega < 0 or sigma2 <= 0.
        void validate() const;

        bool operator==(const SRParams &) const = default;
    };

    // f(x) = sum_{k<m} alpha_k x^k e^{-beta x}, density of |h|^2.
    class SRCoeffs
    {
    public:
        int m() const { return static_cast<int>(alpha_.size()); }
        std::span<const double> alpha() const { return alpha_; }
        // log alpha_k; -inf where alpha_k = 0 (omega = 0, k >= 1).
        std::span<const double> log_alpha() const { return log_alpha_; }
        double beta() const { return beta_; }

    private:
        friend SRCoeffs sr_coeffs(const SRParams &params);
        SRCoeffs(std::vector<double> alpha, std::vector<double> log_alpha, double beta);

        std::vector<double> alpha_;
        std::vector<double> log_alpha_;
        double beta_;
    };

    SRCoeffs sr_coeffs(const SRParams &params);

    double sr_power_pdf(const SRCoeffs &coeffs, double x);

    // A e^{-x/(2 sigma2)} 1F1(m; 1; B x). Validation oracle for sr_power_pdf.
    double sr_power_pdf_reference(const SRParams &params, double x);

    // ---------------------------------------------------------------------
    // Fluctuating Two-Ray (ground hop)
    // ---------------------------------------------------------------------

    // h = zeta V1 e^{j phi1} + zeta V2 e^{j phi2} + X + jY,
    // K = (V1^2 + V2^2) / (2 sigma2), delta = 2 V1 V2 / (V1^2 + V2^2).
    struct FTRParams
    {
        int m = 1;
        double k_ratio = 0.0;
        double delta = 0.0;
        double sigma2 = 0.5;

        // 2 sigma2 (K + 1) = 1.
        static FTRParams unit_power(int m, double k_ratio, double delta);

        double mean_power() const { return 2.0 * sigma2 * (k_ratio + 1.0); }

        void validate() const;

        bool operator==(const FTRParams &) const = default;
    };

    // Placement of the phase-difference nodes delta_i in the finite-sum FTR
    // density. The finite sum is a closed Newton-Cotes rule over the phase
    // difference of the two specular rays on 2M equispaced nodes, folded onto
    // i = 1..M by symmetry.
    enum class FtrNodeRule
    {
        // delta_i = Delta cos((i-1) pi / (2M-1)): equispaced phase nodes.
        Cosine,
        // delta_i = Delta cos((i-1) pi) / (2M-1) = +-Delta / (2M-1).
        // Integrates to one but does not reproduce the FTR distribution.
        Alternating,
    };

    // Raw coefficient arrays before mass verification. Indices are zero-based
    // in storage; alpha is laid out [i][j][b] with i < M, j < 2, b < m.
    struct FTRCoeffParts
    {
        int m = 1;
        int big_m = 1;
        std::vector<double> delta_i;   // M entries
        std::vector<double> poly_int;  // I for i = 1..M
        std::vector<double> weight;    // folded Newton-Cotes weight per i
        std::vector<double> alpha;     // M * 2 * m entries
        std::vector<double> beta;      // M * 2 entries
    };

    class FTRCoeffs
    {
    public:
        // Verifies total mass by adaptive quadrature. If |mass - 1| > 1e-6 the
        // renormalization constant 1/mass is applied, else it is exactly 1.
        explicit FTRCoeffs(FTRCoeffParts parts);

        int m() const { return parts_.m; }
        int big_m() const { return parts_.big_m; }
        std::span<const double> delta_i() const { return parts_.delta_i; }
        std::span<const double> poly_int() const { return parts_.poly_int; }
        std::span<const double> weight() const { return parts_.weight; }

        // i in 1..M, j in 1..2, b in 0..m-1.
        double alpha(int i, int j, int b) const;
        double beta(int i, int j) const;

        // Mass of the unnormalized finite sum and the constant c applied.
        double raw_mass() const { return raw_mass_; }
        double renorm() const { return renorm_; }

        // Unnormalized sum (no clamp).
        double raw_density(double x) const;

    private:
        FTRCoeffParts parts_;
        double raw_mass_ = 1.0;
        double renorm_ = 1.0;
    };

    inline constexpr double kRenormTolerance = 1e-6;
    inline constexpr double kNegativeDensityTolerance = 1e-12;

    // I = int_0^{2M-1} prod_{k=1..2M, k != i} (u - k + 1) du, exact rational
    // arithmetic then rounded to double. 1 <= i <= 2M.
    double poly_product_integral(int i, int big_m);

    FTRCoeffParts ftr_coeff_parts(const FTRParams &params, FtrNodeRule rule = FtrNodeRule::Cosine);

    FTRCoeffs ftr_coeffs(const FTRParams &params, FtrNodeRule rule = FtrNodeRule::Cosine);

    // c * sum alpha x^b e^{-beta x}. Values in (-1e-12, 0) clamp to 0; anything
    // lower throws NumericalError("negative density").
    double ftr_power_pdf(const FTRCoeffs &coeffs, double x);
}

#endif
