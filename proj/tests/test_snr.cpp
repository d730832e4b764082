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

#include "catch_amalgamated.hpp"

#include "sgrelay/channels.hpp"
#include "sgrelay/errors.hpp"
#include "sgrelay/quadrature.hpp"
#include "sgrelay/snr.hpp"
#include "test_support.hpp"

#include <cmath>
#include <vector>

using namespace sgrelay;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    double mass(const std::function<double(double)> &f)
    {
        return quadrature::integrate(f, 0.0, INFINITY);
    }

    // Trapezoidal self-convolution of a density sampled on [0, L] with n
    // intervals; at(x) evaluates (f * f) at the nearest grid point.
    class GridConvolution
    {
    public:
        GridConvolution(const std::function<double(double)> &f, double length, std::size_t n) : h_(length / double(n)), v_(n + 1)
        {
            for (std::size_t k = 0; k <= n; ++k)
                v_[k] = f(double(k) * h_);
        }

        double at(double x) const
        {
            const std::size_t k = std::size_t(std::llround(x / h_));
            if (k == 0)
                return 0.0;
            double s = 0;
            for (std::size_t i = 0; i <= k; ++i)
                s += ((i == 0 || i == k) ? 0.5 : 1.0) * v_[i] * v_[k - i];
            return s * h_;
        }

    private:
        double h_;
        std::vector<double> v_;
    };
}

TEST_CASE("to_db and from_db - Round trip")
{
    CHECK(to_db(1.0) == 0.0);
    CHECK_THAT(from_db(10.0), WithinRel(10.0, 1e-15));
    CHECK_THAT(to_db(from_db(-7.3)), WithinRel(-7.3, 1e-14));
    CHECK_THROWS_AS(to_db(0.0), DomainError);
}

TEST_CASE("LinkBudget - Average SNR")
{
    CHECK(LinkBudget{2.0, 3.0, 0.5}.rho_bar() == 12.0);
    CHECK_THAT(LinkBudget::from_rho_db(1.0).rho_bar(), WithinRel(std::pow(10.0, 0.1), 1e-15));
    CHECK_THROWS_AS((LinkBudget{1.0, 1.0, 0.0}.validate()), DomainError);
    CHECK_THROWS_AS((LinkBudget{-1.0, 1.0, 1.0}.validate()), DomainError);
}

TEST_CASE("parse_csi_mode - Names")
{
    CHECK(parse_csi_mode("perfect") == CsiMode::Perfect);
    CHECK(parse_csi_mode("phase-only") == CsiMode::PhaseOnly);
    CHECK(to_string(CsiMode::PhaseOnly) == "phase-only");
    CHECK_THROWS_AS(parse_csi_mode("imperfect-ish"), ConfigError);
}

TEST_CASE("relay_snr_pdf_perfect - m = 1 gives Erlang-2")
{
    const ScaledSRCoeffs sc = scale_coeffs(sr_coeffs(SRParams{1, 0.0, 0.5}), LinkBudget{});
    for (double x : {0.0, 0.01, 0.5, 1.0, 3.0, 10.0})
        CHECK_THAT(relay_snr_pdf_perfect(sc, x), WithinAbs(x * std::exp(-x), 1e-15));

    // Scaled: rho = 4 -> (x / 16) e^{-x / 4}
    const ScaledSRCoeffs sc4 = scale_coeffs(sr_coeffs(SRParams{1, 0.0, 0.5}), LinkBudget{4.0, 1.0, 1.0});
    for (double x : {0.5, 4.0, 20.0})
        CHECK_THAT(relay_snr_pdf_perfect(sc4, x), WithinRel(x / 16.0 * std::exp(-x / 4.0), 1e-13));
}

TEST_CASE("relay_snr_pdf_perfect - Convolution oracle")
{
    const SRParams p = SRParams::unit_power(5, 0.75);
    const SRCoeffs c = sr_coeffs(p);
    const ScaledSRCoeffs sc = scale_coeffs(c, LinkBudget{});
    const GridConvolution conv([&](double x) { return sr_power_pdf(c, x); }, 16.0, 1u << 17);
    for (double x : {0.25, 0.75, 1.5, 2.5, 4.0, 6.0})
        CHECK_THAT(relay_snr_pdf_perfect(sc, x), WithinAbs(conv.at(x), 1e-7));
}

TEST_CASE("amplitude_sum_pdf - Convolution oracle")
{
    const SRParams p = SRParams::unit_power(3, 0.5);
    const SRCoeffs c = sr_coeffs(p);
    // Amplitude density 2a f_P(a^2)
    const auto fa = [&](double a) { return 2.0 * a * sr_power_pdf(c, a * a); };
    for (double s : {0.3, 1.0, 1.7, 2.4, 3.5})
    {
        const double ref = quadrature::integrate([&](double a) { return fa(a) * fa(s - a); }, 0.0, s);
        CHECK_THAT(amplitude_sum_pdf(c, s), WithinRel(ref, 1e-9));
    }
}

TEST_CASE("relay_snr_pdf_imperfect - Change of variables from amplitude sum")
{
    test_support::Lcg g(5);
    for (int trial = 0; trial < 10; ++trial)
    {
        const SRCoeffs c = sr_coeffs(SRParams::unit_power(g.integer(1, 8), g.uniform(0.0, 0.95)));
        const LinkBudget b = LinkBudget::from_rho_db(g.uniform(-5.0, 15.0));
        const ScaledSRCoeffs sc = scale_coeffs(c, b);
        const double rho = b.rho_bar();
        for (double x : {0.05, 0.4, 1.3, 3.0})
        {
            const double xr = x * rho;
            // y = rho s^2 / 2 -> s = sqrt(2 y / rho)
            const double s = std::sqrt(2.0 * xr / rho);
            const double ref = amplitude_sum_pdf(c, s) / std::sqrt(2.0 * rho * xr);
            CHECK_THAT(relay_snr_pdf_imperfect(sc, xr), WithinRel(ref, 1e-10));
        }
    }
}

TEST_CASE("relay_snr_pdf - Property: unit mass and exact means")
{
    test_support::Lcg g(8);
    for (int trial = 0; trial < 20; ++trial)
    {
        const SRParams p{g.integer(1, 10), g.uniform(0.0, 2.0), g.uniform(0.05, 1.0)};
        const SRCoeffs c = sr_coeffs(p);
        const LinkBudget b = LinkBudget::from_rho_db(g.uniform(-10.0, 20.0));
        const ScaledSRCoeffs sc = scale_coeffs(c, b);
        const double rho = b.rho_bar();

        CHECK_THAT(mass([&](double x) { return relay_snr_pdf_perfect(sc, x); }), WithinAbs(1.0, 1e-9));
        CHECK_THAT(mass([&](double x) { return relay_snr_pdf_imperfect(sc, x); }), WithinAbs(1.0, 1e-9));
        CHECK_THAT(mass([&](double x) { return amplitude_sum_pdf(c, x); }), WithinAbs(1.0, 1e-9));

        // E[perfect] = 2 rho P; E[phase-only] = rho (P + E[A]^2)
        const double ea = mass([&](double x) { return std::sqrt(x) * sr_power_pdf(c, x); });
        const double mp = mass([&](double x) { return x * relay_snr_pdf_perfect(sc, x); });
        const double mi = mass([&](double x) { return x * relay_snr_pdf_imperfect(sc, x); });
        CHECK_THAT(mp, WithinRel(2.0 * rho * p.mean_power(), 1e-8));
        CHECK_THAT(mi, WithinRel(rho * (p.mean_power() + ea * ea), 1e-8));
        CHECK(mi <= mp);
    }
}

TEST_CASE("relay_snr_pdf - Property: densities nonnegative")
{
    test_support::Lcg g(9);
    for (int trial = 0; trial < 20; ++trial)
    {
        const ScaledSRCoeffs sc = scale_coeffs(sr_coeffs(SRParams{g.integer(1, 12), g.uniform(0.0, 3.0), g.uniform(0.02, 1.0)}),
                                               LinkBudget::from_rho_db(g.uniform(-10.0, 30.0)));
        for (double lx = -6.0; lx <= 4.0; lx += 0.05)
        {
            const double x = std::pow(10.0, lx);
            REQUIRE(relay_snr_pdf_perfect(sc, x) >= 0.0);
            REQUIRE(relay_snr_pdf_imperfect(sc, x) >= 0.0);
        }
    }
}

TEST_CASE("relay_snr_pdf - Dispatch and origin")
{
    const ScaledSRCoeffs sc = scale_coeffs(sr_coeffs(SRParams::unit_power(5, 0.75)), LinkBudget::from_rho_db(1.0));
    CHECK(relay_snr_pdf(sc, CsiMode::Perfect, 1.2) == relay_snr_pdf_perfect(sc, 1.2));
    CHECK(relay_snr_pdf(sc, CsiMode::PhaseOnly, 1.2) == relay_snr_pdf_imperfect(sc, 1.2));
    CHECK(relay_snr_pdf_perfect(sc, 0.0) == 0.0);
    CHECK(relay_snr_pdf_imperfect(sc, 0.0) == 0.0);
    CHECK_THROWS_AS(relay_snr_pdf_perfect(sc, -1.0), DomainError);
}

TEST_CASE("destination_snr_pdf - Scaling and mass")
{
    const FTRCoeffs c = ftr_coeffs(FTRParams::unit_power(5, 5.0, 0.9));
    const LinkBudget b = LinkBudget::from_rho_db(6.0);
    const double rho = b.rho_bar();
    for (double x : {0.3, 2.0, 5.0})
        CHECK_THAT(destination_snr_pdf(c, b, x), WithinRel(ftr_power_pdf(c, x / rho) / rho, 1e-15));
    CHECK_THAT(mass([&](double x) { return destination_snr_pdf(c, b, x); }), WithinAbs(1.0, 1e-9));
}

TEST_CASE("scale_coeffs - Identity and exponential scaling")
{
    const SRCoeffs c = sr_coeffs(SRParams::unit_power(5, 0.75));
    const ScaledSRCoeffs one = scale_coeffs(c, LinkBudget{});
    CHECK(one.beta_prime == c.beta());
    for (int k = 0; k < 5; ++k)
        CHECK_THAT(one.alpha_prime[k], WithinRel(c.alpha()[k], 1e-15));

    // m = 1, rho = 2: rate halves, mean doubles
    const SRCoeffs e = sr_coeffs(SRParams{1, 0.0, 0.5});
    const ScaledSRCoeffs two = scale_coeffs(e, LinkBudget{2.0, 1.0, 1.0});
    CHECK_THAT(two.beta_prime, WithinRel(0.5, 1e-15));
    CHECK_THAT(two.alpha_prime[0], WithinRel(0.5, 1e-15));

    const ScaledSRCoeffs db1 = scale_coeffs(c, LinkBudget::from_rho_db(1.0));
    CHECK_THAT(mass([&](double x) { return relay_snr_pdf_perfect(db1, x); }), WithinAbs(1.0, 1e-8));
}

TEST_CASE("relay_snr_pdf_perfect - Erlang-2 at non-unit power")
{
    const SRParams p{1, 0.7, 0.4};
    const double beta = 1.0 / (2 * p.sigma2 + p.omega);
    const ScaledSRCoeffs sc = scale_coeffs(sr_coeffs(p), LinkBudget{});
    for (double x : {0.1, 1.0, 2.5, 7.0})
        CHECK_THAT(relay_snr_pdf_perfect(sc, x), WithinRel(beta * beta * x * std::exp(-beta * x), 1e-13));
}

TEST_CASE("relay_snr_pdf_perfect - Grid convolution sup norm")
{
    const SRCoeffs c = sr_coeffs(SRParams::unit_power(5, 0.75));
    const ScaledSRCoeffs sc = scale_coeffs(c, LinkBudget{});
    const GridConvolution conv([&](double x) { return sr_power_pdf(c, x); }, 16.0, 1u << 16);
    double worst = 0;
    for (double x = 0.0; x <= 8.0; x += 1.0 / 32.0)
        worst = std::max(worst, std::abs(relay_snr_pdf_perfect(sc, x) - conv.at(x)));
    CHECK(worst <= 1e-6);
}

TEST_CASE("amplitude_sum_pdf - Rayleigh grid convolution sup norm")
{
    const SRCoeffs c = sr_coeffs(SRParams{1, 0.0, 0.5});
    const GridConvolution conv([&](double a) { return 2.0 * a * sr_power_pdf(c, a * a); }, 16.0, 1u << 16);
    double worst = 0;
    for (double s = 0.0; s <= 10.0; s += 1.0 / 32.0)
        worst = std::max(worst, std::abs(amplitude_sum_pdf(c, s) - conv.at(s)));
    CHECK(worst <= 1e-6);
    CHECK(amplitude_sum_pdf(c, 0.0) == 0.0);
}

TEST_CASE("relay_snr_pdf_imperfect - m = 1 transform and masses")
{
    const SRCoeffs c = sr_coeffs(SRParams{1, 0.0, 0.5});
    const ScaledSRCoeffs sc = scale_coeffs(c, LinkBudget{});
    for (double x = 0.05; x <= 6.0; x += 0.05)
    {
        const double s = std::sqrt(2.0 * x);
        CHECK_THAT(relay_snr_pdf_imperfect(sc, x), WithinRel(amplitude_sum_pdf(c, s) / std::sqrt(2.0 * x), 1e-8));
    }
    for (int m : {1, 2, 5})
    {
        const ScaledSRCoeffs s5 = scale_coeffs(sr_coeffs(SRParams::unit_power(m, 0.75)), LinkBudget::from_rho_db(1.0));
        CHECK_THAT(mass([&](double x) { return relay_snr_pdf_imperfect(s5, x); }), WithinAbs(1.0, 1e-7));
    }
}

TEST_CASE("destination_snr_pdf - Unit budget and Rayleigh limit")
{
    const FTRCoeffs c = ftr_coeffs(FTRParams::unit_power(5, 5.0, 0.9));
    for (double x : {0.1, 0.9, 2.2})
        CHECK(destination_snr_pdf(c, LinkBudget{}, x) == ftr_power_pdf(c, x));

    const FTRCoeffs r = ftr_coeffs(FTRParams{2, 0.0, 0.4, 0.5});
    const LinkBudget b = LinkBudget::from_rho_db(7.0);
    const double rho = b.rho_bar();
    for (double x : {0.5, 3.0, 12.0})
        CHECK_THAT(destination_snr_pdf(r, b, x), WithinRel(std::exp(-x / rho) / rho, 1e-12));
    CHECK_THAT(mass([&](double x) { return destination_snr_pdf(r, b, x); }), WithinAbs(1.0, 1e-7));
}
