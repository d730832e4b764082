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

// Acceptance suite: one PASS/FAIL line per criterion, tolerances fixed below.
// Exit status is nonzero if any criterion fails.

#include "sgrelay/commands.hpp"
#include "sgrelay/montecarlo.hpp"
#include "sgrelay/outage.hpp"
#include "sgrelay/quadrature.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

using namespace sgrelay;

namespace
{
    // Tolerances
    constexpr double kMeanSnrTolDb = 0.05;
    constexpr double kMeanSnrRuntimeS = 60.0;
    constexpr double kStderrFactor = 3.0;
    constexpr double kIdentityRelTol = 1e-8;
    constexpr double kTruncationTol = 1e-6;
    constexpr double kMassTol = 1e-7;
    constexpr double kFtrMassTol = 1e-7;

    // Replication setup
    constexpr int kM = 5;
    constexpr double kOmega = 0.75;
    constexpr double kRhoDb = 1.0;
    constexpr std::uint64_t kSamples = 1'000'000;
    constexpr std::uint64_t kDiversitySamples = 10'000'000;
    constexpr double kDiversityEtaDb = 30.0;
    constexpr int kDmax = 30;

    // Target mean relay SNRs, compared as linear means.
    constexpr double kTargetPerfect = 2.51;
    constexpr double kTargetPhaseOnly = 2.35;

    int failures = 0;

    void report(int id, const char *name, bool pass, const std::string &detail)
    {
        std::printf("%s C%d %s: %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
        std::fflush(stdout);
        failures += pass ? 0 : 1;
    }

    void info(const std::string &text)
    {
        std::printf("  info: %s\n", text.c_str());
    }

    std::string fmt(const char *f, auto... args)
    {
        char buf[512];
        std::snprintf(buf, sizeof buf, f, args...);
        return buf;
    }

    std::vector<double> linspace(double lo, double hi, int n)
    {
        std::vector<double> v(n);
        for (int k = 0; k < n; ++k)
            v[k] = lo + (hi - lo) * k / (n - 1);
        return v;
    }

    double mean(const std::vector<double> &v)
    {
        return std::accumulate(v.begin(), v.end(), 0.0) / double(v.size());
    }

    mc::SimConfig sim(std::uint64_t n, int antennas = 2, std::uint64_t seed = 1)
    {
        mc::SimConfig c;
        c.n_samples = n;
        c.n_antennas = antennas;
        c.seed = seed;
        return c;
    }

    // |analytic - MC| within kStderrFactor standard errors. The larger of the
    // empirical and the analytic binomial stderr is used so that an estimate
    // of exactly 0 or 1 is not judged with a zero error bar.
    struct Agreement
    {
        double worst_z = 0.0;
        bool pass = true;

        void add(double analytic, const mc::EmpiricalEstimate &e)
        {
            const double se_null = std::sqrt(analytic * (1.0 - analytic) / double(e.n));
            const double se = std::max(e.std_error, se_null);
            const double diff = std::abs(analytic - e.value);
            const double z = se > 0.0 ? diff / se : (diff > 0.0 ? INFINITY : 0.0);
            worst_z = std::max(worst_z, z);
            pass = pass && z <= kStderrFactor;
        }
    };

    const SRParams kSr = SRParams::unit_power(kM, kOmega);
    const FTRParams kFtr = FTRParams::unit_power(5, 5.0, 0.9);
    const LinkBudget kBudget = LinkBudget::from_rho_db(kRhoDb);

    void criterion1()
    {
        const auto t0 = std::chrono::steady_clock::now();
        const auto paired = mc::simulate_relay_snr_paired(kSr, kBudget, sim(kSamples));
        const double mp = mean(paired.perfect), mi = mean(paired.phase_only);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        const double dp = to_db(mp) - to_db(kTargetPerfect);
        const double di = to_db(mi) - to_db(kTargetPhaseOnly);
        const bool pass = std::abs(dp) <= kMeanSnrTolDb && std::abs(di) <= kMeanSnrTolDb && secs < kMeanSnrRuntimeS;
        report(1, "mean_relay_snr", pass,
               fmt("perfect %.4f (%.3f dB, off %+.4f dB), phase-only %.4f (%.3f dB, off %+.4f dB), tol %.2f dB, %.2f s", mp,
                   to_db(mp), dp, mi, to_db(mi), di, kMeanSnrTolDb, secs));
        info(fmt("targets %.2f / %.2f taken as linear means; taken directly as dB values the offsets would be %+.3f / %+.3f dB",
                 kTargetPerfect, kTargetPhaseOnly, to_db(mp) - kTargetPerfect, to_db(mi) - kTargetPhaseOnly));
    }

    void criterion2()
    {
        const ScaledSRCoeffs sc = scale_coeffs(sr_coeffs(kSr), kBudget);
        const auto grid = linspace(-10.0, 15.0, 25);
        std::string detail;
        bool pass = true;
        for (CsiMode mode : {CsiMode::Perfect, CsiMode::PhaseOnly})
        {
            const auto s = mc::simulate_relay_snr(kSr, kBudget, mode, sim(kSamples));
            Agreement a;
            for (double db : grid)
            {
                const double eta = from_db(db);
                const double p = mode == CsiMode::Perfect ? outage_sr_perfect(sc, eta)
                                                          : outage_sr_imperfect(sc, eta, {kDmax, 0.0}).probability;
                a.add(p, mc::estimate_outage(s, eta));
            }
            pass = pass && a.pass;
            detail += fmt("%s max z %.2f; ", std::string(to_string(mode)).c_str(), a.worst_z);
        }
        report(2, "satellite_hop_closed_form_vs_mc", pass, detail + fmt("tol %.0f stderr, 25 points", kStderrFactor));
    }

    void criterion3()
    {
        double worst = 0.0;
        for (int m : {1, 2, 5})
            for (double omega : {0.0, 0.5, 0.9})
            {
                const SRParams p = SRParams::unit_power(m, omega);
                const SRCoeffs c = sr_coeffs(p);
                for (double x : linspace(0.0, 20.0, 50))
                {
                    const double a = sr_power_pdf(c, x), b = sr_power_pdf_reference(p, x);
                    const double rel = a == b ? 0.0 : std::abs(a - b) / std::max(std::abs(a), std::abs(b));
                    worst = std::max(worst, rel);
                }
            }
        report(3, "finite_series_vs_hypergeometric", worst <= kIdentityRelTol,
               fmt("max relative difference %.3g, tol %.0e", worst, kIdentityRelTol));
    }

    double truncation_error(const ScaledSRCoeffs &sc, int d_max, double *at_db)
    {
        double worst = 0.0;
        for (double db : linspace(-10.0, 15.0, 25))
        {
            const double eta = from_db(db);
            const double q = quadrature::integrate([&](double x) { return relay_snr_pdf_imperfect(sc, x); }, 0.0, eta, 1e-12);
            const double e = std::abs(outage_sr_imperfect(sc, eta, {d_max, 0.0}).probability - q);
            if (e > worst)
            {
                worst = e;
                *at_db = db;
            }
        }
        return worst;
    }

    void criterion4()
    {
        const ScaledSRCoeffs sc = scale_coeffs(sr_coeffs(kSr), kBudget);
        double at = 0, at60 = 0;
        const double e30 = truncation_error(sc, kDmax, &at);
        const double e60 = truncation_error(sc, 60, &at60);
        report(4, "phase_only_series_truncation", e30 <= kTruncationTol,
               fmt("d_max %d: max |series - quadrature| %.3g at %.2f dB, tol %.0e", kDmax, e30, at, kTruncationTol));
        info(fmt("same grid with d_max 60: %.3g", e60));
    }

    void criterion5()
    {
        const SRCoeffs c = sr_coeffs(kSr);
        const ScaledSRCoeffs sc = scale_coeffs(c, kBudget);
        const auto dev = [](const std::function<double(double)> &f) {
            return std::abs(quadrature::integrate(f, 0.0, INFINITY) - 1.0);
        };
        const double sr = dev([&](double x) { return sr_power_pdf(c, x); });
        const double rp = dev([&](double x) { return relay_snr_pdf_perfect(sc, x); });
        const double ri = dev([&](double x) { return relay_snr_pdf_imperfect(sc, x); });
        const double as = dev([&](double x) { return amplitude_sum_pdf(c, x); });
        const FTRCoeffs ftr = ftr_coeffs(kFtr);
        const double fm = dev([&](double x) { return ftr_power_pdf(ftr, x); });
        const bool pass = std::max({sr, rp, ri, as}) <= kMassTol && fm <= kFtrMassTol && std::isfinite(ftr.renorm());
        report(5, "normalization", pass,
               fmt("|mass - 1|: sr %.2g, relay perfect %.2g, relay phase-only %.2g, amplitude sum %.2g, ftr %.2g; "
                   "ftr raw mass %.15g, renorm c = %.17g; tol %.0e",
                   sr, rp, ri, as, fm, ftr.raw_mass(), ftr.renorm(), kMassTol));
    }

    void criterion6()
    {
        const ScaledSRCoeffs sc = scale_coeffs(sr_coeffs(kSr), kBudget);
        int ordered = 0, ordered60 = 0, points = 0;
        double worst_inversion = 0.0;
        for (double db : linspace(-10.0, 15.0, 25))
        {
            const double eta = from_db(db);
            const double pp = outage_sr_perfect(sc, eta);
            const double pi = outage_sr_imperfect(sc, eta, {kDmax, 0.0}).probability;
            ++points;
            ordered += pp <= pi + kProbabilitySlack;
            ordered60 += pp <= outage_sr_imperfect(sc, eta, {60, 0.0}).probability + kProbabilitySlack;
            worst_inversion = std::max(worst_inversion, pp - pi);
        }
        const auto paired = mc::simulate_relay_snr_paired(kSr, kBudget, sim(kSamples));
        std::size_t violations = 0;
        for (std::size_t k = 0; k < paired.perfect.size(); ++k)
            violations += paired.phase_only[k] > paired.perfect[k];
        report(6, "stochastic_ordering", ordered == points && violations == 0,
               fmt("analytic ordering holds at %d/%d points (d_max %d, slack %.0e); pathwise violations %zu of %zu", ordered, points, kDmax,
                   kProbabilitySlack, violations, paired.perfect.size()));
        if (ordered != points)
            info(fmt("largest inversion %.3g; with d_max 60 the ordering holds at %d/%d points", worst_inversion, ordered60, points));
    }

    void criterion7()
    {
        const ScaledSRCoeffs sc = scale_coeffs(sr_coeffs(kSr), kBudget);
        const FTRCoeffs ftr = ftr_coeffs(kFtr);
        std::string detail;
        bool pass = true;
        for (CsiMode mode : {CsiMode::Perfect, CsiMode::PhaseOnly})
        {
            const auto e2e = mc::simulate_end_to_end_snr(kSr, kFtr, kBudget, kBudget, mode, sim(kSamples));
            Agreement a;
            for (double db : linspace(-10.0, 10.0, 10))
            {
                const double eta = from_db(db);
                const OutageResult r = evaluate_outage(sc, mode, ftr, kBudget, eta, {kDmax, 0.0});
                a.add(r.p_total, mc::estimate_outage(e2e, eta));
            }
            pass = pass && a.pass;
            detail += fmt("%s max z %.2f; ", std::string(to_string(mode)).c_str(), a.worst_z);
        }
        report(7, "end_to_end_composition", pass, detail + fmt("tol %.0f stderr, 10 points", kStderrFactor));
    }

    // Least-squares slope of log10 outage against average SNR in dB.
    double outage_slope(const std::vector<double> &gains, double eta_db, const std::vector<double> &rho_db, bool *all_positive)
    {
        std::vector<double> y;
        for (double r : rho_db)
        {
            const double p = mc::estimate_outage(gains, from_db(eta_db - r)).value;
            *all_positive = *all_positive && p > 0.0;
            y.push_back(std::log10(std::max(p, 1e-300)));
        }
        const double mx = mean(rho_db), my = mean(y);
        double sxy = 0, sxx = 0;
        for (std::size_t k = 0; k < y.size(); ++k)
        {
            sxy += (rho_db[k] - mx) * (y[k] - my);
            sxx += (rho_db[k] - mx) * (rho_db[k] - mx);
        }
        return sxy / sxx;
    }

    void criterion8()
    {
        const auto rho = linspace(20.0, 35.0, 16);
        bool pass = true;
        std::string detail;
        for (CsiMode mode : {CsiMode::Perfect, CsiMode::PhaseOnly})
        {
            bool positive = true;
            // Unit average SNR gains; outage at rho is P(g <= eta / rho).
            const double s2 = outage_slope(mc::simulate_relay_snr(kSr, LinkBudget{}, mode, sim(kDiversitySamples, 2)),
                                           kDiversityEtaDb, rho, &positive);
            const double s4 = outage_slope(mc::simulate_relay_snr(kSr, LinkBudget{}, mode, sim(kDiversitySamples, 4)),
                                           kDiversityEtaDb, rho, &positive);
            pass = pass && positive && s4 < s2;
            detail += fmt("%s slope N=2 %.4f, N=4 %.4f per dB; ", std::string(to_string(mode)).c_str(), s2, s4);
        }
        report(8, "diversity_trend", pass,
               detail + fmt("eta %.0f dB, %llu samples", kDiversityEtaDb, static_cast<unsigned long long>(kDiversitySamples)));
    }

    void criterion9()
    {
        bool pass = true;
        std::string detail;
        for (CsiMode mode : {CsiMode::Perfect, CsiMode::PhaseOnly})
        {
            cli::RunConfig a;
            a.csi = mode;
            a.threads = 1;
            cli::RunConfig b = a;
            b.threads = 8;
            const std::string ca = cli::cmd_outage_sweep(a), cb = cli::cmd_outage_sweep(b);
            pass = pass && ca == cb;
            detail += fmt("%s %zu bytes %s; ", std::string(to_string(mode)).c_str(), ca.size(), ca == cb ? "identical" : "DIFFER");
        }
        report(9, "determinism", pass, detail + "1 vs 8 workers");
    }
}

int main()
{
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
