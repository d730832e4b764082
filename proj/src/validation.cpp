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

#include "sgrelay/validation.hpp"

#include "sgrelay/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

namespace sgrelay::cli
{
    namespace
    {
        constexpr double kInf = std::numeric_limits<double>::infinity();
        constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

        // Converged reference for the phase-only series.
        const SeriesTruncation kConvergedSeries{400, 1e-17};

        std::string fmt(double v)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3g", v);
            return buf;
        }

        std::vector<double> linspace(double lo, double hi, std::size_t n)
        {
            std::vector<double> v(n);
            for (std::size_t k = 0; k < n; ++k)
                v[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
            return v;
        }

        std::vector<double> logspace(double lo, double hi, std::size_t n)
        {
            std::vector<double> v = linspace(std::log10(lo), std::log10(hi), n);
            for (double &x : v)
                x = std::pow(10.0, x);
            return v;
        }

        // Sup distance between an empirical CDF and F on a dense grid,
        // counting both one-sided limits of the step function.
        double ks_on_grid(std::vector<double> samples, const std::function<double(double)> &cdf, double hi, std::size_t points)
        {
            std::sort(samples.begin(), samples.end());
            const double n = static_cast<double>(samples.size());
            double d = 0.0;
            for (double x : linspace(hi / static_cast<double>(points), hi, points))
            {
                const double f = cdf(x);
                const auto below = std::lower_bound(samples.begin(), samples.end(), x) - samples.begin();
                const auto upto = std::upper_bound(samples.begin(), samples.end(), x) - samples.begin();
                d = std::max({d, std::fabs(f - static_cast<double>(below) / n), std::fabs(f - static_cast<double>(upto) / n)});
            }
            return d;
        }

        class Runner
        {
        public:
            explicit Runner(ValidationReport &r) : report_(r) {}

            // value <= tol passes; exceptions fail with NaN.
            void upper(const std::string &name, double tol, const std::function<double()> &fn)
            {
                double v = kNaN;
                try
                {
                    v = fn();
                }
                catch (const std::exception &)
                {
                }
                report_.checks.push_back({name, std::isfinite(v) && v <= tol, v, fmt(tol)});
            }

            void predicate(const std::string &name, const std::string &tol, const std::function<std::pair<bool, double>()> &fn)
            {
                std::pair<bool, double> r{false, kNaN};
                try
                {
                    r = fn();
                }
                catch (const std::exception &)
                {
                }
                report_.checks.push_back({name, r.first, r.second, tol});
            }

        private:
            ValidationReport &report_;
        };
    }

    bool ValidationReport::all_pass() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
    }

    void ValidationReport::write(std::ostream &os) const
    {
        for (const Check &c : checks)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", c.value);
            os << "CHECK " << c.name << ' ' << (c.pass ? "PASS" : "FAIL") << ' ' << buf << ' ' << c.tolerance << '\n';
        }
        for (const Note &n : notes)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", n.value);
            os << "NOTE " << n.name << ' ' << buf << ' ' << n.detail << '\n';
        }
    }

    ValidationReport run_validation(const RunConfig &cfg, const ValidationOptions &opts)
    {
        cfg.validate();
        ValidationReport report;
        Runner run(report);

        const SRParams sr = cfg.sr_params();
        const SRCoeffs src = sr_coeffs(sr);
        const LinkBudget sr_budget = cfg.sr_budget.linear();
        const LinkBudget rd_budget = cfg.rd_budget.linear();
        const ScaledSRCoeffs sc = scale_coeffs(src, sr_budget);
        const double rho = sr_budget.rho_bar();

        // --- satellite hop densities -------------------------------------
        run.upper("sr_series_vs_hypergeometric", 1e-8, [&] {
            double worst = 0.0;
            for (double x : linspace(0.0, 20.0, 50))
            {
                const double ref = sr_power_pdf_reference(sr, x);
                worst = std::max(worst, std::fabs(sr_power_pdf(src, x) - ref) / ref);
            }
            return worst;
        });
        run.upper("sr_power_mass", 1e-7, [&] { return std::fabs(quadrature::integrate([&](double x) { return sr_power_pdf(src, x); }, 0.0, kInf) - 1.0); });
        run.upper("sr_power_mean", 1e-6, [&] {
            return std::fabs(quadrature::integrate([&](double x) { return x * sr_power_pdf(src, x); }, 0.0, kInf) - sr.mean_power());
        });
        run.upper("relay_perfect_mass", 1e-7,
                  [&] { return std::fabs(quadrature::integrate([&](double x) { return relay_snr_pdf_perfect(sc, x); }, 0.0, kInf) - 1.0); });
        run.upper("relay_perfect_mean", 1e-4, [&] {
            const double mean = quadrature::integrate([&](double x) { return x * relay_snr_pdf_perfect(sc, x); }, 0.0, kInf);
            return std::fabs(mean - 2.0 * rho * sr.mean_power()) / (2.0 * rho * sr.mean_power());
        });
        run.upper("relay_imperfect_mass", 1e-7,
                  [&] { return std::fabs(quadrature::integrate([&](double x) { return relay_snr_pdf_imperfect(sc, x); }, 0.0, kInf) - 1.0); });
        run.upper("amplitude_sum_mass", 1e-7,
                  [&] { return std::fabs(quadrature::integrate([&](double x) { return amplitude_sum_pdf(src, x); }, 0.0, kInf) - 1.0); });
        run.upper("imperfect_change_of_variables", 1e-8, [&] {
            double worst = 0.0;
            for (double x : linspace(0.05 * rho, 20.0 * rho, 50))
            {
                const double direct = relay_snr_pdf_imperfect(sc, x);
                const double via = amplitude_sum_pdf(src, std::sqrt(2.0 * x / rho)) / std::sqrt(2.0 * rho * x);
                if (via > 1e-250)
                    worst = std::max(worst, std::fabs(direct - via) / via);
            }
            return worst;
        });

        // --- ground hop ---------------------------------------------------
        std::optional<FTRCoeffs> ftr;
        try
        {
            ftr.emplace(opts.ftr_parts ? FTRCoeffs(*opts.ftr_parts) : ftr_coeffs(cfg.ftr_params(), cfg.ftr_nodes));
        }
        catch (const std::exception &)
        {
        }
        run.upper("ftr_mass_as_built", kRenormTolerance, [&] {
            if (!ftr)
                return kNaN;
            return std::fabs(ftr->raw_mass() - 1.0);
        });
        run.predicate("ftr_renorm_constant", "finite>0", [&] {
            if (!ftr)
                return std::pair{false, kNaN};
            return std::pair{std::isfinite(ftr->renorm()) && ftr->renorm() > 0.0, ftr->renorm()};
        });
        run.upper("ftr_mass_after_renorm", 1e-8, [&] {
            if (!ftr)
                return kNaN;
            return std::fabs(quadrature::integrate([&](double x) { return ftr_power_pdf(*ftr, x); }, 0.0, kInf) - 1.0);
        });

        // --- outage closed forms vs quadrature of their densities ---------
        const std::vector<double> etas{0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
        run.upper("outage_perfect_vs_quadrature", 1e-6, [&] {
            double worst = 0.0;
            for (double eta : etas)
            {
                const double q = quadrature::integrate([&](double x) { return relay_snr_pdf_perfect(sc, x); }, 0.0, eta);
                worst = std::max(worst, std::fabs(outage_sr_perfect(sc, eta) - q));
            }
            return worst;
        });
        double truncation_error = 0.0;
        run.upper("outage_imperfect_vs_quadrature", 1e-6, [&] {
            double worst = 0.0;
            for (double eta : etas)
            {
                const double q = quadrature::integrate([&](double x) { return relay_snr_pdf_imperfect(sc, x); }, 0.0, eta);
                const double converged = outage_sr_imperfect(sc, eta, kConvergedSeries).probability;
                worst = std::max(worst, std::fabs(converged - q));
                truncation_error = std::max(truncation_error, std::fabs(outage_sr_imperfect(sc, eta, cfg.series()).probability - q));
            }
            return worst;
        });
        report.notes.push_back({"outage_imperfect_truncation_error", truncation_error,
                                "d_max=" + std::to_string(cfg.truncation) + " eta=0.1..10"});
        run.upper("outage_ftr_vs_quadrature", 1e-6, [&] {
            if (!ftr)
                return kNaN;
            double worst = 0.0;
            for (double eta : etas)
            {
                const double q = quadrature::integrate([&](double x) { return destination_snr_pdf(*ftr, rd_budget, x); }, 0.0, eta);
                worst = std::max(worst, std::fabs(outage_ftr(*ftr, rd_budget, eta) - q));
            }
            return worst;
        });

        // --- ordering, monotonicity, limits -------------------------------
        const std::vector<double> grid = linspace(0.01 * rho, 20.0 * rho, 200);
        run.upper("stochastic_ordering", kProbabilitySlack, [&] {
            double worst = -kInf;
            for (double eta : grid)
                worst = std::max(worst, outage_sr_perfect(sc, eta) - outage_sr_imperfect(sc, eta, kConvergedSeries).probability);
            return std::max(worst, 0.0);
        });
        run.upper("cdf_monotone", 1e-12, [&] {
            double worst = 0.0;
            double prev_p = 0.0, prev_i = 0.0, prev_f = 0.0;
            for (double eta : grid)
            {
                const double p = outage_sr_perfect(sc, eta);
                const double i = outage_sr_imperfect(sc, eta, cfg.series()).probability;
                const double f = ftr ? outage_ftr(*ftr, rd_budget, eta) : kNaN;
                worst = std::max({worst, prev_p - p, prev_i - i, prev_f - f});
                prev_p = p;
                prev_i = i;
                prev_f = f;
            }
            return worst;
        });
        run.upper("outage_upper_limit", 1e-3, [&] {
            const double eta = 1e3 * rho;
            double gap = std::max(1.0 - outage_sr_perfect(sc, eta), 1.0 - outage_sr_imperfect(sc, eta, kConvergedSeries).probability);
            if (ftr)
                gap = std::max(gap, 1.0 - outage_ftr(*ftr, rd_budget, 1e3 * rd_budget.rho_bar()));
            return gap;
        });
        run.upper("densities_nonnegative", 0.0, [&] {
            double worst = 0.0;
            for (double x : logspace(1e-6, 1e3, 10000))
            {
                worst = std::max({worst, -sr_power_pdf(src, x), -relay_snr_pdf_perfect(sc, x), -relay_snr_pdf_imperfect(sc, x)});
                if (ftr)
                    worst = std::max(worst, -ftr_power_pdf(*ftr, x));
            }
            return worst;
        });

        // --- Monte Carlo distribution checks ------------------------------
        mc::SimConfig sim = cfg.sim_config();
        sim.n_samples = opts.mc_samples;
        sim.n_antennas = 2;
        const double ks_crit = 1.6276 / std::sqrt(static_cast<double>(sim.n_samples));
        const std::string ks_tol = fmt(ks_crit) + "(KS 1%)";
        const auto paired = mc::simulate_relay_snr_paired(sr, sr_budget, sim);
        run.predicate("relay_perfect_vs_mc_ks", ks_tol, [&] {
            const double d = ks_on_grid(paired.perfect, [&](double x) { return outage_sr_perfect(sc, x); }, 12.0 * rho, 1000);
            return std::pair{d <= ks_crit, d};
        });
        run.predicate("relay_imperfect_vs_mc_ks", ks_tol, [&] {
            const double d = ks_on_grid(
                paired.phase_only, [&](double x) { return outage_sr_imperfect(sc, x, kConvergedSeries).probability; }, 12.0 * rho, 1000);
            return std::pair{d <= ks_crit, d};
        });
        run.upper("paired_pathwise_dominance", 0.0, [&] {
            double violations = 0.0;
            for (std::size_t k = 0; k < paired.perfect.size(); ++k)
                violations += paired.phase_only[k] > paired.perfect[k] * (1.0 + 1e-15) ? 1.0 : 0.0;
            return violations;
        });
        run.predicate("ftr_vs_mc_ks", ks_tol, [&] {
            if (!ftr)
                return std::pair{false, kNaN};
            const auto samples = mc::simulate_destination_snr(cfg.ftr_params(), rd_budget, sim);
            const double d = ks_on_grid(samples, [&](double x) { return outage_ftr(*ftr, rd_budget, x); },
                                        12.0 * rd_budget.rho_bar() * cfg.ftr_params().mean_power(), 1000);
            return std::pair{d <= ks_crit, d};
        });

        return report;
    }
}
