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

#include "sgrelay/commands.hpp"

#include "sgrelay/errors.hpp"
#include "sgrelay/montecarlo.hpp"
#include "sgrelay/outage.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace sgrelay::cli
{
    namespace
    {
        // Closed forms for the relay hop exist for two antennas only.
        bool has_relay_closed_form(const RunConfig &cfg)
        {
            return cfg.antennas == 2;
        }

        void check_monotone(const std::vector<double> &v, bool increasing, const char *what)
        {
            for (std::size_t k = 1; k < v.size(); ++k)
            {
                const double step = increasing ? v[k] - v[k - 1] : v[k - 1] - v[k];
                if (step < -1e-12)
                    throw NumericalError(std::string("non-monotone ") + what + " at grid index " + std::to_string(k));
            }
        }

        std::vector<double> bin_edges(const std::vector<double> &x)
        {
            std::vector<double> e(x.size() + 1);
            if (x.size() == 1)
            {
                e[0] = 0.95 * x[0];
                e[1] = 1.05 * x[0];
                return e;
            }
            for (std::size_t k = 1; k < x.size(); ++k)
                e[k] = 0.5 * (x[k - 1] + x[k]);
            e.front() = std::max(0.0, x[0] - 0.5 * (x[1] - x[0]));
            e.back() = x.back() + 0.5 * (x.back() - x[x.size() - 2]);
            return e;
        }

        struct Row
        {
            std::vector<std::string> cells;

            void add(double v) { cells.push_back(csv_number(v)); }
            void add(const std::string &s) { cells.push_back(s); }
            void empty() { cells.emplace_back(); }
        };

        void write_row(std::ostringstream &os, const std::vector<std::string> &cells)
        {
            for (std::size_t k = 0; k < cells.size(); ++k)
            {
                if (k)
                    os << ',';
                os << cells[k];
            }
            os << '\n';
        }
    }

    std::string csv_number(double v)
    {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }

    std::string cmd_pdf(const RunConfig &cfg)
    {
        cfg.validate();
        const SRParams sr = cfg.sr_params();
        const LinkBudget budget = cfg.sr_budget.linear();
        const ScaledSRCoeffs sc = scale_coeffs(sr_coeffs(sr), budget);
        const bool analytic = has_relay_closed_form(cfg);

        std::vector<double> x;
        for (double db : cfg.grid_db())
            x.push_back(from_db(db));

        mc::Histogram h_perfect, h_phase;
        if (cfg.mc)
        {
            const auto paired = mc::simulate_relay_snr_paired(sr, budget, cfg.sim_config());
            const mc::BinSpec bins{bin_edges(x)};
            h_perfect = mc::estimate_pdf_histogram(paired.perfect, bins);
            h_phase = mc::estimate_pdf_histogram(paired.phase_only, bins);
        }

        std::ostringstream os;
        std::vector<std::string> header{"snr_linear", "pdf_perfect_analytic", "pdf_imperfect_analytic"};
        if (cfg.mc)
        {
            header.emplace_back("pdf_perfect_mc");
            header.emplace_back("pdf_imperfect_mc");
        }
        write_row(os, header);
        for (std::size_t k = 0; k < x.size(); ++k)
        {
            Row r;
            r.add(x[k]);
            if (analytic)
            {
                r.add(relay_snr_pdf_perfect(sc, x[k]));
                r.add(relay_snr_pdf_imperfect(sc, x[k]));
            }
            else
            {
                r.empty();
                r.empty();
            }
            if (cfg.mc)
            {
                r.add(h_perfect.density[k]);
                r.add(h_phase.density[k]);
            }
            write_row(os, r.cells);
        }
        return os.str();
    }

    std::string cmd_outage_sweep(const RunConfig &cfg)
    {
        cfg.validate();
        const SRParams sr = cfg.sr_params();
        const FTRParams ftr_params = cfg.ftr_params();
        const SRCoeffs src = sr_coeffs(sr);
        const FTRCoeffs ftr = ftr_coeffs(ftr_params, cfg.ftr_nodes);
        const bool analytic = has_relay_closed_form(cfg);
        const bool threshold_axis = cfg.axis == SweepAxis::Threshold;
        const std::vector<double> grid = cfg.grid_db();

        // Per grid point: eta and both average SNRs.
        struct Point
        {
            double eta, sr_rho_db, rd_rho_db;
        };
        std::vector<Point> points;
        for (double g : grid)
        {
            if (threshold_axis)
                points.push_back({from_db(g), cfg.sr_budget.rho_db(), cfg.rd_budget.rho_db()});
            else
                points.push_back({from_db(cfg.threshold_db), g, g});
        }

        std::vector<double> p_sr(points.size()), p_rd(points.size()), p_tot(points.size());
        std::vector<int> terms(points.size(), 0);
        for (std::size_t k = 0; k < points.size(); ++k)
        {
            const LinkBudget sb = threshold_axis ? cfg.sr_budget.linear() : LinkBudget::from_rho_db(points[k].sr_rho_db);
            const LinkBudget rb = threshold_axis ? cfg.rd_budget.linear() : LinkBudget::from_rho_db(points[k].rd_rho_db);
            p_rd[k] = outage_ftr(ftr, rb, points[k].eta);
            if (analytic)
            {
                const OutageResult r = evaluate_outage(scale_coeffs(src, sb), cfg.csi, ftr, rb, points[k].eta, cfg.series());
                p_sr[k] = r.p_sr;
                p_tot[k] = r.p_total;
                terms[k] = r.terms_used;
            }
        }
        check_monotone(p_rd, threshold_axis, "destination outage");
        if (analytic)
        {
            check_monotone(p_sr, threshold_axis, "relay outage");
            check_monotone(p_tot, threshold_axis, "total outage");
        }

        // Monte Carlo: hop SNRs sampled once. On the snr axis the samples are
        // unit-average-SNR channel gains compared against eta / rho.
        std::vector<double> relay, dest, e2e;
        if (cfg.mc)
        {
            const mc::SimConfig sim = cfg.sim_config();
            const LinkBudget sb = threshold_axis ? cfg.sr_budget.linear() : LinkBudget{};
            const LinkBudget rb = threshold_axis ? cfg.rd_budget.linear() : LinkBudget{};
            relay = mc::simulate_relay_snr(sr, sb, cfg.csi, sim);
            dest = mc::simulate_destination_snr(ftr_params, rb, sim);
            e2e.resize(relay.size());
            std::transform(relay.begin(), relay.end(), dest.begin(), e2e.begin(), [](double a, double b) { return std::min(a, b); });
        }

        std::ostringstream os;
        std::vector<std::string> header{threshold_axis ? "threshold_db" : "snr_db", "eta_linear", "rho_sr_linear", "rho_rd_linear",
                                        "analytic_status", "sr_series_terms", "p_sr_analytic", "p_rd_analytic", "p_total_analytic"};
        if (cfg.mc)
        {
            for (const char *c : {"p_sr_mc", "p_sr_mc_stderr", "p_rd_mc", "p_rd_mc_stderr", "p_total_mc", "p_total_mc_stderr"})
                header.emplace_back(c);
        }
        write_row(os, header);

        for (std::size_t k = 0; k < points.size(); ++k)
        {
            Row r;
            r.add(grid[k]);
            r.add(points[k].eta);
            r.add(from_db(points[k].sr_rho_db));
            r.add(from_db(points[k].rd_rho_db));
            r.add(std::string(analytic ? kClosedForm : kSimulationOnly));
            if (analytic)
                r.add(std::to_string(terms[k]));
            else
                r.empty();
            if (analytic)
                r.add(p_sr[k]);
            else
                r.empty();
            r.add(p_rd[k]);
            if (analytic)
                r.add(p_tot[k]);
            else
                r.empty();
            if (cfg.mc)
            {
                // snr axis: P(rho g <= eta) = P(g <= eta / rho)
                const double sr_eta = threshold_axis ? points[k].eta : points[k].eta / from_db(points[k].sr_rho_db);
                const double rd_eta = threshold_axis ? points[k].eta : points[k].eta / from_db(points[k].rd_rho_db);
                for (const auto &[samples, eta] : {std::pair{&relay, sr_eta}, std::pair{&dest, rd_eta}, std::pair{&e2e, sr_eta}})
                {
                    const mc::EmpiricalEstimate e = mc::estimate_outage(*samples, eta);
                    r.add(e.value);
                    r.add(e.std_error);
                }
            }
            write_row(os, r.cells);
        }
        return os.str();
    }

    std::string cmd_coeffs(const RunConfig &cfg)
    {
        cfg.validate();
        const SRCoeffs src = sr_coeffs(cfg.sr_params());
        const ScaledSRCoeffs sc = scale_coeffs(src, cfg.sr_budget.linear());
        const FTRCoeffs ftr = ftr_coeffs(cfg.ftr_params(), cfg.ftr_nodes);

        std::ostringstream os;
        write_row(os, {"block", "name", "index", "value"});
        auto put = [&](const char *block, const char *name, const std::string &index, double v) {
            write_row(os, {block, name, index, csv_number(v)});
        };
        put("sr", "beta", "", src.beta());
        for (int k = 0; k < src.m(); ++k)
            put("sr", "alpha", std::to_string(k), src.alpha()[k]);
        put("sr_scaled", "rho_bar", "", sc.rho_bar);
        put("sr_scaled", "beta_prime", "", sc.beta_prime);
        for (int k = 0; k < sc.m(); ++k)
            put("sr_scaled", "alpha_prime", std::to_string(k), sc.alpha_prime[k]);

        put("ftr", "big_m", "", ftr.big_m());
        for (int i = 1; i <= ftr.big_m(); ++i)
        {
            put("ftr", "delta_i", std::to_string(i), ftr.delta_i()[i - 1]);
            put("ftr", "poly_int", std::to_string(i), ftr.poly_int()[i - 1]);
            put("ftr", "weight", std::to_string(i), ftr.weight()[i - 1]);
        }
        for (int i = 1; i <= ftr.big_m(); ++i)
        {
            for (int j = 1; j <= 2; ++j)
            {
                const std::string ij = std::to_string(i) + "/" + std::to_string(j);
                put("ftr", "beta", ij, ftr.beta(i, j));
                for (int b = 0; b < ftr.m(); ++b)
                    put("ftr", "alpha", ij + "/" + std::to_string(b), ftr.alpha(i, j, b));
            }
        }
        put("ftr", "raw_mass", "", ftr.raw_mass());
        put("ftr", "renorm", "", ftr.renorm());
        return os.str();
    }

    ValidationReport cmd_validate(const RunConfig &cfg)
    {
        return run_validation(cfg);
    }
}
