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

#include "sgrelay/config.hpp"

#include "sgrelay/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace sgrelay::cli
{
    namespace
    {
        std::string_view trim(std::string_view s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string_view::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        std::string format_double(double v)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }

        double to_double(std::string_view v, std::string_view what)
        {
            double out = 0.0;
            const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
            if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out))
                throw ConfigError("invalid number for " + std::string(what) + ": '" + std::string(v) + "'");
            return out;
        }

        template <typename Int>
        Int to_int(std::string_view v, std::string_view what)
        {
            Int out = 0;
            const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
            if (ec != std::errc{} || ptr != v.data() + v.size())
                throw ConfigError("invalid integer for " + std::string(what) + ": '" + std::string(v) + "'");
            return out;
        }

        bool to_bool(std::string_view v, std::string_view what)
        {
            if (v == "true" || v == "1" || v == "yes" || v == "on")
                return true;
            if (v == "false" || v == "0" || v == "no" || v == "off")
                return false;
            throw ConfigError("invalid boolean for " + std::string(what) + ": '" + std::string(v) + "'");
        }

        std::string_view node_rule_name(FtrNodeRule r)
        {
            return r == FtrNodeRule::Cosine ? "cosine" : "alternating";
        }

        FtrNodeRule parse_node_rule(std::string_view v)
        {
            if (v == "cosine")
                return FtrNodeRule::Cosine;
            if (v == "alternating")
                return FtrNodeRule::Alternating;
            throw ConfigError("unknown FTR node rule '" + std::string(v) + "' (expected cosine or alternating)");
        }

        struct Field
        {
            std::string_view section;
            std::string_view key;
            std::function<void(RunConfig &, std::string_view, std::string_view)> set;
            std::function<std::string(const RunConfig &)> get;
        };

        template <typename T>
        Field real(std::string_view section, std::string_view key, T RunConfig::*member)
        {
            return {section, key, [member](RunConfig &c, std::string_view v, std::string_view what) { c.*member = to_double(v, what); },
                    [member](const RunConfig &c) { return format_double(c.*member); }};
        }

        template <typename T>
        Field integer(std::string_view section, std::string_view key, T RunConfig::*member)
        {
            return {section, key, [member](RunConfig &c, std::string_view v, std::string_view what) { c.*member = to_int<T>(v, what); },
                    [member](const RunConfig &c) { return std::to_string(c.*member); }};
        }

        Field boolean(std::string_view section, std::string_view key, bool RunConfig::*member)
        {
            return {section, key, [member](RunConfig &c, std::string_view v, std::string_view what) { c.*member = to_bool(v, what); },
                    [member](const RunConfig &c) { return std::string(c.*member ? "true" : "false"); }};
        }

        Field budget(std::string_view key, BudgetDb RunConfig::*b, double BudgetDb::*member)
        {
            return {"budget", key, [b, member](RunConfig &c, std::string_view v, std::string_view what) { (c.*b).*member = to_double(v, what); },
                    [b, member](const RunConfig &c) { return format_double((c.*b).*member); }};
        }

        const std::vector<Field> &fields()
        {
            static const std::vector<Field> table = {
                integer("sr", "m", &RunConfig::sr_m),
                real("sr", "omega", &RunConfig::sr_omega),
                real("sr", "sigma2", &RunConfig::sr_sigma2),
                boolean("sr", "normalize", &RunConfig::sr_normalize),

                integer("ftr", "m", &RunConfig::ftr_m),
                real("ftr", "k", &RunConfig::ftr_k),
                real("ftr", "delta", &RunConfig::ftr_delta),
                real("ftr", "sigma2", &RunConfig::ftr_sigma2),
                boolean("ftr", "normalize", &RunConfig::ftr_normalize),
                {"ftr", "nodes", [](RunConfig &c, std::string_view v, std::string_view) { c.ftr_nodes = parse_node_rule(v); },
                 [](const RunConfig &c) { return std::string(node_rule_name(c.ftr_nodes)); }},

                budget("sr_ps", &RunConfig::sr_budget, &BudgetDb::ps),
                budget("sr_gain_db", &RunConfig::sr_budget, &BudgetDb::gain_db),
                budget("sr_n0_db", &RunConfig::sr_budget, &BudgetDb::n0_db),
                budget("rd_ps", &RunConfig::rd_budget, &BudgetDb::ps),
                budget("rd_gain_db", &RunConfig::rd_budget, &BudgetDb::gain_db),
                budget("rd_n0_db", &RunConfig::rd_budget, &BudgetDb::n0_db),

                {"sweep", "axis", [](RunConfig &c, std::string_view v, std::string_view) { c.axis = parse_axis(v); },
                 [](const RunConfig &c) { return std::string(to_string(c.axis)); }},
                real("sweep", "start", &RunConfig::grid_start),
                real("sweep", "stop", &RunConfig::grid_stop),
                real("sweep", "step", &RunConfig::grid_step),
                real("sweep", "threshold_db", &RunConfig::threshold_db),

                boolean("mc", "enabled", &RunConfig::mc),
                integer("mc", "samples", &RunConfig::samples),
                integer("mc", "seed", &RunConfig::seed),
                integer("mc", "chunk_size", &RunConfig::chunk_size),
                integer("mc", "threads", &RunConfig::threads),

                {"run", "csi", [](RunConfig &c, std::string_view v, std::string_view) { c.csi = parse_csi_mode(v); },
                 [](const RunConfig &c) { return std::string(to_string(c.csi)); }},
                integer("run", "antennas", &RunConfig::antennas),
                integer("run", "truncation", &RunConfig::truncation),
                real("run", "tail_tol", &RunConfig::tail_tol),
                {"run", "out", [](RunConfig &c, std::string_view v, std::string_view) { c.out = std::string(v); },
                 [](const RunConfig &c) { return c.out; }},
            };
            return table;
        }
    }

    std::string_view to_string(SweepAxis axis)
    {
        return axis == SweepAxis::Threshold ? "threshold" : "snr";
    }

    SweepAxis parse_axis(std::string_view text)
    {
        if (text == "threshold")
            return SweepAxis::Threshold;
        if (text == "snr")
            return SweepAxis::Snr;
        throw ConfigError("unknown sweep axis '" + std::string(text) + "' (expected threshold or snr)");
    }

    LinkBudget BudgetDb::linear() const
    {
        return LinkBudget{ps, from_db(gain_db), from_db(n0_db)};
    }

    double BudgetDb::rho_db() const
    {
        return to_db(linear().rho_bar());
    }

    SRParams RunConfig::sr_params() const
    {
        return sr_normalize ? SRParams::unit_power(sr_m, sr_omega) : SRParams{sr_m, sr_omega, sr_sigma2};
    }

    FTRParams RunConfig::ftr_params() const
    {
        return ftr_normalize ? FTRParams::unit_power(ftr_m, ftr_k, ftr_delta) : FTRParams{ftr_m, ftr_k, ftr_delta, ftr_sigma2};
    }

    mc::SimConfig RunConfig::sim_config() const
    {
        return mc::SimConfig{samples, seed, antennas, chunk_size, threads};
    }

    std::vector<double> RunConfig::grid_db() const
    {
        std::vector<double> g;
        if (!(grid_step > 0.0) || grid_stop < grid_start)
            return g;
        const double span = (grid_stop - grid_start) / grid_step;
        const auto n = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
        g.reserve(n);
        for (std::size_t k = 0; k < n; ++k)
            g.push_back(grid_start + static_cast<double>(k) * grid_step);
        return g;
    }

    void RunConfig::validate() const
    {
        try
        {
            const SRParams sr = sr_params();
            sr.validate();
            if (sr_normalize)
                detail::require(sr_omega < 1.0, "SR: normalized omega must be below 1");
            ftr_params().validate();
            sr_budget.linear().validate();
            rd_budget.linear().validate();
            sim_config().validate();
            detail::require(truncation >= 1, "truncation must be at least 1");
            detail::require(tail_tol >= 0.0, "tail_tol must be nonnegative");
        }
        catch (const DomainError &e)
        {
            throw ConfigError(e.what());
        }
        if (!(grid_step > 0.0))
            throw ConfigError("grid step must be positive");
        if (grid_stop < grid_start)
            throw ConfigError("empty grid: stop is below start");
        if (grid_db().empty())
            throw ConfigError("empty grid");
    }

    void set_config_value(RunConfig &cfg, std::string_view section, std::string_view key, std::string_view value)
    {
        for (const Field &f : fields())
        {
            if (f.section == section && f.key == key)
            {
                const std::string what = std::string(section) + "." + std::string(key);
                f.set(cfg, trim(value), what);
                return;
            }
        }
        throw ConfigError("unknown config key '" + std::string(section) + "." + std::string(key) + "'");
    }

    RunConfig parse_config(std::string_view text, RunConfig base)
    {
        std::string section;
        std::size_t line_no = 0;
        while (!text.empty())
        {
            const auto nl = text.find('\n');
            std::string_view line = text.substr(0, nl);
            text = (nl == std::string_view::npos) ? std::string_view{} : text.substr(nl + 1);
            ++line_no;

            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;
            if (line.front() == '[')
            {
                if (line.back() != ']')
                    throw ConfigError("line " + std::to_string(line_no) + ": malformed section header");
                section = std::string(trim(line.substr(1, line.size() - 2)));
                continue;
            }
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
            if (section.empty())
                throw ConfigError("line " + std::to_string(line_no) + ": key outside of a section");
            set_config_value(base, section, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        }
        return base;
    }

    RunConfig load_config(const std::string &path, RunConfig base)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("cannot read config file '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_config(ss.str(), std::move(base));
    }

    std::string serialize_config(const RunConfig &cfg)
    {
        std::string out;
        std::string_view current;
        for (const Field &f : fields())
        {
            if (f.section != current)
            {
                if (!current.empty())
                    out += '\n';
                out += "[" + std::string(f.section) + "]\n";
                current = f.section;
            }
            out += std::string(f.key) + " = " + f.get(cfg) + "\n";
        }
        return out;
    }
}
