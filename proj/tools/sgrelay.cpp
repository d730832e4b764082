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
#include "sgrelay/outage.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace sgrelay;

namespace
{
    struct Overrides
    {
        std::string config_path;
        std::optional<std::uint64_t> seed;
        std::optional<long long> samples;
        std::optional<int> antennas, truncation, threads;
        std::optional<std::string> csi, axis, out;
        std::optional<double> grid_start, grid_stop, grid_step, threshold_db, rate, bandwidth;
        std::optional<bool> mc;
    };

    template <typename T>
    std::string text(const T &v)
    {
        if constexpr (std::is_same_v<T, std::string>)
            return v;
        else if constexpr (std::is_same_v<T, double>)
            return cli::csv_number(v);
        else if constexpr (std::is_same_v<T, bool>)
            return v ? "true" : "false";
        else
            return std::to_string(v);
    }

    cli::RunConfig resolve(const Overrides &o)
    {
        cli::RunConfig cfg = o.config_path.empty() ? cli::RunConfig{} : cli::load_config(o.config_path);
        auto set = [&cfg](const char *section, const char *key, const auto &opt) {
            if (opt)
                cli::set_config_value(cfg, section, key, text(*opt));
        };
        set("mc", "seed", o.seed);
        set("mc", "samples", o.samples);
        set("mc", "threads", o.threads);
        set("mc", "enabled", o.mc);
        set("run", "antennas", o.antennas);
        set("run", "csi", o.csi);
        set("run", "truncation", o.truncation);
        set("run", "out", o.out);
        set("sweep", "axis", o.axis);
        set("sweep", "start", o.grid_start);
        set("sweep", "stop", o.grid_stop);
        set("sweep", "step", o.grid_step);
        set("sweep", "threshold_db", o.threshold_db);
        if (o.rate || o.bandwidth)
        {
            if (!o.rate || !o.bandwidth)
                throw ConfigError("--rate and --bandwidth must be given together");
            cfg.threshold_db = to_db(threshold_from_rate(*o.rate, *o.bandwidth).eta_th);
        }
        cfg.validate();
        return cfg;
    }

    void emit(const cli::RunConfig &cfg, const std::string &body)
    {
        if (cfg.out.empty())
        {
            std::cout << body;
            return;
        }
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f)
            throw ConfigError("cannot open output file " + cfg.out);
        f << body;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Satellite to ground relay outage and SNR distribution engine"};
    app.require_subcommand(1);

    Overrides o;
    bool mc_on = false, mc_off = false;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--config", o.config_path, "Configuration file");
        sub->add_option("--seed", o.seed, "Monte Carlo seed");
        sub->add_option("--samples", o.samples, "Monte Carlo sample count");
        sub->add_option("--antennas", o.antennas, "Relay antenna count");
        sub->add_option("--csi", o.csi, "perfect or phase-only");
        sub->add_option("--axis", o.axis, "threshold or snr");
        sub->add_option("--grid-start", o.grid_start, "Grid start (dB)");
        sub->add_option("--grid-stop", o.grid_stop, "Grid stop (dB)");
        sub->add_option("--grid-step", o.grid_step, "Grid step (dB)");
        sub->add_option("--threshold-db", o.threshold_db, "Threshold for the snr axis (dB)");
        sub->add_option("--rate", o.rate,
                        "Target rate R; with --bandwidth sets the snr-axis threshold to 2^(R*B) - 1; "
                        "note the common textbook form is 2^(R/B) - 1");
        sub->add_option("--bandwidth", o.bandwidth, "Bandwidth B used with --rate");
        sub->add_option("--truncation", o.truncation, "Series truncation d_max");
        sub->add_option("--threads", o.threads, "Worker threads (0 = hardware)");
        sub->add_option("--out", o.out, "Output path (default stdout)");
        auto *on = sub->add_flag("--mc", mc_on, "Enable Monte Carlo columns");
        sub->add_flag("--no-mc", mc_off, "Disable Monte Carlo columns")->excludes(on);
    };

    auto *pdf = app.add_subcommand("pdf", "Relay SNR density curves");
    auto *sweep = app.add_subcommand("outage-sweep", "Outage probability sweep");
    auto *validate = app.add_subcommand("validate", "Run the invariant suite");
    auto *coeffs = app.add_subcommand("coeffs", "Dump series coefficients");
    for (auto *s : {pdf, sweep, validate, coeffs})
        add_common(s);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? cli::kExitOk : cli::kExitConfigError;
    }

    if (mc_on)
        o.mc = true;
    if (mc_off)
        o.mc = false;

    try
    {
        const cli::RunConfig cfg = resolve(o);
        if (*pdf)
            emit(cfg, cli::cmd_pdf(cfg));
        else if (*sweep)
            emit(cfg, cli::cmd_outage_sweep(cfg));
        else if (*coeffs)
            emit(cfg, cli::cmd_coeffs(cfg));
        else
        {
            const cli::ValidationReport report = cli::cmd_validate(cfg);
            std::ostringstream os;
            report.write(os);
            emit(cfg, os.str());
            return report.all_pass() ? cli::kExitOk : cli::kExitValidationFailed;
        }
    }
    catch (const ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return cli::kExitConfigError;
    }
    catch (const NumericalError &e)
    {
        std::cerr << "numerical error: " << e.what() << '\n';
        return cli::kExitNumerical;
    }
    catch (const DomainError &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return cli::kExitConfigError;
    }
    return cli::kExitOk;
}
