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

#include "sgrelay/montecarlo.hpp"

#include "sgrelay/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

namespace sgrelay::mc
{
    namespace
    {
        constexpr double kTwoPi = 2.0 * std::numbers::pi;

        unsigned worker_count(const SimConfig &cfg)
        {
            unsigned n = cfg.n_threads;
            if (n == 0)
                n = std::max(1u, std::thread::hardware_concurrency());
            return static_cast<unsigned>(std::min<std::uint64_t>(n, cfg.n_chunks()));
        }

        // Runs body(chunk, begin, end) for every chunk. Each chunk writes only
        // to its own [begin, end) slice so the output never depends on which
        // worker picked it up.
        template <typename Body>
        void for_each_chunk(const SimConfig &cfg, Body body)
        {
            const std::uint64_t chunks = cfg.n_chunks();
            auto run = [&](std::atomic<std::uint64_t> &next) {
                for (std::uint64_t c = next++; c < chunks; c = next++)
                {
                    const std::uint64_t begin = c * cfg.chunk_size;
                    const std::uint64_t end = std::min(cfg.n_samples, begin + cfg.chunk_size);
                    body(c, begin, end);
                }
            };
            std::atomic<std::uint64_t> next{0};
            const unsigned workers = worker_count(cfg);
            if (workers <= 1)
            {
                run(next);
                return;
            }
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back([&] { run(next); });
        }

        Philox4x64 stream(const SimConfig &cfg, std::uint64_t chunk, StreamDomain domain)
        {
            return Philox4x64(cfg.seed, chunk, static_cast<std::uint64_t>(domain));
        }

        // Sum |h_i|^2 and sum |h_i| over the antennas of one draw.
        struct AntennaSums
        {
            double power = 0.0;
            double amplitude = 0.0;
        };

        AntennaSums draw_antennas(const SRParams &params, int n, Philox4x64 &rng)
        {
            AntennaSums s;
            for (int a = 0; a < n; ++a)
            {
                const double p = std::norm(sample_sr_channel(params, rng));
                s.power += p;
                s.amplitude += std::sqrt(p);
            }
            return s;
        }

        double relay_snr(const AntennaSums &s, double rho, int n, CsiMode mode)
        {
            if (mode == CsiMode::Perfect)
                return rho * s.power;
            return rho / n * s.amplitude * s.amplitude;
        }
    }

    void SimConfig::validate() const
    {
        detail::require(n_samples >= 1, "SimConfig: n_samples must be at least 1");
        detail::require(n_antennas >= 1, "SimConfig: n_antennas must be at least 1");
        detail::require(chunk_size >= 1, "SimConfig: chunk_size must be at least 1");
    }

    std::pair<double, double> sample_gaussian_pair(Philox4x64 &rng)
    {
        const double r = std::sqrt(-2.0 * std::log(rng.uniform_pos()));
        const double theta = kTwoPi * rng.uniform();
        return {r * std::cos(theta), r * std::sin(theta)};
    }

    double sample_nakagami_amplitude(int m, Philox4x64 &rng)
    {
        detail::require(m >= 1, "sample_nakagami_amplitude: m must be at least 1");
        double g = 0.0;
        for (int i = 0; i < m; ++i)
            g -= std::log(rng.uniform_pos());
        return std::sqrt(g / m);
    }

    std::complex<double> sample_sr_channel(const SRParams &params, Philox4x64 &rng)
    {
        const double zeta = sample_nakagami_amplitude(params.m, rng);
        const double phi = kTwoPi * rng.uniform();
        const auto [x, y] = sample_gaussian_pair(rng);
        const double sd = std::sqrt(params.sigma2);
        return std::polar(zeta * std::sqrt(params.omega), phi) + std::complex<double>(sd * x, sd * y);
    }

    SpecularAmplitudes ftr_specular_amplitudes(const FTRParams &params)
    {
        params.validate();
        const double root = std::sqrt(1.0 - params.delta * params.delta);
        const double base = params.sigma2 * params.k_ratio;
        return {std::sqrt(base * (1.0 + root)), std::sqrt(base * (1.0 - root))};
    }

    std::complex<double> sample_ftr_channel(const FTRParams &params, Philox4x64 &rng)
    {
        const auto [v1, v2] = ftr_specular_amplitudes(params);
        const double zeta = sample_nakagami_amplitude(params.m, rng);
        const double phi1 = kTwoPi * rng.uniform();
        const double phi2 = kTwoPi * rng.uniform();
        const auto [x, y] = sample_gaussian_pair(rng);
        const double sd = std::sqrt(params.sigma2);
        return zeta * (std::polar(v1, phi1) + std::polar(v2, phi2)) + std::complex<double>(sd * x, sd * y);
    }

    std::vector<double> simulate_relay_snr(const SRParams &params, const LinkBudget &budget, CsiMode mode, const SimConfig &cfg)
    {
        params.validate();
        budget.validate();
        cfg.validate();
        const double rho = budget.rho_bar();
        const int n = cfg.n_antennas;
        std::vector<double> out(cfg.n_samples);
        for_each_chunk(cfg, [&](std::uint64_t c, std::uint64_t begin, std::uint64_t end) {
            Philox4x64 rng = stream(cfg, c, StreamDomain::SatelliteHop);
            for (std::uint64_t k = begin; k < end; ++k)
                out[k] = relay_snr(draw_antennas(params, n, rng), rho, n, mode);
        });
        return out;
    }

    PairedSnr simulate_relay_snr_paired(const SRParams &params, const LinkBudget &budget, const SimConfig &cfg)
    {
        params.validate();
        budget.validate();
        cfg.validate();
        const double rho = budget.rho_bar();
        const int n = cfg.n_antennas;
        PairedSnr out{std::vector<double>(cfg.n_samples), std::vector<double>(cfg.n_samples)};
        for_each_chunk(cfg, [&](std::uint64_t c, std::uint64_t begin, std::uint64_t end) {
            Philox4x64 rng = stream(cfg, c, StreamDomain::SatelliteHop);
            for (std::uint64_t k = begin; k < end; ++k)
            {
                const AntennaSums s = draw_antennas(params, n, rng);
                out.perfect[k] = relay_snr(s, rho, n, CsiMode::Perfect);
                out.phase_only[k] = relay_snr(s, rho, n, CsiMode::PhaseOnly);
            }
        });
        return out;
    }

    std::vector<double> simulate_sr_power(const SRParams &params, const SimConfig &cfg)
    {
        params.validate();
        cfg.validate();
        std::vector<double> out(cfg.n_samples);
        for_each_chunk(cfg, [&](std::uint64_t c, std::uint64_t begin, std::uint64_t end) {
            Philox4x64 rng = stream(cfg, c, StreamDomain::SatelliteHop);
            for (std::uint64_t k = begin; k < end; ++k)
                out[k] = std::norm(sample_sr_channel(params, rng));
        });
        return out;
    }

    std::vector<double> simulate_ftr_power(const FTRParams &params, const SimConfig &cfg)
    {
        return simulate_destination_snr(params, LinkBudget{}, cfg);
    }

    std::vector<double> simulate_destination_snr(const FTRParams &params, const LinkBudget &budget, const SimConfig &cfg)
    {
        params.validate();
        budget.validate();
        cfg.validate();
        const double rho = budget.rho_bar();
        std::vector<double> out(cfg.n_samples);
        for_each_chunk(cfg, [&](std::uint64_t c, std::uint64_t begin, std::uint64_t end) {
            Philox4x64 rng = stream(cfg, c, StreamDomain::GroundHop);
            for (std::uint64_t k = begin; k < end; ++k)
                out[k] = rho * std::norm(sample_ftr_channel(params, rng));
        });
        return out;
    }

    std::vector<double> simulate_end_to_end_snr(const SRParams &sr, const FTRParams &ftr, const LinkBudget &sr_budget,
                                                const LinkBudget &rd_budget, CsiMode mode, const SimConfig &cfg)
    {
        std::vector<double> relay = simulate_relay_snr(sr, sr_budget, mode, cfg);
        const std::vector<double> dest = simulate_destination_snr(ftr, rd_budget, cfg);
        for (std::size_t k = 0; k < relay.size(); ++k)
            relay[k] = std::min(relay[k], dest[k]);
        return relay;
    }

    EmpiricalEstimate estimate_outage(std::span<const double> samples, double eta)
    {
        detail::require(samples.size() >= kMinOutageSamples, "estimate_outage: insufficient samples (need at least 1000)");
        detail::require(eta >= 0.0, "estimate_outage: eta must be nonnegative");
        const auto hits = std::count_if(samples.begin(), samples.end(), [eta](double s) { return s <= eta; });
        const double n = static_cast<double>(samples.size());
        const double p = static_cast<double>(hits) / n;
        return {p, std::sqrt(p * (1.0 - p) / n), samples.size()};
    }

    EmpiricalEstimate simulate_end_to_end(const SRParams &sr, const FTRParams &ftr, const LinkBudget &sr_budget,
                                          const LinkBudget &rd_budget, CsiMode mode, double eta, const SimConfig &cfg)
    {
        const std::vector<double> snr = simulate_end_to_end_snr(sr, ftr, sr_budget, rd_budget, mode, cfg);
        return estimate_outage(snr, eta);
    }

    BinSpec BinSpec::uniform(double lo, double hi, std::size_t bins)
    {
        detail::require(bins >= 1 && hi > lo, "BinSpec::uniform: need hi > lo and at least one bin");
        BinSpec spec;
        spec.edges.resize(bins + 1);
        for (std::size_t k = 0; k <= bins; ++k)
            spec.edges[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(bins);
        return spec;
    }

    Histogram estimate_pdf_histogram(std::span<const double> samples, const BinSpec &bins)
    {
        detail::require(!samples.empty(), "estimate_pdf_histogram: no samples");
        detail::require(bins.edges.size() >= 2, "estimate_pdf_histogram: need at least two edges");
        for (std::size_t k = 1; k < bins.edges.size(); ++k)
            detail::require(bins.edges[k] > bins.edges[k - 1], "estimate_pdf_histogram: edges must be strictly increasing");

        Histogram h;
        h.edges = bins.edges;
        h.counts.assign(bins.edges.size() - 1, 0);
        h.total = samples.size();
        for (double s : samples)
        {
            if (s < h.edges.front())
            {
                ++h.underflow;
                continue;
            }
            if (s > h.edges.back())
            {
                ++h.overflow;
                continue;
            }
            // bins are [e_k, e_{k+1}); the last bin also takes its upper edge
            auto it = std::upper_bound(h.edges.begin(), h.edges.end(), s);
            std::size_t k = static_cast<std::size_t>(it - h.edges.begin());
            k = std::min(k, h.counts.size()) - 1;
            ++h.counts[k];
        }
        h.density.resize(h.counts.size());
        for (std::size_t k = 0; k < h.counts.size(); ++k)
            h.density[k] = static_cast<double>(h.counts[k]) / (static_cast<double>(h.total) * (h.edges[k + 1] - h.edges[k]));
        return h;
    }
}
