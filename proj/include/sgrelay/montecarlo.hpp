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

#ifndef SGRELAY_MONTECARLO_HPP
#define SGRELAY_MONTECARLO_HPP

#include "sgrelay/channels.hpp"
#include "sgrelay/rng.hpp"
#include "sgrelay/snr.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace sgrelay::mc
{
    // Results depend on (seed, n_samples, n_antennas, chunk_size, channel
    // parameters) only. n_threads changes wall time, never output.
    struct SimConfig
    {
        std::uint64_t n_samples = 1'000'000;
        std::uint64_t seed = 1;
        int n_antennas = 2;
        std::uint64_t chunk_size = 1u << 16;
        unsigned n_threads = 0; // 0: hardware concurrency

        void validate() const;

        std::uint64_t n_chunks() const { return (n_samples + chunk_size - 1) / chunk_size; }
    };

    struct EmpiricalEstimate
    {
        double value = 0.0;
        double std_error = 0.0;
        std::uint64_t n = 0;
    };

    // Random-stream domains. Chunk c of domain d uses Philox4x64(seed, c, d).
    enum class StreamDomain : std::uint64_t
    {
        SatelliteHop = 0,
        GroundHop = 1,
    };

    // Box-Muller pair of independent N(0, 1) draws; consumes two uniforms.
    std::pair<double, double> sample_gaussian_pair(Philox4x64 &rng);

    // zeta = sqrt(g), g ~ Gamma(m, 1/m) as the mean of m unit exponentials.
    // Consumes exactly m uniforms.
    double sample_nakagami_amplitude(int m, Philox4x64 &rng);

    std::complex<double> sample_sr_channel(const SRParams &params, Philox4x64 &rng);

    struct SpecularAmplitudes
    {
        double v1 = 0.0;
        double v2 = 0.0;
    };

    // Principal (v1 >= v2) inversion of K and Delta:
    // v1^2 = sigma2 K (1 + sqrt(1 - Delta^2)), v2^2 = sigma2 K (1 - sqrt(1 - Delta^2)).
    SpecularAmplitudes ftr_specular_amplitudes(const FTRParams &params);

    std::complex<double> sample_ftr_channel(const FTRParams &params, Philox4x64 &rng);

    // N-antenna relay SNR: rho sum |h_i|^2 (Perfect) or rho / N (sum |h_i|)^2
    // (PhaseOnly). Samples are ordered by chunk, then draw.
    std::vector<double> simulate_relay_snr(const SRParams &params, const LinkBudget &budget, CsiMode mode, const SimConfig &cfg);

    // Both regimes computed from the same channel draws.
    struct PairedSnr
    {
        std::vector<double> perfect;
        std::vector<double> phase_only;
    };

    PairedSnr simulate_relay_snr_paired(const SRParams &params, const LinkBudget &budget, const SimConfig &cfg);

    // |h|^2 samples (n_antennas ignored).
    std::vector<double> simulate_sr_power(const SRParams &params, const SimConfig &cfg);
    std::vector<double> simulate_ftr_power(const FTRParams &params, const SimConfig &cfg);

    // Ground-hop SNR rho |h_FTR|^2.
    std::vector<double> simulate_destination_snr(const FTRParams &params, const LinkBudget &budget, const SimConfig &cfg);

    // Effective end-to-end SNR min(relay, destination): the DF link is in
    // outage at eta exactly when this is <= eta. The relay hop reproduces
    // simulate_relay_snr for the same config.
    std::vector<double> simulate_end_to_end_snr(const SRParams &sr, const FTRParams &ftr, const LinkBudget &sr_budget,
                                                const LinkBudget &rd_budget, CsiMode mode, const SimConfig &cfg);

    inline constexpr std::size_t kMinOutageSamples = 1000;

    // Fraction of samples <= eta with binomial standard error sqrt(p(1-p)/n).
    EmpiricalEstimate estimate_outage(std::span<const double> samples, double eta);

    EmpiricalEstimate simulate_end_to_end(const SRParams &sr, const FTRParams &ftr, const LinkBudget &sr_budget,
                                          const LinkBudget &rd_budget, CsiMode mode, double eta, const SimConfig &cfg);

    struct BinSpec
    {
        std::vector<double> edges; // strictly increasing, at least two

        static BinSpec uniform(double lo, double hi, std::size_t bins);
    };

    // density[k] = counts[k] / (total * width_k). Samples outside the edges
    // are tallied in underflow / overflow but still count toward total, so
    // the bars integrate to the in-range fraction.
    struct Histogram
    {
        std::vector<double> edges;
        std::vector<std::uint64_t> counts;
        std::vector<double> density;
        std::uint64_t underflow = 0;
        std::uint64_t overflow = 0;
        std::uint64_t total = 0;
    };

    Histogram estimate_pdf_histogram(std::span<const double> samples, const BinSpec &bins);
}

#endif
