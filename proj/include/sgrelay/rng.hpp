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

#ifndef SGRELAY_RNG_HPP
#define SGRELAY_RNG_HPP

#include <array>
#include <cstdint>

namespace sgrelay
{
    // Philox4x64-10 counter-based generator (Salmon et al., SC'11).
    //
    // A stream is addressed by (seed, domain, substream). The 256-bit counter
    // is laid out as {block, 0, substream, 0} and the key as {seed, domain},
    // so every substream owns 2^64 blocks of four outputs and no two
    // substreams can overlap. The domain separates independent quantities
    // drawn for the same substream (e.g. the two hops of a relay link).
    class Philox4x64
    {
    public:
        using result_type = std::uint64_t;
        using Block = std::array<std::uint64_t, 4>;
        using Key = std::array<std::uint64_t, 2>;

        Philox4x64(std::uint64_t seed, std::uint64_t substream, std::uint64_t domain = 0);

        static constexpr result_type min() { return 0; }
        static constexpr result_type max() { return ~result_type{0}; }

        result_type operator()();

        // Uniform on (0, 1] with 53 random bits; never returns 0.
        double uniform_pos();
        // Uniform on [0, 1).
        double uniform();

        // Ten-round bijection of one counter block.
        static Block encrypt(Block counter, Key key);

    private:
        Key key_;
        Block counter_;
        Block buffer_{};
        int used_ = 4;
    };
}

#endif
