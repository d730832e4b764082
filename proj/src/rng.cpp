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

#include "sgrelay/rng.hpp"

namespace sgrelay
{
    namespace
    {
        constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
        constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
        constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
        constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

        inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t &hi, std::uint64_t &lo)
        {
            __extension__ using u128 = unsigned __int128;
            const u128 p = static_cast<u128>(a) * b;
            hi = static_cast<std::uint64_t>(p >> 64);
            lo = static_cast<std::uint64_t>(p);
        }
    }

    Philox4x64::Philox4x64(std::uint64_t seed, std::uint64_t substream, std::uint64_t domain)
        : key_{seed, domain}, counter_{0, 0, substream, 0}
    {
    }

    Philox4x64::Block Philox4x64::encrypt(Block c, Key k)
    {
        for (int round = 0; round < 10; ++round)
        {
            std::uint64_t hi0, lo0, hi1, lo1;
            mulhilo(kMul0, c[0], hi0, lo0);
            mulhilo(kMul1, c[2], hi1, lo1);
            c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
            k[0] += kWeyl0;
            k[1] += kWeyl1;
        }
        return c;
    }

    Philox4x64::result_type Philox4x64::operator()()
    {
        if (used_ == 4)
        {
            buffer_ = encrypt(counter_, key_);
            ++counter_[0];
            used_ = 0;
        }
        return buffer_[used_++];
    }

    double Philox4x64::uniform_pos()
    {
        return (static_cast<double>((*this)() >> 11) + 1.0) * 0x1.0p-53;
    }

    double Philox4x64::uniform()
    {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }
}
