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

#ifndef SGRELAY_DETAIL_SUMMATION_HPP
#define SGRELAY_DETAIL_SUMMATION_HPP

#include <cmath>

namespace sgrelay::detail
{
    // Neumaier compensated summation for alternating-sign series.
    class CompensatedSum
    {
    public:
        void add(double v)
        {
            const double t = sum_ + v;
            if (std::fabs(sum_) >= std::fabs(v))
                comp_ += (sum_ - t) + v;
            else
                comp_ += (v - t) + sum_;
            sum_ = t;
            abs_ += std::fabs(v);
        }

        double value() const { return sum_ + comp_; }

        // Sum of |terms|; value() / magnitude() measures cancellation.
        double magnitude() const { return abs_; }

    private:
        double sum_ = 0.0;
        double comp_ = 0.0;
        double abs_ = 0.0;
    };

    // x^p with the convention 0^0 = 1, returned as a log (−inf for 0^p, p > 0).
    inline double log_pow(double x, double p)
    {
        if (p == 0.0)
            return 0.0;
        return p * std::log(x);
    }
}

#endif
