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

#ifndef SGRELAY_ERRORS_HPP
#define SGRELAY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sgrelay
{
    // Argument outside the mathematical domain of an operation.
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // A computed quantity violated a numerical sanity bound (negative density,
    // probability outside [0,1], non-monotone CDF, series non-convergence).
    class NumericalError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Invalid run configuration (CLI flags or config file).
    class ConfigError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    namespace detail
    {
        inline void require(bool ok, const std::string &what)
        {
            if (!ok)
                throw DomainError(what);
        }
    }
}

#endif
