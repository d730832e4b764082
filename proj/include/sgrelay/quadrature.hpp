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

#ifndef SGRELAY_QUADRATURE_HPP
#define SGRELAY_QUADRATURE_HPP

#include <functional>

namespace sgrelay::quadrature
{
    using Integrand = std::function<double(double)>;

    // Adaptive Gauss-Kronrod (61-point) on [a, b]; b may be +infinity.
    // Throws NumericalError if the error estimate exceeds 1e-9 relative.
    double integrate(const Integrand &f, double a, double b, double rel_tol = 1e-13);

    // Double-exponential rule for integrands with endpoint singularities.
    double integrate_singular(const Integrand &f, double a, double b, double rel_tol = 1e-13);
}

#endif
