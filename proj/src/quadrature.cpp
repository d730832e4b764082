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

#include "sgrelay/quadrature.hpp"

#include "sgrelay/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>

namespace sgrelay::quadrature
{
    namespace
    {
        constexpr unsigned kMaxDepth = 30;
        constexpr double kAcceptRel = 1e-9;

        using GK = boost::math::quadrature::gauss_kronrod<double, 61>;

        void check(double value, double err, double l1)
        {
            if (!std::isfinite(value) || err > kAcceptRel * std::max(l1, 1e-300) + 1e-300)
                throw NumericalError("quadrature failed to converge (error estimate " + std::to_string(err) + ")");
        }

        struct Piece
        {
            double value = 0.0;
            double err = 0.0;
            double l1 = 0.0;
        };

        // Single 61-point rule on [a, b], evaluated on [-1, 1] so that the
        // error and L1 estimates come back in the units of the integral.
        Piece rule(const Integrand &f, double a, double b)
        {
            const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
            Piece p;
            p.value = GK::integrate([&](double t) { return half * f(mid + half * t); }, -1.0, 1.0, 0, 0.0, &p.err, &p.l1);
            return p;
        }

        Piece adapt(const Integrand &f, double a, double b, const Piece &whole, double rel_tol, double abs_tol, unsigned depth)
        {
            if (whole.err <= std::max(rel_tol * std::abs(whole.value), abs_tol) || depth == 0 || !std::isfinite(whole.value))
                return whole;
            const double mid = 0.5 * (a + b);
            const Piece l = adapt(f, a, mid, rule(f, a, mid), rel_tol, 0.5 * abs_tol, depth - 1);
            const Piece r = adapt(f, mid, b, rule(f, mid, b), rel_tol, 0.5 * abs_tol, depth - 1);
            return {l.value + r.value, l.err + r.err, l.l1 + r.l1};
        }

        Piece adaptive(const Integrand &f, double a, double b, double rel_tol)
        {
            const Piece top = rule(f, a, b);
            return adapt(f, a, b, top, rel_tol, rel_tol * std::abs(top.value), kMaxDepth);
        }
    }

    double integrate(const Integrand &f, double a, double b, double rel_tol)
    {
        if (a == b)
            return 0.0;
        if (b < a)
            return -integrate(f, b, a, rel_tol);
        Piece p;
        if (std::isinf(b))
        {
            // x = a + t / (1 - t), t in [0, 1)
            const Integrand g = [&](double t) {
                const double u = 1.0 - t;
                return f(a + t / u) / (u * u);
            };
            p = adaptive(g, 0.0, 1.0, rel_tol);
        }
        else
            p = adaptive(f, a, b, rel_tol);
        check(p.value, p.err, p.l1);
        return p.value;
    }

    double integrate_singular(const Integrand &f, double a, double b, double rel_tol)
    {
        boost::math::quadrature::tanh_sinh<double> ts;
        double err = 0.0;
        double l1 = 0.0;
        const double v = ts.integrate(f, a, b, rel_tol, &err, &l1);
        check(v, err, l1);
        return v;
    }
}
