/*
   Copyright 2026 The isodyn authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ISODYN_FIGURES_HPP
#define ISODYN_FIGURES_HPP

#include "isodyn/io.hpp"
#include "isodyn/ortho.hpp"

namespace isodyn {

enum class FigureKind { Legendre, Laguerre };

struct FigureReport {
    FigureKind kind = FigureKind::Legendre;
    int n = 0;
    std::vector<double> roots;  // polished real roots of the polynomial
    SphereDivisor iso;          // isodynamic divisor, 2n-4 points
    double max_root_residual = 0.0;
    bool solver_converged = true;

    std::vector<ScatterPoint> scatter() const {
        std::vector<ScatterPoint> pts;
        for (double r : roots) pts.push_back({Complex(r, 0.0), true, 1});
        for (const auto& [z, m] : iso.finite_points) pts.push_back({z, false, m});
        return pts;
    }
};

/**
 * Roots and isodynamic divisor of a classical orthogonal polynomial at desk
 * scale. Roots come from the Jacobi matrix with Newton polishing through the
 * recurrence; the divisor comes from the critical-points-then-values
 * pipeline after rescaling the roots into the unit disk, which the dilation
 * equivariance of the divisor makes exact. The resultant route is avoided:
 * its Sylvester matrices are numerically hopeless at these degrees.
 */
inline FigureReport compute_figure(FigureKind kind, int n) {
    if (n < 3) throw DegenerateInput("figure degree must be >= 3");
    FigureReport report;
    report.kind = kind;
    report.n = n;

    report.roots = (kind == FigureKind::Legendre) ? legendre_roots(n) : laguerre_roots(n);
    auto eval = [&](double x) {
        return (kind == FigureKind::Legendre) ? legendre_eval(n, x) : laguerre_eval(n, x);
    };
    for (double& r : report.roots) {
        for (int it = 0; it < 4; ++it) {
            auto [v, dv] = eval(r);
            if (dv == 0.0) break;
            const double step = v / dv;
            r -= step;
            if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(r))) break;
        }
        auto [v, dv] = eval(r);
        if (dv != 0.0)
            report.max_root_residual = std::max(report.max_root_residual, std::abs(v / dv));
    }

    // Rescale into the unit disk before forming monomial coefficients; the
    // raw Laguerre roots reach ~4n and would overflow doubles in the product.
    double scale = 1.0;
    for (double r : report.roots) scale = std::max(scale, std::abs(r));
    std::vector<Complex> scaled;
    for (double r : report.roots) scaled.emplace_back(r / scale, 0.0);

    PolyC p = poly_from_roots(scaled);
    PolyC dp = p.derivative();
    PolyC num = detail::trim_rel(detail::shift_up(dp) - p * Complex(n, 0));
    PolyC wr = detail::trim_rel(detail::cross_derivative(num, dp));
    if (wr.is_zero()) throw DegenerateInput("degenerate figure polynomial");

    const int target = 2 * n - 4;
    report.iso.total_degree = target;

    auto value_at = [&](Complex z) -> SpherePoint {
        Complex nv = num.eval(z);
        Complex dv = dp.eval(z);
        if (std::abs(dv) == 0.0 || std::abs(nv) > 1e14 * std::abs(dv))
            return SpherePoint::infinity();
        return SpherePoint::finite(nv / dv);
    };
    auto add = [&](SpherePoint v, int mult) {
        if (v.at_infinity)
            report.iso.infinity_multiplicity += mult;
        else
            report.iso.finite_points.emplace_back(v.z * scale, mult);
    };

    RootSet rs;
    if (wr.degree() >= 1) {
        try {
            rs = find_roots(wr, 1e-10);
        } catch (SolverDiverged& e) {
            // Partial output is still emitted; the report carries the flag.
            rs = std::move(e.partial);
            report.solver_converged = false;
        }
    }
    for (const auto& [z, m] : rs.roots) add(value_at(z), m);
    const int deficit = target - wr.degree();
    if (deficit > 0) {
        SpherePoint v;
        if (num.degree() > dp.degree())
            v = SpherePoint::infinity();
        else if (num.degree() < dp.degree())
            v = SpherePoint::finite(Complex(0, 0));
        else
            v = SpherePoint::finite(num.leading() / dp.leading());
        add(v, deficit);
    }
    return report;
}

}  // namespace isodyn

#endif  // ISODYN_FIGURES_HPP
