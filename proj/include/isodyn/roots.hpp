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

#ifndef ISODYN_ROOTS_HPP
#define ISODYN_ROOTS_HPP

#include <cmath>
#include <numbers>
#include <numeric>

#include "isodyn/poly.hpp"

namespace isodyn {

/// Roots of a float polynomial, clustered into (location, multiplicity) pairs.
struct RootSet {
    std::vector<std::pair<Complex, int>> roots;
    double residual_bound = 0.0;
    bool converged = true;

    int total_multiplicity() const {
        int s = 0;
        for (const auto& [z, m] : roots) s += m;
        return s;
    }

    std::vector<Complex> expanded() const {
        std::vector<Complex> out;
        for (const auto& [z, m] : roots) out.insert(out.end(), static_cast<size_t>(m), z);
        return out;
    }
};

struct SolverDiverged : Error {
    RootSet partial;
    explicit SolverDiverged(RootSet p) : Error("root solver did not converge"), partial(std::move(p)) {}
};

namespace detail {

/// p and p'/p at z via Horner; scale accumulates sum |c_k||z|^k for a
/// backward-error estimate.
inline void eval_with_scale(const PolyC& p, Complex z, Complex& val, Complex& dval, double& scale) {
    val = Complex(0, 0);
    dval = Complex(0, 0);
    scale = 0.0;
    const double az = std::abs(z);
    for (int k = p.degree(); k >= 0; --k) {
        dval = dval * z + val;
        val = val * z + p.coeff(k);
        scale = scale * az + std::abs(p.coeff(k));
    }
}

}  // namespace detail

/**
 * Simultaneous-iteration (Aberth-Ehrlich) root finder with Newton polishing
 * of simple roots and multiplicity assignment by clustering: roots within a
 * ball of radius tol^{1/m} are merged into one multiplicity-m root.
 */
inline RootSet find_roots(const PolyC& poly, double tol = 1e-10, int max_iter = 400) {
    if (poly.degree() < 1) throw DegenerateInput("find_roots needs degree >= 1");

    PolyC p = poly.monic();
    const int n = p.degree();

    // Deflate exact zero roots (trailing zero coefficients).
    int zero_mult = 0;
    {
        std::vector<Complex> c(p.coeffs());
        while (zero_mult < n && std::abs(c[static_cast<size_t>(zero_mult)]) == 0.0) ++zero_mult;
        if (zero_mult > 0) c.erase(c.begin(), c.begin() + zero_mult);
        p = PolyC(std::move(c));
    }
    const int m = p.degree();

    std::vector<Complex> z(static_cast<size_t>(m));
    if (m > 0) {
        double bound = 0.0;
        for (int k = 0; k < m; ++k) bound = std::max(bound, std::abs(p.coeff(k)));
        bound = 1.0 + bound;  // Cauchy bound for a monic polynomial
        const double r0 = std::max(0.5, 0.7 * bound);
        for (int k = 0; k < m; ++k) {
            const double ang = 2.0 * std::numbers::pi * k / m + 0.4;
            z[static_cast<size_t>(k)] = r0 * Complex(std::cos(ang), std::sin(ang));
        }
    }

    bool converged = (m == 0);
    for (int iter = 0; iter < max_iter && !converged; ++iter) {
        double max_step = 0.0;
        for (int i = 0; i < m; ++i) {
            Complex val, dval;
            double scale;
            detail::eval_with_scale(p, z[static_cast<size_t>(i)], val, dval, scale);
            if (std::abs(val) <= 1e-15 * scale) continue;
            Complex newton = (dval == Complex(0, 0)) ? Complex(tol, tol) : val / dval;
            Complex sum(0, 0);
            for (int j = 0; j < m; ++j) {
                if (j == i) continue;
                Complex diff = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
                if (std::abs(diff) < 1e-300) diff = Complex(1e-300, 0);
                sum += Complex(1, 0) / diff;
            }
            Complex denom = Complex(1, 0) - newton * sum;
            Complex step = (std::abs(denom) < 1e-300) ? newton : newton / denom;
            z[static_cast<size_t>(i)] -= step;
            max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[static_cast<size_t>(i)])));
        }
        if (max_step < 1e-14) converged = true;
    }

    // Cluster into multiplicities: single linkage with a multiplicity-aware
    // radius (a multiplicity-m root is only computable to about tol^{1/m}).
    std::vector<std::vector<Complex>> clusters;
    {
        auto radius_for = [&](int size) { return 3.0 * std::pow(tol, 1.0 / (size + 1)); };
        for (int i = 0; i < m; ++i) {
            bool placed = false;
            for (size_t c = 0; c < clusters.size() && !placed; ++c) {
                for (const auto& w : clusters[c]) {
                    if (std::abs(z[static_cast<size_t>(i)] - w) <
                        radius_for(static_cast<int>(clusters[c].size()))) {
                        clusters[c].push_back(z[static_cast<size_t>(i)]);
                        placed = true;
                        break;
                    }
                }
            }
            if (!placed) clusters.push_back({z[static_cast<size_t>(i)]});
        }
    }

    RootSet rs;
    rs.converged = converged;
    if (zero_mult > 0) rs.roots.emplace_back(Complex(0, 0), zero_mult);
    for (auto& cl : clusters) {
        Complex mean = std::accumulate(cl.begin(), cl.end(), Complex(0, 0)) /
                       static_cast<double>(cl.size());
        if (cl.size() == 1) {
            // Newton polish simple roots.
            for (int it = 0; it < 8; ++it) {
                Complex val, dval;
                double scale;
                detail::eval_with_scale(p, mean, val, dval, scale);
                if (std::abs(val) <= 1e-15 * scale || dval == Complex(0, 0)) break;
                mean -= val / dval;
            }
        }
        rs.roots.emplace_back(mean, static_cast<int>(cl.size()));
    }

    double resid = 0.0;
    for (const auto& [root, mult] : rs.roots) resid = std::max(resid, std::abs(poly.monic().eval(root)));
    rs.residual_bound = resid;
    if (!converged) throw SolverDiverged(std::move(rs));
    return rs;
}

/// Float multiplicity profile via root clustering.
inline std::vector<std::pair<Complex, int>> multiplicity_profile(const PolyC& f, double tol = 1e-10) {
    return find_roots(f, tol).roots;
}

/// Exact multiplicity profile: squarefree factors tagged with multiplicities.
inline std::vector<std::pair<PolyQ, int>> multiplicity_profile(const PolyQ& f) {
    return squarefree_profile(f);
}

/// Builds the monic polynomial with the given roots.
inline PolyC poly_from_roots(const std::vector<Complex>& roots) {
    PolyC p = PolyC::one();
    for (const auto& r : roots) p = p * PolyC({-r, Complex(1, 0)});
    return p;
}

}  // namespace isodyn

#endif  // ISODYN_ROOTS_HPP
