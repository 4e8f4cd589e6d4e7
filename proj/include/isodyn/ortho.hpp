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

#ifndef ISODYN_ORTHO_HPP
#define ISODYN_ORTHO_HPP

#include <algorithm>
#include <cmath>

#include "isodyn/poly.hpp"

namespace isodyn {

/// Exact Legendre polynomial P_n via (n+1)P_{n+1} = (2n+1) z P_n - n P_{n-1}.
inline PolyQ gen_legendre(int n) {
    if (n < 0) throw DegenerateInput("gen_legendre needs n >= 0");
    PolyQ prev = PolyQ::one();
    if (n == 0) return prev;
    PolyQ cur({GaussianRational(0), GaussianRational(1)});
    PolyQ z_mono = cur;
    for (int k = 1; k < n; ++k) {
        PolyQ next = (z_mono * cur * GaussianRational(2 * k + 1) - prev * GaussianRational(k)) *
                     GaussianRational(Rational(1, k + 1));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Exact Laguerre polynomial L_n via (n+1)L_{n+1} = (2n+1-z)L_n - n L_{n-1}.
inline PolyQ gen_laguerre(int n) {
    if (n < 0) throw DegenerateInput("gen_laguerre needs n >= 0");
    PolyQ prev = PolyQ::one();
    if (n == 0) return prev;
    PolyQ cur({GaussianRational(1), GaussianRational(-1)});
    for (int k = 1; k < n; ++k) {
        PolyQ factor({GaussianRational(2 * k + 1), GaussianRational(-1)});
        PolyQ next = (factor * cur - prev * GaussianRational(k)) *
                     GaussianRational(Rational(1, k + 1));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace detail {

/**
 * Eigenvalues of a symmetric tridiagonal matrix (diagonal d, off-diagonal e
 * with e[0] unused) by the implicit-shift QL iteration. Destroys its inputs;
 * returns the eigenvalues sorted ascending.
 */
inline std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return {};
    e.resize(static_cast<size_t>(n), 0.0);
    for (int i = 1; i < n; ++i) e[static_cast<size_t>(i - 1)] = e[static_cast<size_t>(i)];
    e[static_cast<size_t>(n - 1)] = 0.0;

    for (int l = 0; l < n; ++l) {
        for (int iter = 0; iter < 60; ++iter) {
            int m = l;
            for (; m < n - 1; ++m) {
                const double dd = std::abs(d[static_cast<size_t>(m)]) +
                                  std::abs(d[static_cast<size_t>(m + 1)]);
                if (std::abs(e[static_cast<size_t>(m)]) <= 1e-16 * dd) break;
            }
            if (m == l) break;
            double g = (d[static_cast<size_t>(l + 1)] - d[static_cast<size_t>(l)]) /
                       (2.0 * e[static_cast<size_t>(l)]);
            double r = std::hypot(g, 1.0);
            g = d[static_cast<size_t>(m)] - d[static_cast<size_t>(l)] +
                e[static_cast<size_t>(l)] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[static_cast<size_t>(i)];
                const double b = c * e[static_cast<size_t>(i)];
                r = std::hypot(f, g);
                e[static_cast<size_t>(i + 1)] = r;
                if (r == 0.0) {
                    d[static_cast<size_t>(i + 1)] -= p;
                    e[static_cast<size_t>(m)] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[static_cast<size_t>(i + 1)] - p;
                r = (d[static_cast<size_t>(i)] - g) * s + 2.0 * c * b;
                p = s * r;
                d[static_cast<size_t>(i + 1)] = g + p;
                g = c * r - b;
            }
            if (r == 0.0 && m - 1 >= l) continue;
            d[static_cast<size_t>(l)] -= p;
            e[static_cast<size_t>(l)] = g;
            e[static_cast<size_t>(m)] = 0.0;
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace detail

/**
 * Roots of P_n from the eigenvalues of its Jacobi matrix (diagonal zero,
 * off-diagonal k/sqrt(4k^2-1)), stable at degrees far beyond what the
 * monomial coefficients can express in doubles.
 */
inline std::vector<double> legendre_roots(int n) {
    if (n < 1) return {};
    std::vector<double> d(static_cast<size_t>(n), 0.0), e(static_cast<size_t>(n), 0.0);
    for (int k = 1; k < n; ++k)
        e[static_cast<size_t>(k)] = k / std::sqrt(4.0 * k * k - 1.0);
    return detail::tridiagonal_eigenvalues(std::move(d), std::move(e));
}

/// Roots of L_n from its Jacobi matrix (diagonal 2k+1, off-diagonal k).
inline std::vector<double> laguerre_roots(int n) {
    if (n < 1) return {};
    std::vector<double> d(static_cast<size_t>(n)), e(static_cast<size_t>(n), 0.0);
    for (int k = 0; k < n; ++k) d[static_cast<size_t>(k)] = 2.0 * k + 1.0;
    for (int k = 1; k < n; ++k) e[static_cast<size_t>(k)] = static_cast<double>(k);
    return detail::tridiagonal_eigenvalues(std::move(d), std::move(e));
}

/// Evaluates P_n and P_n' at x by the recurrences, without coefficients.
inline std::pair<double, double> legendre_eval(int n, double x) {
    if (n == 0) return {1.0, 0.0};
    double prev = 1.0, cur = x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0) * x * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    const double dp = n * (x * cur - prev) / (x * x - 1.0);
    return {cur, dp};
}

/// Evaluates L_n and L_n' at x by the recurrences.
inline std::pair<double, double> laguerre_eval(int n, double x) {
    if (n == 0) return {1.0, 0.0};
    double prev = 1.0, cur = 1.0 - x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    const double dl = (x == 0.0) ? -static_cast<double>(n) : n * (cur - prev) / x;
    return {cur, dl};
}

}  // namespace isodyn

#endif  // ISODYN_ORTHO_HPP
