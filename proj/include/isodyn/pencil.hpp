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

#ifndef ISODYN_PENCIL_HPP
#define ISODYN_PENCIL_HPP

#include <cmath>
#include <numbers>

#include "isodyn/poly.hpp"

namespace isodyn {

/**
 * Linear pencil A(z) + u*B(z): a one-parameter family of polynomials in z,
 * linear in the polar variable u.
 */
template <class K>
struct PolarPencil {
    Poly<K> a_part;  // u-free part A(z)
    Poly<K> b_part;  // coefficient of u, B(z)

    int z_degree() const { return std::max(a_part.degree(), b_part.degree()); }

    /// Reconstruction at a fixed value of u.
    Poly<K> at(const K& u) const { return a_part + b_part * u; }
};

using PencilQ = PolarPencil<GaussianRational>;
using PencilC = PolarPencil<Complex>;

inline PencilC to_float(const PencilQ& p) { return {to_float(p.a_part), to_float(p.b_part)}; }

/**
 * Result of a pencil discriminant. An identically singular pencil (the pencil
 * has a multiple z-root for every u) yields the zero polynomial together with
 * the flag, not an exception.
 */
template <class K>
struct PencilDiscriminant {
    Poly<K> discr;  // polynomial in u
    bool identically_singular = false;
};

/**
 * Discr_z(A(z) + u B(z)) as an exact polynomial in u. The Sylvester matrix
 * has entries linear in u and is expanded by fraction-free elimination; the
 * classical normalization divides by the u-dependent leading z-coefficient,
 * which is an exact polynomial division.
 */
inline PencilDiscriminant<GaussianRational> pencil_discriminant(const PencilQ& pencil) {
    const int n = pencil.z_degree();
    if (n < 1) throw DegenerateInput("pencil is constant in z");
    if (n == 1) return {PolyQ::one(), false};

    auto fz = [&](int k) {  // coefficient of z^k as a polynomial in u
        return PolyQ({pencil.a_part.coeff(k), pencil.b_part.coeff(k)});
    };
    auto fz_deriv = [&](int k) { return fz(k + 1) * GaussianRational(k + 1); };
    auto m = detail::sylvester<PolyQ>(n, n - 1, fz, fz_deriv, PolyQ());
    PolyQ res = detail::det_bareiss(std::move(m));
    if (res.is_zero()) return {PolyQ(), true};
    PolyQ d = divide_exact(res, fz(n));
    if ((n * (n - 1) / 2) % 2 != 0) d = -d;
    return {d, false};
}

/**
 * Float-mode pencil discriminant: Discr_z is evaluated at sample values of u
 * on a circle of radius 2 and the coefficients are recovered by inverse DFT.
 * Trailing coefficients below a relative threshold are trimmed, so the
 * returned degree can be below the generic bound (that deficit is the point
 * at infinity in divisor terms).
 */
inline PencilDiscriminant<Complex> pencil_discriminant(const PencilC& pencil,
                                                       double rel_eps = 1e-9) {
    const int n = pencil.z_degree();
    if (n < 1) throw DegenerateInput("pencil is constant in z");
    if (n == 1) return {PolyC::one(), false};

    const int samples = 2 * n + 1;  // u-degree is at most 2n-2
    const double radius = 2.0;
    const Complex lead_a = pencil.a_part.coeff(n);
    const Complex lead_b = pencil.b_part.coeff(n);

    double coeff_scale = 0.0;
    for (int k = 0; k <= n; ++k)
        coeff_scale = std::max({coeff_scale, std::abs(pencil.a_part.coeff(k)),
                                std::abs(pencil.b_part.coeff(k))});
    if (coeff_scale == 0.0) return {PolyC(), true};

    // Phase offset keeps samples away from the single u where the leading
    // z-coefficient vanishes.
    double phase = 0.37;
    std::vector<Complex> values(static_cast<size_t>(samples));
    for (int attempt = 0; attempt < 8; ++attempt) {
        bool ok = true;
        for (int j = 0; j < samples && ok; ++j) {
            const double ang = 2.0 * std::numbers::pi * j / samples + phase;
            const Complex u = radius * Complex(std::cos(ang), std::sin(ang));
            if (std::abs(lead_a + u * lead_b) < 1e-12 * coeff_scale) {
                ok = false;
                break;
            }
            std::vector<Complex> fc(static_cast<size_t>(n + 1));
            for (int k = 0; k <= n; ++k)
                fc[static_cast<size_t>(k)] = pencil.a_part.coeff(k) + u * pencil.b_part.coeff(k);
            values[static_cast<size_t>(j)] = discriminant(PolyC(std::move(fc)));
        }
        if (ok) break;
        phase += 0.21;
    }

    double vmax = 0.0;
    for (const auto& v : values) vmax = std::max(vmax, std::abs(v));
    // A discriminant is homogeneous of weight 2n-2 in the coefficients, so
    // coeff_scale^(2n-2) is the right yardstick: identically singular pencils
    // sit at roundoff level (~1e-15) below it, generic ones far above.
    const double ref = std::pow(coeff_scale, 2 * n - 2);
    if (vmax < 1e-11 * std::max(ref, 1e-300)) return {PolyC(), true};

    std::vector<Complex> coeffs(static_cast<size_t>(samples), Complex(0, 0));
    for (int k = 0; k < samples; ++k) {
        Complex acc(0, 0);
        for (int j = 0; j < samples; ++j) {
            const double ang = 2.0 * std::numbers::pi * j / samples + phase;
            const Complex u = radius * Complex(std::cos(ang), std::sin(ang));
            // Inverse Vandermonde on the circle: nodes u_j = R e^{i(2pi j/M + p)}.
            // c_k = (1/M) sum_j D_j u_j^{-k} works because nodes are the scaled,
            // rotated M-th roots of unity.
            acc += values[static_cast<size_t>(j)] * std::pow(u, -k);
        }
        coeffs[static_cast<size_t>(k)] = acc / static_cast<double>(samples);
    }
    // Relative trim against the largest coefficient.
    double cmax = 0.0;
    for (const auto& c : coeffs) cmax = std::max(cmax, std::abs(c));
    for (auto& c : coeffs)
        if (std::abs(c) < rel_eps * cmax) c = Complex(0, 0);
    return {PolyC(std::move(coeffs)), false};
}

/**
 * True iff the pencil has a multiple z-root for every value of u, which
 * happens exactly when A and B share a root of multiplicity >= 2 in each.
 */
inline bool pencil_always_singular(const PencilQ& pencil) {
    const PolyQ& a = pencil.a_part;
    const PolyQ& b = pencil.b_part;
    if (a.is_zero() && b.is_zero()) throw DegenerateInput("pencil is identically zero");
    if (a.is_zero()) return b.degree() >= 1 && max_multiplicity(b) >= 2;
    if (b.is_zero()) return a.degree() >= 1 && max_multiplicity(a) >= 2;
    if (a.degree() < 2 || b.degree() < 2) return false;
    PolyQ g = gcd_poly(gcd_poly(a, a.derivative()), gcd_poly(b, b.derivative()));
    return g.degree() >= 1;
}

inline bool pencil_always_singular(const PencilC& pencil) {
    return pencil_discriminant(pencil).identically_singular;
}

}  // namespace isodyn

#endif  // ISODYN_PENCIL_HPP
