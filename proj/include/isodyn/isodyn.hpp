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

#ifndef ISODYN_ISODYN_HPP
#define ISODYN_ISODYN_HPP

#include <optional>

#include "isodyn/pencil.hpp"
#include "isodyn/roots.hpp"

namespace isodyn {

/// A point on the Riemann sphere: a finite complex value or infinity.
struct SpherePoint {
    Complex z{0.0, 0.0};
    bool at_infinity = false;

    static SpherePoint infinity() { return {Complex(0, 0), true}; }
    static SpherePoint finite(Complex v) { return {v, false}; }
};

/// Chordal metric on the sphere: d(z,w) = 2|z-w| / sqrt((1+|z|^2)(1+|w|^2)).
inline double chordal(const SpherePoint& a, const SpherePoint& b) {
    if (a.at_infinity && b.at_infinity) return 0.0;
    if (a.at_infinity) return 2.0 / std::sqrt(1.0 + std::norm(b.z));
    if (b.at_infinity) return 2.0 / std::sqrt(1.0 + std::norm(a.z));
    return 2.0 * std::abs(a.z - b.z) / std::sqrt((1.0 + std::norm(a.z)) * (1.0 + std::norm(b.z)));
}

/**
 * Positive divisor on the Riemann sphere: a multiset of points with integer
 * multiplicities, with the point at infinity tracked separately.
 */
struct SphereDivisor {
    std::vector<std::pair<Complex, int>> finite_points;
    int infinity_multiplicity = 0;
    int total_degree = 0;

    int multiplicity_sum() const {
        int s = infinity_multiplicity;
        for (const auto& [z, m] : finite_points) s += m;
        return s;
    }

    std::vector<SpherePoint> expanded() const {
        std::vector<SpherePoint> out;
        for (const auto& [z, m] : finite_points)
            out.insert(out.end(), static_cast<size_t>(m), SpherePoint::finite(z));
        out.insert(out.end(), static_cast<size_t>(infinity_multiplicity), SpherePoint::infinity());
        return out;
    }
};

enum class Validity { Valid, NotCoprime, MultiplicityTooHigh, BinomialDegenerate, Ambiguous };

struct ValidityReport {
    Validity status = Validity::Valid;
    std::optional<Complex> witness;  // a root/point exhibiting the failure

    bool valid() const { return status == Validity::Valid; }
};

inline const char* to_string(Validity v) {
    switch (v) {
        case Validity::Valid: return "Valid";
        case Validity::NotCoprime: return "NotCoprime";
        case Validity::MultiplicityTooHigh: return "MultiplicityTooHigh";
        case Validity::BinomialDegenerate: return "BinomialDegenerate";
        case Validity::Ambiguous: return "Ambiguous";
    }
    return "?";
}

/**
 * A rational function w = p/q with deg p = d + pole_degree, deg q =
 * pole_degree. The polynomial case is pole_degree = 0 with q = 1.
 */
template <class K>
struct RationalMap {
    Poly<K> num;
    Poly<K> den;
    int d = 0;            // degree of the section, deg num - deg den
    int pole_degree = 0;  // degree of the pole divisor, deg den

    static RationalMap from_polynomial(Poly<K> p) {
        if (p.degree() < 1) throw DegenerateInput("polynomial input must have degree >= 1");
        int d = p.degree();
        return RationalMap{std::move(p), Poly<K>::one(), d, 0};
    }

    static RationalMap from_fraction(Poly<K> p, Poly<K> q) {
        if (p.is_zero() || q.is_zero()) throw DegenerateInput("rational map with zero part");
        int d = p.degree() - q.degree();
        if (d < 1) throw DegenerateInput("rational map needs deg num - deg den >= 1");
        int pd = q.degree();
        return RationalMap{std::move(p), std::move(q), d, pd};
    }

    /// Degree of the projective isodynamic divisor, 2d + 4*pole_degree - 4.
    int divisor_degree() const { return 2 * d + 4 * pole_degree - 4; }
};

using RationalMapQ = RationalMap<GaussianRational>;
using RationalMapC = RationalMap<Complex>;

inline RationalMapC to_float(const RationalMapQ& w) {
    return {to_float(w.num), to_float(w.den), w.d, w.pole_degree};
}

/// Sphere self-map num/den with numerator and denominator of equal degree.
template <class K>
struct SphereMap {
    Poly<K> num;
    Poly<K> den;

    int degree() const { return std::max(num.degree(), den.degree()); }
};

using SphereMapQ = SphereMap<GaussianRational>;
using SphereMapC = SphereMap<Complex>;

inline SphereMapC to_float(const SphereMapQ& r) { return {to_float(r.num), to_float(r.den)}; }

namespace detail {

/// Wronskian-style combination p'q - pq'.
template <class K>
Poly<K> cross_derivative(const Poly<K>& p, const Poly<K>& q) {
    return p.derivative() * q - p * q.derivative();
}

/// Multiply by z (shift coefficients up one slot).
template <class K>
Poly<K> shift_up(const Poly<K>& p) {
    return p * Poly<K>::monomial(scalar_traits<K>::one(), 1);
}

inline PolyC trim_rel(const PolyC& p, double rel = 1e-12) {
    double mx = 0.0;
    for (int k = 0; k <= p.degree(); ++k) mx = std::max(mx, std::abs(p.coeff(k)));
    if (mx == 0.0) return PolyC();
    std::vector<Complex> c(static_cast<size_t>(p.degree() + 1));
    for (int k = 0; k <= p.degree(); ++k)
        c[static_cast<size_t>(k)] = std::abs(p.coeff(k)) < rel * mx ? Complex(0, 0) : p.coeff(k);
    return PolyC(std::move(c));
}

}  // namespace detail

/**
 * Polar pencil of w = p/q: the numerator of d*w + (u-z)*w' as the pencil
 * A(z) + u*B(z) with A = d*p*q - z*(p'q - pq') and B = p'q - pq'. For a
 * polynomial (q = 1) this is A = dP - zP', B = P'.
 */
template <class K>
PolarPencil<K> polar_pencil(const RationalMap<K>& w) {
    Poly<K> phi = detail::cross_derivative(w.num, w.den);
    Poly<K> a = w.num * w.den * K(w.d) - detail::shift_up(phi);
    return {std::move(a), std::move(phi)};
}

// ---------------------------------------------------------------------------
// Validity
// ---------------------------------------------------------------------------

inline ValidityReport validate(const RationalMapQ& w) {
    if (w.pole_degree >= 1) {
        PolyQ g = gcd_poly(w.num, w.den);
        if (g.degree() >= 1) {
            ValidityReport r{Validity::NotCoprime, std::nullopt};
            auto rs = find_roots(to_float(g));
            if (!rs.roots.empty()) r.witness = rs.roots.front().first;
            return r;
        }
    }
    for (const Poly<GaussianRational>* part : {&w.num, &w.den}) {
        if (part->degree() < 3) continue;
        for (const auto& [fac, mult] : squarefree_profile(*part)) {
            if (mult >= 3) {
                ValidityReport r{Validity::MultiplicityTooHigh, std::nullopt};
                auto rs = find_roots(to_float(fac));
                if (!rs.roots.empty()) r.witness = rs.roots.front().first;
                return r;
            }
        }
    }
    // Constant associated rational function: numerator and denominator of
    // R_w linearly dependent, detected by a vanishing Wronskian.
    {
        PolyQ phi = detail::cross_derivative(w.num, w.den);
        PolyQ u = detail::shift_up(phi) - w.num * w.den * GaussianRational(w.d);
        if (detail::cross_derivative(u, phi).is_zero())
            return {Validity::BinomialDegenerate, std::nullopt};
    }
    return {Validity::Valid, std::nullopt};
}

inline ValidityReport validate(const RationalMapC& w, double tol = 1e-8) {
    auto rp = find_roots(w.num, tol * tol);
    std::vector<std::pair<Complex, int>> rq;
    if (w.den.degree() >= 1) rq = find_roots(w.den, tol * tol).roots;

    if (w.pole_degree >= 1) {
        for (const auto& [zp, mp] : rp.roots)
            for (const auto& [zq, mq] : rq)
                if (std::abs(zp - zq) < tol) return {Validity::NotCoprime, zp};
    }
    for (const auto& [z, m] : rp.roots)
        if (m >= 3) return {Validity::MultiplicityTooHigh, z};
    for (const auto& [z, m] : rq)
        if (m >= 3) return {Validity::MultiplicityTooHigh, z};
    {
        PolyC phi = detail::cross_derivative(w.num, w.den);
        PolyC u = detail::shift_up(phi) - w.num * w.den * Complex(w.d, 0);
        PolyC wr = detail::trim_rel(detail::cross_derivative(u, phi), 1e-10);
        if (wr.is_zero()) return {Validity::BinomialDegenerate, std::nullopt};
    }
    // Near-degenerate inputs: discriminant within 1e-12 (relative) of zero is
    // reported as Ambiguous rather than silently classified as valid.
    for (const Poly<Complex>* part : {&w.num, &w.den}) {
        if (part->degree() < 2) continue;
        double scale = 0.0;
        for (int k = 0; k <= part->degree(); ++k) scale = std::max(scale, std::abs(part->coeff(k)));
        double disc = std::abs(discriminant(*part));
        if (disc < 1e-12 * std::pow(scale, 2 * part->degree() - 2))
            return {Validity::Ambiguous, std::nullopt};
    }
    return {Validity::Valid, std::nullopt};
}

// ---------------------------------------------------------------------------
// Isodynamic polynomial and divisor
// ---------------------------------------------------------------------------

/**
 * The isodynamic polynomial in u: Discr_z of the polar pencil numerator.
 * Degree is at most 2d + 4*pole_degree - 4, with equality exactly when
 * Discr(p'q - pq') is nonzero.
 */
template <class K>
Poly<K> isodynamic_poly(const RationalMap<K>& w) {
    auto report = validate(w);
    // Ambiguous (near-degenerate float input) proceeds; definite failures of
    // the well-definedness conditions do not.
    if (!report.valid() && report.status != Validity::Ambiguous)
        throw IsodynamicUndefined(std::string("isodynamic map undefined: ") +
                                  to_string(report.status));
    auto pd = pencil_discriminant(polar_pencil(w));
    if (pd.identically_singular)
        throw IsodynamicUndefined("polar pencil identically singular");
    return pd.discr;
}

/**
 * Associated rational function R_w = z - d*w/w' as a reduced fraction;
 * numerator z*(p'q - pq') - d*p*q over denominator p'q - pq'. A sphere
 * self-map of degree d + 2*pole_degree - 1 for generic w.
 */
inline SphereMapQ associated_rational(const RationalMapQ& w) {
    PolyQ phi = detail::cross_derivative(w.num, w.den);
    PolyQ num = detail::shift_up(phi) - w.num * w.den * GaussianRational(w.d);
    if (phi.is_zero() || detail::cross_derivative(num, phi).is_zero())
        throw DegenerateInput("associated rational function is constant (binomial case)");
    PolyQ g = gcd_poly(num, phi);
    if (g.degree() >= 1) {
        num = divide_exact(num, g);
        phi = divide_exact(phi, g);
    }
    return {std::move(num), std::move(phi)};
}

inline SphereMapC associated_rational(const RationalMapC& w, double tol = 1e-7) {
    PolyC phi = detail::cross_derivative(w.num, w.den);
    PolyC num = detail::shift_up(phi) - w.num * w.den * Complex(w.d, 0);
    num = detail::trim_rel(num);
    phi = detail::trim_rel(phi);
    if (phi.is_zero() || detail::trim_rel(detail::cross_derivative(num, phi), 1e-10).is_zero())
        throw DegenerateInput("associated rational function is constant (binomial case)");
    // Cancel near-common roots (they arise from double roots of p or q).
    // Either part may be constant, e.g. z*phi - d*p*q collapses for z^d - c.
    std::vector<std::pair<Complex, int>> rn, rd;
    if (num.degree() >= 1) rn = find_roots(num).roots;
    if (phi.degree() >= 1) rd = find_roots(phi).roots;
    std::vector<Complex> keep_n, keep_d;
    std::vector<bool> used(rd.size(), false);
    for (auto& [zn, mn] : rn) {
        int mult = mn;
        for (size_t j = 0; j < rd.size(); ++j) {
            if (used[j]) continue;
            if (std::abs(zn - rd[j].first) < tol) {
                int cancel = std::min(mult, rd[j].second);
                mult -= cancel;
                rd[j].second -= cancel;
                if (rd[j].second == 0) used[j] = true;
            }
        }
        keep_n.insert(keep_n.end(), static_cast<size_t>(mult), zn);
    }
    for (size_t j = 0; j < rd.size(); ++j)
        keep_d.insert(keep_d.end(), static_cast<size_t>(rd[j].second), rd[j].first);
    PolyC red_num = poly_from_roots(keep_n) * num.leading();
    PolyC red_den = poly_from_roots(keep_d) * phi.leading();
    return {std::move(red_num), std::move(red_den)};
}

/**
 * Divisor of the critical values of a sphere self-map R. Finite critical
 * points are the roots of the Wronskian num'den - num den'; a degree deficit
 * of the Wronskian below 2n-2 is a critical point at infinity. Each critical
 * point contributes R at that point with the critical multiplicity; total
 * degree is exactly 2n-2.
 */
inline SphereDivisor critical_value_divisor(const SphereMapC& r, double tol = 1e-10) {
    const int n = r.degree();
    if (n < 1) throw DegenerateInput("constant map has no critical value divisor");

    PolyC wr = detail::trim_rel(detail::cross_derivative(r.num, r.den));
    SphereDivisor div;
    div.total_degree = 2 * n - 2;
    if (wr.is_zero()) throw DegenerateInput("degenerate sphere map (vanishing Wronskian)");

    auto value_at = [&](Complex z) -> SpherePoint {
        Complex nv = r.num.eval(z);
        Complex dv = r.den.eval(z);
        if (std::abs(dv) == 0.0 || std::abs(nv) > 1e14 * std::abs(dv))
            return SpherePoint::infinity();
        return SpherePoint::finite(nv / dv);
    };
    auto add = [&](SpherePoint p, int mult) {
        if (p.at_infinity) {
            div.infinity_multiplicity += mult;
            return;
        }
        div.finite_points.emplace_back(p.z, mult);
    };

    if (wr.degree() >= 1) {
        for (const auto& [z, m] : find_roots(wr, tol).roots) add(value_at(z), m);
    }
    int deficit = (2 * n - 2) - wr.degree();
    if (deficit > 0) {
        // Critical point at infinity with the deficit as multiplicity.
        SpherePoint v;
        if (r.num.degree() > r.den.degree())
            v = SpherePoint::infinity();
        else if (r.num.degree() < r.den.degree())
            v = SpherePoint::finite(Complex(0, 0));
        else
            v = SpherePoint::finite(r.num.leading() / r.den.leading());
        add(v, deficit);
    }
    return div;
}

/**
 * Projective isodynamic divisor of degree 2d + 4*pole_degree - 4. In exact
 * mode this is the root divisor of the isodynamic polynomial padded with the
 * point at infinity up to full degree. In float mode it is computed as the
 * critical-value divisor of the associated rational function, which avoids
 * the coefficient representation of the u-polynomial: clustered isodynamic
 * points are badly conditioned as polynomial roots but perfectly stable as
 * critical values.
 */
template <class K>
SphereDivisor isodynamic_divisor(const RationalMap<K>& w, double tol = 1e-10) {
    if constexpr (!scalar_traits<K>::is_exact) {
        auto report = validate(w);
        if (!report.valid() && report.status != Validity::Ambiguous)
            throw IsodynamicUndefined(std::string("isodynamic map undefined: ") +
                                      to_string(report.status));
        SphereMapC r = associated_rational(w);
        // Double roots of p or q cancel out of R and would drop their
        // isodynamic points; only the full-degree case may take the
        // critical-value shortcut.
        if (r.degree() == w.d + 2 * w.pole_degree - 1) {
            SphereDivisor div = critical_value_divisor(r, tol);
            div.total_degree = w.divisor_degree();
            return div;
        }
    }
    Poly<K> id = isodynamic_poly(w);
    PolyC idf;
    if constexpr (scalar_traits<K>::is_exact)
        idf = to_float(id);
    else
        idf = id;

    SphereDivisor div;
    div.total_degree = w.divisor_degree();
    if (idf.is_zero()) throw IsodynamicUndefined("isodynamic polynomial vanishes identically");
    if (idf.degree() >= 1) {
        auto rs = find_roots(idf, tol);
        div.finite_points = rs.roots;
    }
    div.infinity_multiplicity = div.total_degree - std::max(idf.degree(), 0);
    return div;
}

}  // namespace isodyn

#endif  // ISODYN_ISODYN_HPP
