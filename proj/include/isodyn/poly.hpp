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

#ifndef ISODYN_POLY_HPP
#define ISODYN_POLY_HPP

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "isodyn/scalar.hpp"

namespace isodyn {

/// Degree sentinel of the identically zero polynomial.
inline constexpr int kZeroDegree = -1;

/**
 * Univariate polynomial with coefficients in K (either GaussianRational for
 * exact mode or std::complex<double> for float mode). Coefficients are stored
 * ascending in the power of the variable and kept trimmed: the stored leading
 * coefficient is nonzero unless the polynomial is identically zero.
 *
 * Values are immutable in spirit: all operations return new polynomials.
 */
template <class K>
class Poly {
  public:
    using scalar_type = K;

    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(K v) { return Poly(std::vector<K>{std::move(v)}); }
    static Poly one() { return constant(scalar_traits<K>::one()); }
    /// c * z^k
    static Poly monomial(K c, int k) {
        std::vector<K> v(static_cast<size_t>(k) + 1, scalar_traits<K>::zero());
        v.back() = std::move(c);
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// Coefficient of z^k (zero beyond the stored range).
    K coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return scalar_traits<K>::zero();
        return c_[static_cast<size_t>(k)];
    }
    const std::vector<K>& coeffs() const { return c_; }

    K leading() const {
        if (is_zero()) throw DegenerateInput("leading coefficient of zero polynomial");
        return c_.back();
    }

    K eval(const K& x) const {
        K acc = scalar_traits<K>::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> d(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * K(static_cast<int>(k));
        return Poly(std::move(d));
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (scalar_traits<K>::one() / leading());
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), scalar_traits<K>::zero());
        for (size_t k = 0; k < a.c_.size(); ++k) r[k] = r[k] + a.c_[k];
        for (size_t k = 0; k < b.c_.size(); ++k) r[k] = r[k] + b.c_[k];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), scalar_traits<K>::zero());
        for (size_t k = 0; k < a.c_.size(); ++k) r[k] = r[k] + a.c_[k];
        for (size_t k = 0; k < b.c_.size(); ++k) r[k] = r[k] - b.c_[k];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<K> r(a.c_);
        for (auto& x : r) x = -x;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, scalar_traits<K>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const K& s) {
        if (scalar_traits<K>::is_zero(s)) return Poly();
        std::vector<K> r(a.c_);
        for (auto& x : r) x = x * s;
        return Poly(std::move(r));
    }
    friend Poly operator*(const K& s, const Poly& a) { return a * s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// z -> s*z substitution.
    Poly scale_var(const K& s) const {
        std::vector<K> r(c_);
        K p = scalar_traits<K>::one();
        for (size_t k = 1; k < r.size(); ++k) {
            p = p * s;
            r[k] = r[k] * p;
        }
        return Poly(std::move(r));
    }

  private:
    void trim() {
        while (!c_.empty() && scalar_traits<K>::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<K> c_;
};

using PolyQ = Poly<GaussianRational>;
using PolyC = Poly<Complex>;

inline PolyC to_float(const PolyQ& p) {
    std::vector<Complex> r(static_cast<size_t>(p.degree() + 1));
    for (int k = 0; k <= p.degree(); ++k) r[static_cast<size_t>(k)] = p.coeff(k).to_complex();
    return PolyC(std::move(r));
}

/// Euclidean division over a coefficient field; returns (quotient, remainder).
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw DegenerateInput("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<K>(), a};
    std::vector<K> rem(static_cast<size_t>(a.degree() + 1));
    for (int k = 0; k <= a.degree(); ++k) rem[static_cast<size_t>(k)] = a.coeff(k);
    std::vector<K> quo(static_cast<size_t>(a.degree() - b.degree() + 1), scalar_traits<K>::zero());
    const K inv_lead = scalar_traits<K>::one() / b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        K q = rem[static_cast<size_t>(k + b.degree())] * inv_lead;
        quo[static_cast<size_t>(k)] = q;
        if (!scalar_traits<K>::is_zero(q))
            for (int j = 0; j <= b.degree(); ++j)
                rem[static_cast<size_t>(k + j)] = rem[static_cast<size_t>(k + j)] - q * b.coeff(j);
    }
    return {Poly<K>(std::move(quo)), Poly<K>(std::move(rem))};
}

/// Exact quotient; throws if b does not divide a (exact coefficients only).
inline PolyQ divide_exact(const PolyQ& a, const PolyQ& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error("divide_exact: nonzero remainder");
    return q;
}

/**
 * Monic gcd over the exact coefficient field (Euclid). gcd(0,0) is an error,
 * per the DegenerateInput contract.
 */
inline PolyQ gcd_poly(PolyQ a, PolyQ b) {
    if (a.is_zero() && b.is_zero()) throw DegenerateInput("gcd of two zero polynomials");
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/**
 * Squarefree decomposition (Yun): returns pairs (factor, multiplicity) with
 * distinct squarefree monic factors; multiplicities weighted by factor degree
 * sum to deg f.
 */
inline std::vector<std::pair<PolyQ, int>> squarefree_profile(const PolyQ& f) {
    if (f.is_zero()) throw DegenerateInput("squarefree profile of zero polynomial");
    std::vector<std::pair<PolyQ, int>> out;
    if (f.degree() < 1) return out;
    PolyQ a = f.monic();
    PolyQ d = a.derivative();
    PolyQ g = gcd_poly(a, d);
    PolyQ w = divide_exact(a, g);
    PolyQ y = divide_exact(d, g);
    int m = 1;
    while (w.degree() >= 1) {
        PolyQ z = y - w.derivative();
        PolyQ f_m = gcd_poly(w, z);
        if (f_m.degree() >= 1) out.emplace_back(f_m, m);
        w = divide_exact(w, f_m);
        if (w.degree() < 1) break;
        y = divide_exact(z, f_m);
        ++m;
    }
    return out;
}

/// Largest root multiplicity of an exact polynomial.
inline int max_multiplicity(const PolyQ& f) {
    int m = 0;
    for (const auto& [fac, mult] : squarefree_profile(f)) m = std::max(m, mult);
    return m;
}

namespace detail {

/// Determinant by ordinary elimination over a field (exact for rationals,
/// partial pivoting for doubles).
template <class K>
K det_field(std::vector<std::vector<K>> m) {
    const size_t n = m.size();
    K det = scalar_traits<K>::one();
    bool neg = false;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        double best = scalar_traits<K>::pivot_size(m[col][col]);
        for (size_t r = col + 1; r < n; ++r) {
            double s = scalar_traits<K>::pivot_size(m[r][col]);
            if (s > best) {
                best = s;
                piv = r;
            }
        }
        if (best == 0.0) return scalar_traits<K>::zero();
        if (piv != col) {
            std::swap(m[piv], m[col]);
            neg = !neg;
        }
        det = det * m[col][col];
        const K inv = scalar_traits<K>::one() / m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (scalar_traits<K>::is_zero(m[r][col])) continue;
            K factor = m[r][col] * inv;
            for (size_t c = col; c < n; ++c) m[r][c] = m[r][c] - factor * m[col][c];
        }
    }
    return neg ? -det : det;
}

/// Fraction-free (Bareiss) determinant over the polynomial ring Q(i)[u].
/// All divisions are exact by the Bareiss identity.
inline PolyQ det_bareiss(std::vector<std::vector<PolyQ>> m) {
    const size_t n = m.size();
    if (n == 0) return PolyQ::one();
    PolyQ prev = PolyQ::one();
    bool neg = false;
    for (size_t col = 0; col + 1 < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return PolyQ();
        if (piv != col) {
            std::swap(m[piv], m[col]);
            neg = !neg;
        }
        for (size_t r = col + 1; r < n; ++r) {
            for (size_t c = col + 1; c < n; ++c)
                m[r][c] = divide_exact(m[col][col] * m[r][c] - m[r][col] * m[col][c], prev);
            m[r][col] = PolyQ();
        }
        prev = m[col][col];
    }
    return neg ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

/// Sylvester matrix of f (degree df) and g (degree dg) with entry extractor.
template <class E, class GetF, class GetG>
std::vector<std::vector<E>> sylvester(int df, int dg, GetF&& fc, GetG&& gc, const E& zero) {
    const size_t n = static_cast<size_t>(df + dg);
    std::vector<std::vector<E>> m(n, std::vector<E>(n, zero));
    for (int r = 0; r < dg; ++r)
        for (int k = 0; k <= df; ++k) m[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = fc(df - k);
    for (int r = 0; r < df; ++r)
        for (int k = 0; k <= dg; ++k)
            m[static_cast<size_t>(dg + r)][static_cast<size_t>(r + k)] = gc(dg - k);
    return m;
}

}  // namespace detail

/**
 * Sylvester resultant with the classical convention
 *   Res(f,g) = lc(f)^{deg g} * prod g(alpha_i)  over the roots alpha_i of f.
 */
template <class K>
K resultant(const Poly<K>& f, const Poly<K>& g) {
    if (f.is_zero() || g.is_zero()) throw DegenerateInput("resultant of zero polynomial");
    if (f.degree() == 0) {
        K r = scalar_traits<K>::one();
        for (int k = 0; k < g.degree(); ++k) r = r * f.coeff(0);
        return r;
    }
    if (g.degree() == 0) {
        K r = scalar_traits<K>::one();
        for (int k = 0; k < f.degree(); ++k) r = r * g.coeff(0);
        return r;
    }
    auto m = detail::sylvester<K>(
        f.degree(), g.degree(), [&](int k) { return f.coeff(k); }, [&](int k) { return g.coeff(k); },
        scalar_traits<K>::zero());
    return detail::det_field(std::move(m));
}

/**
 * Discriminant with the normalization
 *   Discr(f) = (-1)^{n(n-1)/2} / lc(f) * Res(f, f').
 */
template <class K>
K discriminant(const Poly<K>& f) {
    if (f.degree() < 1) throw DegenerateInput("discriminant needs degree >= 1");
    if (f.degree() == 1) return scalar_traits<K>::one();
    const int n = f.degree();
    K r = resultant(f, f.derivative()) / f.leading();
    if ((n * (n - 1) / 2) % 2 != 0) r = -r;
    return r;
}

}  // namespace isodyn

#endif  // ISODYN_POLY_HPP
