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

#ifndef ISODYN_MOBIUS_HPP
#define ISODYN_MOBIUS_HPP

#include <array>
#include <bit>
#include <limits>

#include "isodyn/isodyn.hpp"

namespace isodyn {

/**
 * Invertible 2x2 complex matrix up to scale, acting on the sphere by
 * z -> (alpha z + beta) / (gamma z + delta).
 */
template <class K>
struct MobiusMap {
    K alpha, beta, gamma, delta;

    MobiusMap(K a, K b, K c, K d)
        : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c)), delta(std::move(d)) {
        if (scalar_traits<K>::is_zero(determinant()))
            throw DegenerateInput("Mobius map must be invertible");
    }

    static MobiusMap identity() {
        return {scalar_traits<K>::one(), scalar_traits<K>::zero(), scalar_traits<K>::zero(),
                scalar_traits<K>::one()};
    }

    K determinant() const { return alpha * delta - beta * gamma; }

    /// Inverse up to scale.
    MobiusMap inverse() const { return {delta, -beta, -gamma, alpha}; }

    MobiusMap compose(const MobiusMap& o) const {
        return {alpha * o.alpha + beta * o.gamma, alpha * o.beta + beta * o.delta,
                gamma * o.alpha + delta * o.gamma, gamma * o.beta + delta * o.delta};
    }

    /// Rescales so the max-magnitude entry is 1 (float mode convention).
    MobiusMap normalized() const
        requires(!scalar_traits<K>::is_exact)
    {
        double m = std::max({std::abs(alpha), std::abs(beta), std::abs(gamma), std::abs(delta)});
        K inv = K(1.0 / m, 0.0);
        return {alpha * inv, beta * inv, gamma * inv, delta * inv};
    }
};

using MobiusQ = MobiusMap<GaussianRational>;
using MobiusC = MobiusMap<Complex>;

inline MobiusC to_float(const MobiusQ& m) {
    return {m.alpha.to_complex(), m.beta.to_complex(), m.gamma.to_complex(), m.delta.to_complex()};
}

/// Sphere action with the conventions z=inf -> alpha/gamma, pole -> inf.
inline SpherePoint apply_point(const MobiusC& m, const SpherePoint& p) {
    if (p.at_infinity) {
        if (std::abs(m.gamma) == 0.0) return SpherePoint::infinity();
        return SpherePoint::finite(m.alpha / m.gamma);
    }
    Complex den = m.gamma * p.z + m.delta;
    Complex num = m.alpha * p.z + m.beta;
    if (std::abs(den) == 0.0 || std::abs(num) > 1e15 * std::abs(den))
        return SpherePoint::infinity();
    return SpherePoint::finite(num / den);
}

/**
 * Action on degree-n binary forms by homogeneous substitution: the returned
 * polynomial (of degree <= n; a deficit encodes roots at infinity) has
 * homogenization P(alpha x + beta y, gamma x + delta y). Its zero locus on
 * the sphere is the image of the zero locus of P under the *inverse* map.
 */
template <class K>
Poly<K> apply_form(const MobiusMap<K>& m, const Poly<K>& p, int n) {
    if (p.degree() > n) throw DegreeMismatch("apply_form: polynomial degree exceeds form degree");
    // (alpha t + beta)^k (gamma t + delta)^(n-k), summed with coefficient c_k.
    Poly<K> la({m.beta, m.alpha});
    Poly<K> lb({m.delta, m.gamma});
    std::vector<Poly<K>> pow_a(static_cast<size_t>(n + 1)), pow_b(static_cast<size_t>(n + 1));
    pow_a[0] = Poly<K>::one();
    pow_b[0] = Poly<K>::one();
    for (int k = 1; k <= n; ++k) {
        pow_a[static_cast<size_t>(k)] = pow_a[static_cast<size_t>(k - 1)] * la;
        pow_b[static_cast<size_t>(k)] = pow_b[static_cast<size_t>(k - 1)] * lb;
    }
    Poly<K> out;
    for (int k = 0; k <= n; ++k) {
        K c = p.coeff(k);
        if (scalar_traits<K>::is_zero(c)) continue;
        out = out + pow_a[static_cast<size_t>(k)] * pow_b[static_cast<size_t>(n - k)] * c;
    }
    return out;
}

/**
 * Transform of a rational map whose divisor of zeros/poles moves *forward*
 * by M (the direction convention used throughout the equivariance harness):
 * both parts are substituted with the inverse matrix.
 */
template <class K>
RationalMap<K> transform_map(const MobiusMap<K>& m, const RationalMap<K>& w) {
    MobiusMap<K> inv = m.inverse();
    Poly<K> p = apply_form(inv, w.num, w.d + w.pole_degree);
    Poly<K> q = apply_form(inv, w.den, w.pole_degree);
    if (p.degree() != w.d + w.pole_degree || q.degree() != w.pole_degree)
        throw DegenerateInput("transform sends a root or pole to infinity");
    return {std::move(p), std::move(q), w.d, w.pole_degree};
}

/// Pointwise Mobius action on a divisor; multiplicities and degree preserved.
inline SphereDivisor apply_divisor(const MobiusC& m, const SphereDivisor& d) {
    SphereDivisor out;
    out.total_degree = d.total_degree;
    auto add = [&](const SpherePoint& p, int mult) {
        if (p.at_infinity)
            out.infinity_multiplicity += mult;
        else
            out.finite_points.emplace_back(p.z, mult);
    };
    for (const auto& [z, mult] : d.finite_points) add(apply_point(m, SpherePoint::finite(z)), mult);
    if (d.infinity_multiplicity > 0)
        add(apply_point(m, SpherePoint::infinity()), d.infinity_multiplicity);
    return out;
}

/// Perfect matching between two equal-degree divisors with minimal total
/// chordal cost (exact assignment by subset DP).
struct DivisorMatch {
    std::vector<std::pair<size_t, size_t>> assignment;
    double total_cost = 0.0;
};

inline DivisorMatch match_divisors(const SphereDivisor& d1, const SphereDivisor& d2) {
    auto a = d1.expanded();
    auto b = d2.expanded();
    if (a.size() != b.size())
        throw DegreeMismatch("match_divisors: divisors have different degrees");
    const size_t n = a.size();
    DivisorMatch match;
    if (n == 0) return match;
    if (n > 24) throw DegreeMismatch("match_divisors: divisor too large for exact assignment");

    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) cost[i][j] = chordal(a[i], b[j]);

    // dp over subsets of b: dp[s] = min cost of matching the first popcount(s)
    // points of a to the subset s.
    const size_t full = (size_t{1} << n) - 1;
    std::vector<double> dp(full + 1, std::numeric_limits<double>::infinity());
    std::vector<int> choice(full + 1, -1);
    dp[0] = 0.0;
    for (size_t s = 0; s < full; ++s) {
        if (!std::isfinite(dp[s])) continue;
        const size_t i = static_cast<size_t>(std::popcount(s));
        for (size_t j = 0; j < n; ++j) {
            if (s & (size_t{1} << j)) continue;
            size_t t = s | (size_t{1} << j);
            double c = dp[s] + cost[i][j];
            if (c < dp[t]) {
                dp[t] = c;
                choice[t] = static_cast<int>(j);
            }
        }
    }
    match.total_cost = dp[full];
    size_t s = full;
    while (s) {
        size_t j = static_cast<size_t>(choice[s]);
        size_t i = static_cast<size_t>(std::popcount(s)) - 1;
        match.assignment.emplace_back(i, j);
        s &= ~(size_t{1} << j);
    }
    return match;
}

/// Report of one equivariance trial.
struct EquivarianceReport {
    double cost = 0.0;
    bool pass = false;
};

/**
 * Checks that moving the isodynamic divisor of w forward by M equals the
 * isodynamic divisor of the transformed map, up to chordal matching cost.
 */
inline EquivarianceReport equivariance_check(const RationalMapC& w, const MobiusC& m, double tol) {
    RationalMapC wt = transform_map(m, w);
    auto report = validate(wt);
    if (report.status != Validity::Valid && report.status != Validity::Ambiguous)
        throw IsodynamicUndefined(std::string("transformed map invalid: ") +
                                  to_string(report.status));
    SphereDivisor d1 = apply_divisor(m, isodynamic_divisor(w));
    SphereDivisor d2 = isodynamic_divisor(wt);
    double cost = match_divisors(d1, d2).total_cost;
    return {cost, cost < tol};
}

}  // namespace isodyn

#endif  // ISODYN_MOBIUS_HPP
