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

#ifndef ISODYN_TESTS_HELPERS_HPP
#define ISODYN_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "isodyn/mobius.hpp"
#include "isodyn/strata.hpp"

namespace isodyn::testing {

inline GaussianRational gr(long long num, long long den = 1) {
    return GaussianRational(Rational(num, den));
}

inline GaussianRational gri(long long re_n, long long im_n, long long den = 1) {
    return {Rational(re_n, den), Rational(im_n, den)};
}

/// Monic exact polynomial from descending integer coefficients after the
/// leading 1, e.g. monicq({0,0,-1}) = z^3 - 1.
inline PolyQ monicq(const std::vector<long long>& tail) {
    std::vector<GaussianRational> c(tail.size() + 1);
    c.back() = GaussianRational(1);
    for (size_t i = 0; i < tail.size(); ++i) c[tail.size() - 1 - i] = GaussianRational(tail[i]);
    return PolyQ(std::move(c));
}

inline Complex random_unit_box(std::mt19937_64& rng, double half_width = 2.0) {
    std::uniform_real_distribution<double> u(-half_width, half_width);
    return {u(rng), u(rng)};
}

/// Float map with random roots and poles, redrawn until strictly valid.
inline RationalMapC random_valid_map(std::mt19937_64& rng, int d, int pole, double half_width = 2.0,
                                     double min_sep = 0.0) {
    for (;;) {
        std::vector<Complex> zr(static_cast<size_t>(d + pole)), pr(static_cast<size_t>(pole));
        for (auto& z : zr) z = random_unit_box(rng, half_width);
        for (auto& z : pr) z = random_unit_box(rng, half_width);
        if (min_sep > 0.0) {
            std::vector<Complex> all = zr;
            all.insert(all.end(), pr.begin(), pr.end());
            bool ok = true;
            for (size_t i = 0; i < all.size() && ok; ++i)
                for (size_t j = i + 1; j < all.size() && ok; ++j)
                    if (std::abs(all[i] - all[j]) < min_sep) ok = false;
            if (!ok) continue;
        }
        RationalMapC w{poly_from_roots(zr), poly_from_roots(pr), d, pole};
        try {
            if (validate(w).status == Validity::Valid) return w;
        } catch (const Error&) {
        }
    }
}

/// Mobius map with entries in the unit box, redrawn while nearly singular.
inline MobiusC random_mobius(std::mt19937_64& rng) {
    for (;;) {
        Complex a = random_unit_box(rng, 1.0), b = random_unit_box(rng, 1.0),
                c = random_unit_box(rng, 1.0), d = random_unit_box(rng, 1.0);
        if (std::abs(a * d - b * c) < 0.1) continue;
        return MobiusC(a, b, c, d).normalized();
    }
}

inline double matching_cost(const SphereDivisor& a, const SphereDivisor& b) {
    return match_divisors(a, b).total_cost;
}

}  // namespace isodyn::testing

#endif  // ISODYN_TESTS_HELPERS_HPP
