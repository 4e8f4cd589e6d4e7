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

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "isodyn/golden.hpp"

using namespace isodyn;
using namespace isodyn::testing;

TEST_CASE("polar pencil of a polynomial", "[isodyn]") {
    PolyQ p = monicq({0, 0, -1});  // z^3 - 1
    auto pen = polar_pencil(RationalMapQ::from_polynomial(p));
    CHECK(pen.a_part == PolyQ::constant(gr(-3)));
    CHECK(pen.b_part == p.derivative());
    // Reconstruction at u = 2 equals A + 2B
    CHECK(pen.at(gr(2)) == pen.a_part + pen.b_part * gr(2));
}

TEST_CASE("isodynamic polynomial matches the cubic golden form", "[isodyn]") {
    // z^3 - 1: golden quadratic degenerates to 9u, our normalization is 4x that
    PolyQ id = isodynamic_poly(RationalMapQ::from_polynomial(monicq({0, 0, -1})));
    CHECK(id == PolyQ({gr(0), gr(36)}));

    // generic cubic against the tabulated quadratic, fixed ratio 4
    std::array<GaussianRational, 5> v{gr(2), gr(-1), gr(3), gr(0), gr(0)};
    PolyQ ref = golden::eval_in_u(golden::kId3, v);
    PolyQ id2 = isodynamic_poly(RationalMapQ::from_polynomial(monicq({2, -1, 3})));
    CHECK(id2 == ref * gr(4));
}

TEST_CASE("validity classification", "[isodyn]") {
    // triple root
    auto triple = RationalMapQ::from_polynomial(monicq({-3, 3, -1}) * monicq({2}));
    CHECK(validate(triple).status == Validity::MultiplicityTooHigh);
    CHECK_THROWS_AS(isodynamic_poly(triple), IsodynamicUndefined);

    // shared numerator/denominator root
    RationalMapQ shared = RationalMapQ::from_fraction(monicq({-1}) * monicq({2, 3, 4}),
                                                      monicq({-1}));
    CHECK(validate(shared).status == Validity::NotCoprime);
    CHECK_THROWS_AS(isodynamic_poly(shared), IsodynamicUndefined);

    // binomial-type degeneracy: P = (z-2)^3 has constant associated map
    PolyQ bin = monicq({-6, 12, -8});
    CHECK_THROWS_AS(associated_rational(RationalMapQ::from_polynomial(bin)), DegenerateInput);

    // generic case is valid
    CHECK(validate(RationalMapQ::from_polynomial(monicq({1, 2, 3}))).valid());
}

TEST_CASE("associated rational function of z^3-1", "[isodyn]") {
    auto r = associated_rational(RationalMapQ::from_polynomial(monicq({0, 0, -1})));
    // zP' - 3P = 3 over 3z^2: proportional to 1/z^2
    CHECK(r.num.degree() == 0);
    CHECK(r.den.degree() == 2);
    CHECK(r.num.coeff(0) / r.den.leading() == gr(1));
    CHECK(r.den.coeff(0).is_zero());
    CHECK(r.den.coeff(1).is_zero());
}

TEST_CASE("critical value divisor of 1/z^2", "[isodyn]") {
    SphereMapC r{PolyC::constant(Complex(3, 0)),
                 PolyC({Complex(0, 0), Complex(0, 0), Complex(3, 0)})};
    auto div = critical_value_divisor(r);
    CHECK(div.total_degree == 2);
    CHECK(div.multiplicity_sum() == 2);
    // critical points 0 and infinity map to infinity and 0
    CHECK(div.infinity_multiplicity == 1);
    REQUIRE(div.finite_points.size() == 1);
    CHECK(std::abs(div.finite_points.front().first) < 1e-12);
}

TEST_CASE("divisor degree law and infinity padding", "[isodyn]") {
    // z^4 + 1: Discr(P') = 0, so the u-polynomial drops degree and the
    // divisor picks up the deficit at infinity.
    PolyQ p = monicq({0, 0, 0, 1});
    PolyQ id = isodynamic_poly(RationalMapQ::from_polynomial(p));
    CHECK(id.degree() == 2);
    CHECK(discriminant(p.derivative()) == gr(0));
    auto div = isodynamic_divisor(RationalMapQ::from_polynomial(p));
    CHECK(div.total_degree == 4);
    CHECK(div.multiplicity_sum() == 4);
    CHECK(div.infinity_multiplicity == 2);

    // generic quartic has Discr(P') != 0 and full degree 2d-4
    PolyQ g = monicq({1, 2, 3, 5});
    CHECK_FALSE(discriminant(g.derivative()) == gr(0));
    CHECK(isodynamic_poly(RationalMapQ::from_polynomial(g)).degree() == 4);
}

TEST_CASE("exact and float divisors agree", "[isodyn]") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> coef(-4, 4);
    int done = 0;
    while (done < 8) {
        int d = 3 + done % 3;
        std::vector<long long> tail(static_cast<size_t>(d));
        for (auto& x : tail) x = coef(rng);
        PolyQ p = monicq(tail);
        auto wq = RationalMapQ::from_polynomial(p);
        if (!validate(wq).valid()) continue;
        SphereDivisor exact_div, float_div;
        try {
            exact_div = isodynamic_divisor(wq);
            float_div = isodynamic_divisor(to_float(wq));
        } catch (const Error&) {
            continue;
        }
        CHECK(matching_cost(exact_div, float_div) < 1e-7);
        ++done;
    }
}

TEST_CASE("double roots are isodynamic points", "[isodyn]") {
    // P with a double root keeps that root in the divisor even though it
    // cancels out of the reduced associated map.
    PolyC p = poly_from_roots({Complex(1, 0), Complex(1, 0), Complex(-2, 1), Complex(0, -1)});
    auto w = RationalMapC::from_polynomial(p);
    auto div = isodynamic_divisor(w);
    CHECK(div.multiplicity_sum() == 4);
    double best = 1e9;
    for (const auto& [z, m] : div.finite_points) best = std::min(best, std::abs(z - Complex(1, 0)));
    CHECK(best < 1e-7);
}
