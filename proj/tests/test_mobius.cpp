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

using namespace isodyn;
using namespace isodyn::testing;

TEST_CASE("Mobius point action and inverse", "[mobius]") {
    MobiusC m(Complex(1, 0), Complex(2, 0), Complex(1, 0), Complex(1, 0));  // (z+2)/(z+1)
    auto at = [&](Complex z) { return apply_point(m, SpherePoint::finite(z)); };
    CHECK(std::abs(at(Complex(0, 0)).z - Complex(2, 0)) < 1e-15);
    CHECK(at(Complex(-1, 0)).at_infinity);
    CHECK(std::abs(apply_point(m, SpherePoint::infinity()).z - Complex(1, 0)) < 1e-15);

    auto round = apply_point(m.inverse(), at(Complex(0.3, 0.7)));
    CHECK(std::abs(round.z - Complex(0.3, 0.7)) < 1e-12);

    auto comp = m.compose(m.inverse());
    // composition with the inverse is a scalar multiple of the identity
    CHECK(std::abs(comp.beta) < 1e-15);
    CHECK(std::abs(comp.gamma) < 1e-15);
    CHECK(std::abs(comp.alpha - comp.delta) < 1e-15);

    CHECK_THROWS_AS(MobiusC(Complex(1, 0), Complex(2, 0), Complex(2, 0), Complex(4, 0)),
                    DegenerateInput);
}

TEST_CASE("form substitution moves roots by the inverse map", "[mobius]") {
    // translation z -> z+1 applied to the form z-1: root of the result is
    // the inverse image 0
    MobiusC shift(Complex(1, 0), Complex(1, 0), Complex(0, 0), Complex(1, 0));
    PolyC p({Complex(-1, 0), Complex(1, 0)});
    PolyC moved = apply_form(shift, p, 1);
    REQUIRE(moved.degree() == 1);
    CHECK(std::abs(-moved.coeff(0) / moved.coeff(1)) < 1e-15);

    // a root sent to infinity shows up as a degree deficit of the form
    MobiusC inv(Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0));  // z -> 1/z
    PolyC q({Complex(0, 0), Complex(1, 0)});  // root at 0
    PolyC movedq = apply_form(inv.inverse(), q, 1);
    CHECK(movedq.degree() == 0);  // image root is at infinity

    CHECK_THROWS_AS(apply_form(shift, poly_from_roots({Complex(0, 0), Complex(1, 0)}), 1),
                    DegreeMismatch);
}

TEST_CASE("transform_map moves the zero divisor forward", "[mobius]") {
    std::mt19937_64 rng(31);
    MobiusC m = random_mobius(rng);
    std::vector<Complex> roots{Complex(0.5, 0.2), Complex(-1.2, 0.4), Complex(0.1, -1.0),
                               Complex(1.4, 0.9)};
    auto w = RationalMapC::from_polynomial(poly_from_roots(roots));
    auto wt = transform_map(m, w);
    auto moved = find_roots(wt.num).roots;
    REQUIRE(moved.size() == roots.size());
    for (const auto& r : roots) {
        SpherePoint img = apply_point(m, SpherePoint::finite(r));
        REQUIRE_FALSE(img.at_infinity);
        double best = 1e9;
        for (const auto& [z, mult] : moved) best = std::min(best, std::abs(z - img.z));
        CHECK(best < 1e-9);
    }
}

TEST_CASE("divisor matching", "[mobius]") {
    SphereDivisor a, b;
    a.finite_points = {{Complex(1, 0), 2}, {Complex(0, 1), 1}};
    a.infinity_multiplicity = 1;
    a.total_degree = 4;
    b.finite_points = {{Complex(0, 1), 1}, {Complex(1, 0), 2}};
    b.infinity_multiplicity = 1;
    b.total_degree = 4;
    CHECK(matching_cost(a, b) < 1e-15);

    SphereDivisor c = b;
    c.finite_points[0].first += Complex(1e-3, 0);
    double cost = matching_cost(a, c);
    CHECK(cost > 1e-4);
    CHECK(cost < 1e-2);

    SphereDivisor wrong;
    wrong.finite_points = {{Complex(0, 0), 1}};
    wrong.total_degree = 1;
    CHECK_THROWS_AS(match_divisors(a, wrong), DegreeMismatch);
}

TEST_CASE("equivariance holds on random draws", "[mobius]") {
    std::mt19937_64 rng(101);
    int done = 0;
    while (done < 15) {
        int d = 3 + done % 3;
        int pole = (done % 2 == 0) ? 0 : 1;
        auto w = random_valid_map(rng, d, pole, 2.0, 0.2);
        MobiusC m = random_mobius(rng);
        EquivarianceReport rep;
        try {
            RationalMapC wt = transform_map(m, w);
            if (validate(wt).status != Validity::Valid) continue;
            rep = equivariance_check(w, m, 1e-7);
        } catch (const Error&) {
            continue;
        }
        CHECK(rep.pass);
        ++done;
    }
}
