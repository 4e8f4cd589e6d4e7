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
#include "isodyn/figures.hpp"

using namespace isodyn;
using namespace isodyn::testing;

TEST_CASE("legendre and laguerre base cases", "[ortho]") {
    // P2 = (3z^2 - 1)/2
    CHECK(gen_legendre(2) == PolyQ({gri(-1, 0, 2), gr(0), gri(3, 0, 2)}));
    // L2 = (z^2 - 4z + 2)/2
    CHECK(gen_laguerre(2) == PolyQ({gr(1), gr(-2), gri(1, 0, 2)}));
    CHECK(gen_legendre(0) == PolyQ::one());
    CHECK(gen_laguerre(1) == PolyQ({gr(1), gr(-1)}));
}

TEST_CASE("three-term recurrences hold exactly at n = 10", "[ortho]") {
    PolyQ z({gr(0), gr(1)});
    // 10 P10 = 19 z P9 - 9 P8
    CHECK(gen_legendre(10) * gr(10) == z * gen_legendre(9) * gr(19) - gen_legendre(8) * gr(9));
    // 10 L10 = (19 - z) L9 - 9 L8
    PolyQ factor({gr(19), gr(-1)});
    CHECK(gen_laguerre(10) * gr(10) == factor * gen_laguerre(9) - gen_laguerre(8) * gr(9));
}

TEST_CASE("jacobi-matrix roots satisfy the recurrence evaluations", "[ortho]") {
    auto lr = legendre_roots(10);
    REQUIRE(lr.size() == 10);
    for (size_t i = 0; i < lr.size(); ++i) {
        CHECK(lr[i] > -1.0);
        CHECK(lr[i] < 1.0);
        auto [v, dv] = legendre_eval(10, lr[i]);
        CHECK(std::abs(v / dv) < 1e-12);
        // symmetric spectrum
        CHECK(std::abs(lr[i] + lr[lr.size() - 1 - i]) < 1e-12);
    }

    auto gr6 = laguerre_roots(6);
    REQUIRE(gr6.size() == 6);
    auto exact = find_roots(to_float(gen_laguerre(6)), 1e-12);
    for (double r : gr6) {
        CHECK(r > 0.0);
        double best = 1e9;
        for (const auto& [z, m] : exact.roots) best = std::min(best, std::abs(z - Complex(r, 0)));
        CHECK(best < 1e-9);
    }
}

TEST_CASE("figure pipeline agrees with the exact pipeline at n = 5", "[figures]") {
    auto fig = compute_figure(FigureKind::Legendre, 5);
    REQUIRE(fig.roots.size() == 5);
    CHECK(fig.solver_converged);
    CHECK(fig.max_root_residual < 1e-12);
    CHECK(fig.iso.multiplicity_sum() == 6);

    auto exact = isodynamic_divisor(RationalMapQ::from_polynomial(gen_legendre(5)));
    CHECK(matching_cost(fig.iso, exact) < 1e-8);
}

TEST_CASE("polynomial json round trip", "[io]") {
    PolyQ p({gri(1, 2, 3), gr(0), gr(-5)});
    Json j = poly_to_json(p);
    auto back = parse_poly(j);
    REQUIRE(back.exact);
    CHECK(back.q == p);

    PolyC pc({Complex(0.5, -1.25), Complex(3, 0)});
    auto backc = parse_poly(poly_to_json(pc));
    REQUIRE_FALSE(backc.exact);
    CHECK(backc.c == pc);

    CHECK_THROWS_AS(parse_poly(Json{{"mode", "exact"}}), ModeMismatch);
    CHECK_THROWS_AS(parse_poly(Json{{"mode", "other"}, {"coeffs", Json::array()}}),
                    ModeMismatch);
    // mixed modes in a rational map
    Json mixed{{"p", poly_to_json(p)}, {"q", poly_to_json(pc)}};
    CHECK_THROWS_AS(parse_rational_map(mixed), ModeMismatch);
}

TEST_CASE("divisor and mobius json shapes", "[io]") {
    SphereDivisor d;
    d.finite_points = {{Complex(1, -2), 2}};
    d.infinity_multiplicity = 1;
    d.total_degree = 3;
    Json j = divisor_to_json(d);
    CHECK(j.at("degree") == 3);
    CHECK(j.at("infinity") == 1);
    REQUIRE(j.at("points").size() == 1);
    CHECK(j.at("points")[0][0] == 1.0);
    CHECK(j.at("points")[0][1] == -2.0);
    CHECK(j.at("points")[0][2] == 2);

    Json mj{{"m", Json::array({{1.0, 0.0}, {2.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}})}};
    MobiusC m = parse_mobius(mj);
    CHECK(std::abs(m.beta - Complex(2, 0)) < 1e-15);
    CHECK_THROWS_AS(parse_mobius(Json{{"m", Json::array({{1.0, 0.0}})}}), ModeMismatch);
}

TEST_CASE("csv and svg emitters are deterministic", "[io]") {
    std::vector<ScatterPoint> pts{{Complex(0.5, -1), true, 1}, {Complex(2, 3), false, 2}};
    std::string csv = to_csv(pts);
    CHECK(csv == "re,im,role,mult\n0.5,-1,root,1\n2,3,iso,2\n");
    CHECK(csv == to_csv(pts));

    std::string svg = to_svg(pts);
    CHECK(svg == to_svg(pts));
    CHECK(svg.find("<svg") != std::string::npos);
    size_t markers = 0, pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        ++markers;
        pos += 7;
    }
    CHECK(markers == pts.size());
}
