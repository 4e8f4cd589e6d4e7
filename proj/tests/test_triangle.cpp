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
#include "isodyn/triangle.hpp"

using namespace isodyn;
using namespace isodyn::testing;

namespace {

Triangle random_triangle(std::mt19937_64& rng) {
    for (;;) {
        Triangle t(random_unit_box(rng), random_unit_box(rng), random_unit_box(rng));
        if (!t.collinear(1e-3)) return t;
    }
}

}  // namespace

TEST_CASE("triangle construction and helpers", "[triangle]") {
    CHECK_THROWS_AS(Triangle(Complex(1, 1), Complex(1, 1), Complex(0, 0)), DegenerateInput);
    Triangle line(Complex(0, 0), Complex(1, 0), Complex(2, 0));
    CHECK(line.collinear());
    Triangle t(Complex(0, 0), Complex(1, 0), Complex(0, 1));
    CHECK_FALSE(t.collinear());
    CHECK(std::abs(t.centroid() - Complex(1.0 / 3, 1.0 / 3)) < 1e-15);
    CHECK(std::abs(t.vertex_poly().eval(Complex(0, 1))) < 1e-15);
}

TEST_CASE("equilateral triangle sends one point to infinity", "[triangle]") {
    // cube roots of unity: first isodynamic point at the centroid 0, the
    // second at infinity
    const double s = std::sqrt(3.0) / 2.0;
    Triangle t(Complex(1, 0), Complex(-0.5, s), Complex(-0.5, -s));
    auto pts = isodynamic_points_triangle(t);
    REQUIRE_FALSE(pts.first.at_infinity);
    CHECK(std::abs(pts.first.z) < 1e-12);
    CHECK(pts.second.at_infinity);
    CHECK_THROWS_AS(x26613(t), IsodynamicUndefined);
}

TEST_CASE("equilateral criterion a^2 = 3b is exact", "[triangle]") {
    // leading coefficient of the exact isodynamic quadratic is 4(a^2 - 3b)
    auto lead_vanishes = [](long long a, long long b, long long c) {
        PolyQ id = isodynamic_poly(RationalMapQ::from_polynomial(monicq({a, b, c})));
        return id.degree() < 2;
    };
    CHECK(lead_vanishes(3, 3, 7));    // a^2 = 3b
    CHECK(lead_vanishes(0, 0, -1));   // z^3 - 1
    CHECK_FALSE(lead_vanishes(1, 2, 5));
    CHECK_FALSE(lead_vanishes(-2, 1, 0));
}

TEST_CASE("apollonian residual vanishes at the isodynamic points", "[triangle]") {
    Triangle t(Complex(0, 0), Complex(1, 0), Complex(0, 1));
    auto pts = isodynamic_points_triangle(t);
    REQUIRE_FALSE(pts.first.at_infinity);
    REQUIRE_FALSE(pts.second.at_infinity);
    CHECK(apollonian_residual(t, pts.first.z) < 1e-12);
    CHECK(apollonian_residual(t, pts.second.z) < 1e-12);
    // and does not vanish at a generic point
    CHECK(apollonian_residual(t, Complex(5, 5)) > 0.1);
}

TEST_CASE("alpha pencil recovers the isodynamic polynomial at alpha = d", "[triangle]") {
    Triangle t(Complex(0, 0), Complex(1, 0), Complex(0.3, 1.2));
    PolyC p = t.vertex_poly();
    auto pd = alpha_discriminant(p, 3.0);
    REQUIRE_FALSE(pd.identically_singular);
    auto roots = find_roots(pd.discr);
    auto pts = isodynamic_points_triangle(t);
    for (const SpherePoint* s : {&pts.first, &pts.second}) {
        double best = 1e9;
        for (const auto& [z, m] : roots.roots) best = std::min(best, std::abs(z - s->z));
        CHECK(best < 1e-9);
    }
}

TEST_CASE("x26613 closed form", "[triangle]") {
    Triangle t(Complex(0, 0), Complex(1, 0), Complex(0, 1));
    Complex x = x26613(t);
    CHECK(std::abs(x - Complex(-2.0 / 9.0, -2.0 / 9.0)) < 1e-14);

    // equals the mean of the two isodynamic points and the centroid
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Triangle r = random_triangle(rng);
        auto pts = isodynamic_points_triangle(r);
        if (pts.first.at_infinity || pts.second.at_infinity) continue;
        Complex mean = (pts.first.z + pts.second.z + r.centroid()) / 3.0;
        CHECK(std::abs(x26613(r) - mean) < 1e-9);
    }
}

TEST_CASE("alpha = 1 pencil contains the vertices plus x26613", "[triangle]") {
    std::mt19937_64 rng(19);
    Triangle t = random_triangle(rng);
    PolyC p = t.vertex_poly();
    auto pd = alpha_discriminant(p, 1.0);
    REQUIRE_FALSE(pd.identically_singular);
    REQUIRE(pd.discr.degree() == 4);
    auto [quot, rem] = divmod(pd.discr, p * pd.discr.leading());
    // remainder small relative to the dividend: P(u) divides D^1
    double scale = 0.0;
    for (int k = 0; k <= pd.discr.degree(); ++k)
        scale = std::max(scale, std::abs(pd.discr.coeff(k)));
    for (int k = 0; k <= rem.degree(); ++k) CHECK(std::abs(rem.coeff(k)) < 1e-8 * scale);
    REQUIRE(quot.degree() == 1);
    Complex extra = -quot.coeff(0) / quot.coeff(1);
    CHECK(std::abs(extra - x26613(t)) < 1e-9);
}

TEST_CASE("centroid line trace", "[triangle]") {
    std::vector<double> alphas;
    for (int a = -5; a <= 5; ++a) alphas.push_back(a);

    // symmetric cubic: every centroid sits at the origin
    auto sym = centroid_line(to_float(monicq({0, 0, -1})), alphas);
    CHECK(sym.degenerate_point);
    CHECK(std::abs(sym.anchor) < 1e-10);

    // generic triangle: the trace is a genuine line with small residual
    Triangle t(Complex(0, 0), Complex(1, 0), Complex(0.3, 1.2));
    auto rep = centroid_line(t.vertex_poly(), alphas);
    CHECK(rep.points.size() >= 8);
    CHECK_FALSE(rep.degenerate_point);
    CHECK(rep.max_residual < 1e-8);
    // x26613 lies on the fitted line
    Complex rel = x26613(t) - rep.anchor;
    CHECK(std::abs(std::imag(rel * std::conj(rep.direction))) < 1e-8);
}
