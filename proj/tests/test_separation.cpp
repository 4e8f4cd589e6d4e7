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
#include "isodyn/separation.hpp"

using namespace isodyn;
using namespace isodyn::testing;

TEST_CASE("stereographic lift", "[separation]") {
    auto close = [](const LiftedPoint& p, double x, double y, double z) {
        return std::abs(p.xyz[0] - x) < 1e-15 && std::abs(p.xyz[1] - y) < 1e-15 &&
               std::abs(p.xyz[2] - z) < 1e-15;
    };
    CHECK(close(stereographic_lift(SpherePoint::finite(Complex(0, 0))), 0, 0, -1));
    CHECK(close(stereographic_lift(SpherePoint::infinity()), 0, 0, 1));
    CHECK(close(stereographic_lift(SpherePoint::finite(Complex(1, 0))), 1, 0, 0));
    // always lands on the unit sphere
    std::mt19937_64 rng(2);
    for (int k = 0; k < 20; ++k) {
        auto p = stereographic_lift(SpherePoint::finite(random_unit_box(rng, 10.0)));
        double n = p.xyz[0] * p.xyz[0] + p.xyz[1] * p.xyz[1] + p.xyz[2] * p.xyz[2];
        CHECK(std::abs(n - 1.0) < 1e-12);
    }
}

TEST_CASE("plane sections pull back to circle equations", "[separation]") {
    // a plane n.x = b with |b| < 1 meets the sphere in a circle whose
    // chart equation is (n3-b)|z|^2 + 2n1 x + 2n2 y - (n3+b) = 0
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int trial = 0; trial < 10; ++trial) {
        std::array<double, 3> n{u(rng), u(rng), u(rng)};
        double nn = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
        for (auto& v : n) v /= nn;
        double b = 0.8 * u(rng);
        // sample points z on the chart locus: fix x, solve the quadratic in y
        const double A = n[2] - b;
        int checked = 0;
        for (double x = -3.0; x <= 3.0 && checked < 4; x += 0.25) {
            const double qa = A;
            const double qb = 2.0 * n[1];
            const double qc = A * x * x + 2.0 * n[0] * x - (n[2] + b);
            double disc = qb * qb - 4.0 * qa * qc;
            if (std::abs(qa) < 1e-9 || disc <= 1e-9) continue;
            double y = (-qb + std::sqrt(disc)) / (2.0 * qa);
            auto lift = stereographic_lift(SpherePoint::finite(Complex(x, y)));
            double plane = n[0] * lift.xyz[0] + n[1] * lift.xyz[1] + n[2] * lift.xyz[2] - b;
            CHECK(std::abs(plane) < 1e-9);
            ++checked;
        }
    }
}

TEST_CASE("separation decider on closed-form configurations", "[separation]") {
    using P = SpherePoint;
    // far-apart singletons separate
    auto easy = separable_by_circle({P::finite(Complex(0, 0))}, {P::finite(Complex(3, 0))});
    REQUIRE(easy.certificate.has_value());
    CHECK(easy.certificate->margin > 1e-3);

    // four alternating points on a great circle do not
    auto alt = separable_by_circle({P::finite(Complex(1, 0)), P::finite(Complex(-1, 0))},
                                   {P::finite(Complex(0, 1)), P::finite(Complex(0, -1))});
    CHECK_FALSE(alt.certificate.has_value());

    // cube roots of unity against {0, infinity}
    const double s = std::sqrt(3.0) / 2.0;
    auto equi = separable_by_circle(
        {P::finite(Complex(1, 0)), P::finite(Complex(-0.5, s)), P::finite(Complex(-0.5, -s))},
        {P::finite(Complex(0, 0)), P::infinity()});
    CHECK_FALSE(equi.certificate.has_value());

    CHECK_THROWS_AS(
        separable_by_circle({P::finite(Complex(1, 1))}, {P::finite(Complex(1, 1))}),
        NotDisjoint);
}

TEST_CASE("separation is symmetric in the two sets", "[separation]") {
    using P = SpherePoint;
    std::vector<SpherePoint> a{P::finite(Complex(0, 0)), P::finite(Complex(0.2, 0.1))};
    std::vector<SpherePoint> b{P::finite(Complex(2, 2)), P::infinity()};
    auto ab = separable_by_circle(a, b);
    auto ba = separable_by_circle(b, a);
    REQUIRE(ab.certificate.has_value());
    REQUIRE(ba.certificate.has_value());
    CHECK(std::abs(ab.margin - ba.margin) < 1e-9);
}

TEST_CASE("conjecture scan finds no separable instances", "[separation]") {
    Rect rect;
    auto rep = conjecture_scan(3, 60, rect, 9001);
    CHECK(rep.strict_count == 0);
    auto rep4 = conjecture_scan(4, 40, rect, 9001);
    CHECK(rep4.strict_count == 0);
}

TEST_CASE("scan results replay bit for bit", "[separation]") {
    Rect rect;
    auto a = conjecture_scan(4, 30, rect, 1234);
    auto b = conjecture_scan(4, 30, rect, 1234);
    CHECK(a.strict_count == b.strict_count);
    CHECK(a.weak_count == b.weak_count);
    CHECK(a.redraws == b.redraws);
    // root draws themselves are reproducible
    auto r1 = detail::draw_roots(5, rect, 1234, 7, 0);
    auto r2 = detail::draw_roots(5, rect, 1234, 7, 0);
    CHECK(r1 == r2);
}

TEST_CASE("adversarial control: translated divisor separates", "[separation]") {
    auto roots = detail::draw_roots(4, Rect{}, 55, 0, 0);
    auto w = RationalMapC::from_polynomial(poly_from_roots(roots));
    auto div = isodynamic_divisor(w);
    std::vector<SpherePoint> a, b;
    for (const auto& r : roots) a.push_back(SpherePoint::finite(r));
    for (const auto& [z, m] : div.finite_points)
        b.push_back(SpherePoint::finite(z + Complex(100, 0)));
    auto sep = separable_by_circle(a, b);
    CHECK(sep.certificate.has_value());
}
