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

#ifndef ISODYN_TRIANGLE_HPP
#define ISODYN_TRIANGLE_HPP

#include "isodyn/golden.hpp"
#include "isodyn/isodyn.hpp"

namespace isodyn {

/// Triangle in the complex plane, given by its three vertices.
struct Triangle {
    Complex z1, z2, z3;

    Triangle(Complex a, Complex b, Complex c) : z1(a), z2(b), z3(c) {
        const double scale = std::max({std::abs(z1 - z2), std::abs(z2 - z3), std::abs(z3 - z1)});
        if (scale == 0.0 || std::abs(z1 - z2) < 1e-14 * scale ||
            std::abs(z2 - z3) < 1e-14 * scale || std::abs(z3 - z1) < 1e-14 * scale)
            throw DegenerateInput("triangle has repeated vertices");
    }

    bool collinear(double tol = 1e-12) const {
        const Complex u = z2 - z1, v = z3 - z1;
        return std::abs(std::imag(u * std::conj(v))) <= tol * std::abs(u) * std::abs(v);
    }

    Complex centroid() const { return (z1 + z2 + z3) / 3.0; }

    /// Monic cubic with the vertices as roots.
    PolyC vertex_poly() const {
        return poly_from_roots({z1, z2, z3});
    }
};

/// The two isodynamic points; the second degenerates to infinity for
/// equilateral triangles.
struct IsodynamicPoints {
    SpherePoint first;
    SpherePoint second;
};

/**
 * Isodynamic points as the roots of the degree-3 isodynamic polynomial of
 * the vertex cubic, solved in closed form. The first point is the root
 * closer to the centroid.
 */
inline IsodynamicPoints isodynamic_points_triangle(const Triangle& t) {
    PolyC p = t.vertex_poly();
    const std::array<Complex, 5> v{p.coeff(2), p.coeff(1), p.coeff(0), Complex(0, 0),
                                   Complex(0, 0)};
    PolyC id = golden::eval_in_u(golden::kId3, v);

    const double scale = std::max({std::abs(t.z1), std::abs(t.z2), std::abs(t.z3), 1.0});
    const Complex qa = id.coeff(2), qb = id.coeff(1), qc = id.coeff(0);
    if (std::abs(qa) < 1e-12 * scale * scale) {
        // Equilateral: the quadratic degenerates and one point moves to
        // infinity.
        if (std::abs(qb) == 0.0)
            throw DegenerateInput("isodynamic quadratic vanished (degenerate triangle)");
        return {SpherePoint::finite(-qc / qb), SpherePoint::infinity()};
    }
    Complex disc = std::sqrt(qb * qb - 4.0 * qa * qc);
    // Stable quadratic formula: pick the sign that avoids cancellation.
    Complex q = (std::real(std::conj(qb) * disc) >= 0.0) ? -(qb + disc) / 2.0 : -(qb - disc) / 2.0;
    Complex r1, r2;
    if (std::abs(q) == 0.0) {
        r1 = r2 = Complex(0, 0);
    } else {
        r1 = q / qa;
        r2 = qc / q;
    }
    Complex g = t.centroid();
    if (std::abs(r2 - g) < std::abs(r1 - g)) std::swap(r1, r2);
    return {SpherePoint::finite(r1), SpherePoint::finite(r2)};
}

/**
 * Deviation of u from the Apollonius product characterization: the maximum
 * pairwise difference among |u-z1||z3-z2|, |u-z2||z3-z1|, |u-z3||z2-z1|.
 * Zero exactly at the isodynamic points.
 */
inline double apollonian_residual(const Triangle& t, Complex u) {
    const double p1 = std::abs(u - t.z1) * std::abs(t.z3 - t.z2);
    const double p2 = std::abs(u - t.z2) * std::abs(t.z3 - t.z1);
    const double p3 = std::abs(u - t.z3) * std::abs(t.z2 - t.z1);
    return std::max({std::abs(p1 - p2), std::abs(p2 - p3), std::abs(p3 - p1)});
}

/**
 * Discriminant in z of the alpha-polar pencil alpha*P + (u-z)*P', as a
 * polynomial in u. Recovers the isodynamic polynomial at alpha = deg P.
 */
inline PencilDiscriminant<Complex> alpha_discriminant(const PolyC& p, double alpha) {
    if (p.degree() < 2) throw DegenerateInput("alpha_discriminant needs degree >= 2");
    PolyC dp = p.derivative();
    PencilC pencil{p * Complex(alpha, 0) - detail::shift_up(dp), dp};
    return pencil_discriminant(pencil);
}

/**
 * Centroid of the two isodynamic points and the vertex centroid, in closed
 * form: (4/9)(27c - a^3) / (4a^2 - 12b) for the monic vertex cubic
 * z^3 + az^2 + bz + c. Undefined for equilateral triangles, where the
 * denominator (proportional to the discriminant of P') vanishes.
 */
inline Complex x26613(const Triangle& t) {
    PolyC p = t.vertex_poly();
    const Complex a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    const Complex den = 4.0 * a * a - 12.0 * b;
    // Scale by the squared triangle size: den is quadratic in the vertices,
    // and for a near-equilateral triangle it sits at roundoff below that.
    const double s = std::max({std::abs(t.z1), std::abs(t.z2), std::abs(t.z3), 1.0});
    if (std::abs(den) < 1e-12 * s * s)
        throw IsodynamicUndefined("x26613 undefined for equilateral triangles");
    return (4.0 / 9.0) * (27.0 * c - a * a * a) / den;
}

/// Centroid trace of the alpha family with its total-least-squares line fit.
struct CentroidLineReport {
    std::vector<std::pair<double, Complex>> points;  // (alpha, centroid of zeros)
    bool degenerate_point = false;  // all centroids coincide: a point, not a line
    Complex anchor{0, 0};           // point on the fitted line
    Complex direction{0, 0};        // unit direction, zero when degenerate
    double max_residual = 0.0;      // largest orthogonal distance to the fit
};

/**
 * Tracks m(alpha), the centroid of the zeros of alpha_discriminant(P, alpha),
 * over the given alpha values and fits a real line through the trace.
 * Centroids are read off the top two coefficients, with no root-solving.
 * Alphas whose pencil is identically singular are skipped.
 */
inline CentroidLineReport centroid_line(const PolyC& p, const std::vector<double>& alphas) {
    if (p.degree() < 2) throw DegenerateInput("centroid_line needs degree >= 2");
    CentroidLineReport report;
    for (double alpha : alphas) {
        auto pd = alpha_discriminant(p, alpha);
        if (pd.identically_singular || pd.discr.degree() < 1) continue;
        const int n = pd.discr.degree();
        Complex m = -pd.discr.coeff(n - 1) / (static_cast<double>(n) * pd.discr.leading());
        report.points.emplace_back(alpha, m);
    }
    if (report.points.size() < 2) {
        report.degenerate_point = true;
        if (!report.points.empty()) report.anchor = report.points.front().second;
        return report;
    }

    Complex mean(0, 0);
    for (const auto& [alpha, m] : report.points) mean += m;
    mean /= static_cast<double>(report.points.size());
    report.anchor = mean;

    double spread = 0.0;
    for (const auto& [alpha, m] : report.points) spread = std::max(spread, std::abs(m - mean));
    if (spread < 1e-10 * std::max(1.0, std::abs(mean))) {
        report.degenerate_point = true;
        return report;
    }

    // Total least squares: principal axis of the 2x2 scatter matrix.
    double sxx = 0, sxy = 0, syy = 0;
    for (const auto& [alpha, m] : report.points) {
        const double x = std::real(m - mean), y = std::imag(m - mean);
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    const double tr = sxx + syy;
    const double det = sxx * syy - sxy * sxy;
    const double lam = tr / 2.0 + std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
    Complex dir;
    if (std::abs(sxy) > 1e-300)
        dir = Complex(lam - syy, sxy);
    else
        dir = (sxx >= syy) ? Complex(1, 0) : Complex(0, 1);
    dir /= std::abs(dir);
    report.direction = dir;

    for (const auto& [alpha, m] : report.points) {
        const Complex rel = m - mean;
        const double ortho = std::abs(std::imag(rel * std::conj(dir)));
        report.max_residual = std::max(report.max_residual, ortho);
    }
    return report;
}

}  // namespace isodyn

#endif  // ISODYN_TRIANGLE_HPP
