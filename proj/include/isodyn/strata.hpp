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

#ifndef ISODYN_STRATA_HPP
#define ISODYN_STRATA_HPP

#include <cstdint>
#include <random>
#include <string>

#include "isodyn/golden.hpp"
#include "isodyn/isodyn.hpp"

namespace isodyn {

// ---------------------------------------------------------------------------
// Wronskian of the associated rational function
// ---------------------------------------------------------------------------

/**
 * W_P = (d-1)(P')^2 - d*P*P'' for a degree-d polynomial P. Its roots are the
 * finite critical points of the associated rational function R_P. In exact
 * mode the alternative expression -(U'V - UV') with U = zP' - dP, V = P' is
 * computed as well and a mismatch raises, guarding the implementation.
 */
template <class K>
Poly<K> wronskian_of_associated(const Poly<K>& p) {
    const int d = p.degree();
    if (d < 2) throw DegenerateInput("wronskian_of_associated needs degree >= 2");
    Poly<K> dp = p.derivative();
    Poly<K> w = dp * dp * K(d - 1) - p * dp.derivative() * K(d);
    if constexpr (scalar_traits<K>::is_exact) {
        Poly<K> u = detail::shift_up(dp) - p * K(d);
        if (!(detail::cross_derivative(u, dp) + w).is_zero())
            throw Error("wronskian identity violated (internal)");
    }
    return w;
}

// ---------------------------------------------------------------------------
// Reduced families and component polynomials
// ---------------------------------------------------------------------------

/**
 * The monic family used for stratification: the full cubic z^3+az^2+bz+c for
 * d = 3, and the reduced family z^d + a z^{d-2} + ... (trace zero) for d >= 4.
 * The point must carry d - 1 coordinates in both cases.
 */
/// Parameter count of the stratification family: the full cubic keeps all
/// three coefficients, higher degrees use the trace-zero reduced form.
inline int family_dimension(int d) { return d == 3 ? 3 : d - 1; }

inline PolyQ reduced_family_poly(int d, const std::vector<Rational>& pt) {
    if (d < 3) throw DegenerateInput("family degree must be >= 3");
    if (static_cast<int>(pt.size()) != family_dimension(d))
        throw DegreeMismatch("family point has wrong dimension");
    std::vector<GaussianRational> c(static_cast<size_t>(d + 1));
    c[static_cast<size_t>(d)] = GaussianRational(1);
    if (d == 3) c[2] = GaussianRational(pt[0]);
    // Coordinates fill descending powers starting below the (absent) trace term.
    size_t i = (d == 3) ? 1 : 0;
    for (int k = d - 2; k >= 0; --k, ++i) c[static_cast<size_t>(k)] = GaussianRational(pt[i]);
    return PolyQ(std::move(c));
}

/// Values of the stratum component polynomials; absent components are 1.
struct ComponentValues {
    GaussianRational d0{1};
    GaussianRational dw{1};
    GaussianRational dm{1};
};

inline ComponentValues component_values(int d, const std::vector<Rational>& pt) {
    if (static_cast<int>(pt.size()) != family_dimension(d))
        throw DegreeMismatch("family point has wrong dimension");
    std::array<GaussianRational, 5> v{GaussianRational(0), GaussianRational(0),
                                      GaussianRational(0), GaussianRational(0),
                                      GaussianRational(0)};
    for (size_t i = 0; i < pt.size() && i < 4; ++i) v[i] = GaussianRational(pt[i]);
    ComponentValues out;
    switch (d) {
        case 3:
            out.d0 = golden::eval_scalar(golden::kD3Standard, v);
            break;
        case 4:
            out.d0 = golden::eval_scalar(golden::kD4Standard, v);
            out.dw = golden::eval_scalar(golden::kD4Wronskian, v);
            break;
        case 5:
            out.d0 = golden::eval_scalar(golden::kD5Standard, v);
            out.dw = golden::eval_scalar(golden::kD5Wronskian, v);
            out.dm = golden::eval_scalar(golden::kD5Maxwell, v);
            break;
        default:
            throw DegenerateInput("component polynomials are tabulated for d in {3,4,5}");
    }
    return out;
}

/**
 * Discriminant in u of the isodynamic polynomial at a family point. The
 * resultant-based definition differs from this by a factor carrying the
 * non-constant leading coefficient; the discriminant normalization is the one
 * under which the stratification factors with constant ratio.
 */
inline GaussianRational meta_discriminant(int d, const std::vector<Rational>& pt) {
    PolyQ p = reduced_family_poly(d, pt);
    PolyQ id = isodynamic_poly(RationalMapQ::from_polynomial(p));
    if (id.is_zero()) throw IsodynamicUndefined("isodynamic polynomial vanishes at family point");
    return discriminant(id);
}

// ---------------------------------------------------------------------------
// Float classification
// ---------------------------------------------------------------------------

enum class StratumTag { Generic, D0, DW, DM, Mixed };

inline const char* to_string(StratumTag t) {
    switch (t) {
        case StratumTag::Generic: return "Generic";
        case StratumTag::D0: return "D0";
        case StratumTag::DW: return "DW";
        case StratumTag::DM: return "DM";
        case StratumTag::Mixed: return "Mixed";
    }
    return "?";
}

struct StratumLabel {
    StratumTag tag = StratumTag::Generic;
    std::vector<Complex> witnesses;  // points exhibiting each detected membership
};

/**
 * Stratum membership of a float polynomial. D0 tests the discriminant
 * against tol at the coefficient scale; DW looks for a near-double root of
 * W_P away from the roots of P; DM looks for two critical points separated
 * by more than 1e-6 whose critical values agree to chordal 1e-9. Multiple
 * memberships report Mixed.
 */
inline StratumLabel classify(const PolyC& p, double tol = 1e-8) {
    const int d = p.degree();
    if (d < 3) throw DegenerateInput("classify needs degree >= 3");
    constexpr double kPointSep = 1e-6;
    constexpr double kValueTol = 1e-9;

    double scale = 0.0;
    for (int k = 0; k <= d; ++k) scale = std::max(scale, std::abs(p.coeff(k)));

    StratumLabel label;
    std::vector<StratumTag> hits;

    if (std::abs(discriminant(p)) < tol * std::pow(scale, 2 * d - 2)) {
        hits.push_back(StratumTag::D0);
        for (const auto& [z, m] : find_roots(p).roots)
            if (m >= 2) label.witnesses.push_back(z);
    }

    PolyC w = detail::trim_rel(wronskian_of_associated(p));
    auto proots = find_roots(p).roots;
    auto away_from_p = [&](Complex z) {
        for (const auto& [zp, mp] : proots)
            if (std::abs(z - zp) < kPointSep) return false;
        return true;
    };

    std::vector<std::pair<Complex, int>> wroots;
    if (w.degree() >= 1) wroots = find_roots(w).roots;

    bool dw_hit = false;
    for (size_t i = 0; i < wroots.size(); ++i) {
        if (wroots[i].second >= 2 && away_from_p(wroots[i].first)) {
            dw_hit = true;
            label.witnesses.push_back(wroots[i].first);
        }
        for (size_t j = i + 1; j < wroots.size(); ++j) {
            if (std::abs(wroots[i].first - wroots[j].first) < kPointSep &&
                away_from_p(wroots[i].first)) {
                dw_hit = true;
                label.witnesses.push_back(wroots[i].first);
            }
        }
    }
    if (dw_hit) hits.push_back(StratumTag::DW);

    // Critical values of the associated rational function at distinct
    // critical points.
    {
        PolyC dp = p.derivative();
        PolyC num = detail::trim_rel(detail::shift_up(dp) - p * Complex(d, 0));
        auto value_at = [&](Complex z) -> SpherePoint {
            Complex nv = num.eval(z);
            Complex dv = dp.eval(z);
            if (std::abs(dv) == 0.0 || std::abs(nv) > 1e14 * std::abs(dv))
                return SpherePoint::infinity();
            return SpherePoint::finite(nv / dv);
        };
        bool dm_hit = false;
        for (size_t i = 0; i < wroots.size() && !dm_hit; ++i) {
            for (size_t j = i + 1; j < wroots.size() && !dm_hit; ++j) {
                if (std::abs(wroots[i].first - wroots[j].first) <= kPointSep) continue;
                if (chordal(value_at(wroots[i].first), value_at(wroots[j].first)) < kValueTol) {
                    dm_hit = true;
                    label.witnesses.push_back(wroots[i].first);
                    label.witnesses.push_back(wroots[j].first);
                }
            }
        }
        if (dm_hit) hits.push_back(StratumTag::DM);
    }

    if (hits.empty())
        label.tag = StratumTag::Generic;
    else if (hits.size() == 1)
        label.tag = hits.front();
    else
        label.tag = StratumTag::Mixed;
    return label;
}

// ---------------------------------------------------------------------------
// Random rational sampling (reproducible per-sample streams)
// ---------------------------------------------------------------------------

namespace detail {

/// Independent generator for sample `index` of a scan with the given seed.
inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    return Rational(num(rng), den(rng));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Factorization scan
// ---------------------------------------------------------------------------

/// One sample of a factorization or proportionality scan.
struct ScanSample {
    std::vector<Rational> point;
    GaussianRational ratio;
    bool resampled = false;  // at least one degenerate draw was rejected
};

struct ScanReport {
    int d = 0;
    std::uint64_t seed = 0;
    bool pass = false;
    GaussianRational constant;  // ratio of the first sample
    std::vector<ScanSample> samples;
};

/**
 * Draws random rational family points and checks that the meta-discriminant
 * splits as D0^{j0} DW^{jW} DM^{jM} with a single constant of
 * proportionality across all samples. Exponents: d=3 (1,-,-), d=4 (1,6,-),
 * d=5 (1,3,2). Stratum points (vanishing factors) and degree-deficient
 * samples are redrawn.
 */
inline ScanReport factorization_check(int d, int samples, std::uint64_t seed) {
    int j0 = 1, jw = 0, jm = 0;
    switch (d) {
        case 3: break;
        case 4: jw = 6; break;
        case 5: jw = 3; jm = 2; break;
        default: throw DegenerateInput("factorization exponents known for d in {3,4,5}");
    }

    ScanReport report;
    report.d = d;
    report.seed = seed;
    for (int s = 0; s < samples; ++s) {
        auto rng = detail::sample_rng(seed, static_cast<std::uint64_t>(s));
        ScanSample sample;
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 64) throw DegenerateInput("factorization scan: too many degenerate draws");
            std::vector<Rational> pt(static_cast<size_t>(family_dimension(d)));
            for (auto& x : pt) x = detail::random_rational(rng);
            ComponentValues cv = component_values(d, pt);
            if (cv.d0.is_zero() || cv.dw.is_zero() || cv.dm.is_zero()) {
                sample.resampled = true;
                continue;
            }
            PolyQ p = reduced_family_poly(d, pt);
            PolyQ id = isodynamic_poly(RationalMapQ::from_polynomial(p));
            if (id.degree() < 2 * d - 4) {  // leading coefficient degenerated
                sample.resampled = true;
                continue;
            }
            GaussianRational denom = GaussianRational(1);
            for (int k = 0; k < j0; ++k) denom *= cv.d0;
            for (int k = 0; k < jw; ++k) denom *= cv.dw;
            for (int k = 0; k < jm; ++k) denom *= cv.dm;
            sample.point = std::move(pt);
            sample.ratio = discriminant(id) / denom;
            break;
        }
        report.samples.push_back(std::move(sample));
    }
    report.pass = !report.samples.empty();
    report.constant = report.samples.empty() ? GaussianRational(0) : report.samples.front().ratio;
    for (const auto& s : report.samples)
        if (!(s.ratio == report.constant)) report.pass = false;
    return report;
}

// ---------------------------------------------------------------------------
// Rational-case proportionality scan
// ---------------------------------------------------------------------------

/// The numerator/denominator degree pattern of a rational-map case.
struct RationalCase {
    int num_degree;
    int den_degree;
};

struct RationalCaseReport {
    RationalCase which{};
    std::uint64_t seed = 0;
    bool pass = false;
    GaussianRational id_constant;     // isodynamic polynomial vs reference
    GaussianRational discr_constant;  // its u-discriminant vs reference
    std::vector<ScanSample> samples;
};

namespace detail {

/// Reference isodynamic polynomial for the tabulated cases, in u.
inline PolyQ reference_case_id(const RationalCase& rc, const std::array<GaussianRational, 5>& v) {
    using namespace golden;
    if (rc.num_degree == 2 && rc.den_degree == 1) return eval_in_u(kId11, v);
    if (rc.num_degree == 3 && rc.den_degree == 1) return eval_in_u(kId21, v);
    if (rc.num_degree == 3 && rc.den_degree == 2)
        return eval_in_u(kId12NumeratorCubic, v) * eval_in_u(kId12Cubic, v) *
               (eval_scalar(kId12Prefactor, v) * GaussianRational(-16));
    throw DegenerateInput("no tabulated reference for this case");
}

/// Reference u-discriminant for the tabulated cases.
inline GaussianRational reference_case_discr(const RationalCase& rc,
                                             const std::array<GaussianRational, 5>& v) {
    using namespace golden;
    auto pw = [](GaussianRational x, int k) {
        GaussianRational out(1);
        for (int i = 0; i < k; ++i) out *= x;
        return out;
    };
    if (rc.num_degree == 2 && rc.den_degree == 1) return eval_scalar(kD11, v);
    if (rc.num_degree == 3 && rc.den_degree == 1)
        return pw(eval_scalar(kD21CubicDiscr, v), 4) * pw(eval_scalar(kD21PoleFactor, v), 8) *
               GaussianRational(-1289945088LL);
    if (rc.num_degree == 3 && rc.den_degree == 2)
        return eval_scalar(kD21CubicDiscr, v) * eval_scalar(kD12QuadFactor, v) *
               pw(eval_scalar(kD12SquaredFactor, v), 2) * pw(eval_scalar(kId12Prefactor, v), 12) *
               pw(eval_scalar(kD12SexticFactor, v), 6) * GaussianRational(21641687369515008LL);
    throw DegenerateInput("no tabulated reference for this case");
}

}  // namespace detail

/**
 * For random rational parameters of the given case, checks that the computed
 * isodynamic polynomial is a single constant multiple of the tabulated
 * reference across samples, and likewise its u-discriminant against the
 * tabulated discriminant expression.
 */
inline RationalCaseReport rational_case_check(const RationalCase& rc, int samples,
                                              std::uint64_t seed) {
    const int nvars = (rc.num_degree - 1) + rc.den_degree;  // monic parts, free tails
    RationalCaseReport report;
    report.which = rc;
    report.seed = seed;
    bool first = true;
    for (int s = 0; s < samples; ++s) {
        auto rng = detail::sample_rng(seed, static_cast<std::uint64_t>(s) + 0x10000u);
        ScanSample sample;
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 64) throw DegenerateInput("case scan: too many degenerate draws");
            std::vector<Rational> pt(static_cast<size_t>(nvars));
            for (auto& x : pt) x = detail::random_rational(rng);
            std::array<GaussianRational, 5> v{GaussianRational(0), GaussianRational(0),
                                              GaussianRational(0), GaussianRational(0),
                                              GaussianRational(0)};
            for (size_t i = 0; i < pt.size() && i < 5; ++i) v[i] = GaussianRational(pt[i]);

            std::vector<GaussianRational> pc(static_cast<size_t>(rc.num_degree + 1)),
                qc(static_cast<size_t>(rc.den_degree + 1));
            pc.back() = GaussianRational(1);
            qc.back() = GaussianRational(1);
            size_t i = 0;
            for (int k = rc.num_degree - 1; k >= 0; --k, ++i) pc[static_cast<size_t>(k)] = v[i];
            for (int k = rc.den_degree - 1; k >= 0; --k, ++i) qc[static_cast<size_t>(k)] = v[i];

            PolyQ ref = detail::reference_case_id(rc, v);
            GaussianRational dref = detail::reference_case_discr(rc, v);
            if (ref.is_zero() || ref.degree() < 1 || dref.is_zero()) {
                sample.resampled = true;
                continue;
            }
            RationalMapQ w;
            PolyQ id;
            try {
                w = RationalMapQ::from_fraction(PolyQ(std::move(pc)), PolyQ(std::move(qc)));
                id = isodynamic_poly(w);
            } catch (const Error&) {
                sample.resampled = true;
                continue;
            }
            if (id.degree() != ref.degree()) {
                sample.resampled = true;
                continue;
            }
            GaussianRational lambda = id.leading() / ref.leading();
            if (!(ref * lambda == id)) {
                // Not proportional at all: report failure with ratio zero.
                sample.point = std::move(pt);
                sample.ratio = GaussianRational(0);
                report.pass = false;
                report.samples.push_back(std::move(sample));
                return report;
            }
            GaussianRational mu = discriminant(id) / dref;
            if (first) {
                report.id_constant = lambda;
                report.discr_constant = mu;
                report.pass = true;
                first = false;
            } else if (!(lambda == report.id_constant) || !(mu == report.discr_constant)) {
                report.pass = false;
            }
            sample.point = std::move(pt);
            sample.ratio = lambda;
            break;
        }
        report.samples.push_back(std::move(sample));
    }
    return report;
}

}  // namespace isodyn

#endif  // ISODYN_STRATA_HPP
