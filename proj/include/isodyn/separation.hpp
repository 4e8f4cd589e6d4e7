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

#ifndef ISODYN_SEPARATION_HPP
#define ISODYN_SEPARATION_HPP

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <thread>

#include "isodyn/isodyn.hpp"

namespace isodyn {

/// Point on the unit sphere in R^3 (the stereographic model of C u {inf}).
struct LiftedPoint {
    std::array<double, 3> xyz{0, 0, 0};
};

/// z -> (2 Re z, 2 Im z, |z|^2 - 1)/(|z|^2 + 1); infinity -> north pole.
inline LiftedPoint stereographic_lift(const SpherePoint& p) {
    if (p.at_infinity) return {{0.0, 0.0, 1.0}};
    const double n = std::norm(p.z);
    return {{2.0 * std::real(p.z) / (n + 1.0), 2.0 * std::imag(p.z) / (n + 1.0),
             (n - 1.0) / (n + 1.0)}};
}

/**
 * Witness of strict separation by a generalized circle: the plane
 * {x : n.x = b} has every lifted point of the first set on the side
 * n.x >= b + margin and the second on n.x <= b - margin.
 */
struct SeparationCertificate {
    std::array<double, 3> normal{0, 0, 0};
    double offset = 0.0;
    double margin = 0.0;
};

struct SeparationResult {
    std::optional<SeparationCertificate> certificate;
    double margin = 0.0;   // the LP optimum, even when below tolerance
    bool tangent = false;  // positive margin too small for a strict certificate
};

namespace detail {

/**
 * Dense tableau simplex for max c.x s.t. M x <= rhs, x >= 0, with all
 * rhs >= 0 so the slack basis is feasible. Bland's rule guards against
 * cycling on the heavily degenerate separation instances.
 */
struct SimplexResult {
    double objective = 0.0;
    std::vector<double> x;
    bool bounded = true;
};

inline SimplexResult simplex_max(const std::vector<std::vector<double>>& m,
                                 const std::vector<double>& rhs, const std::vector<double>& c) {
    const size_t rows = m.size();
    const size_t cols = c.size();
    // Tableau: [A | I | rhs], objective row appended last.
    std::vector<std::vector<double>> t(rows + 1, std::vector<double>(cols + rows + 1, 0.0));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) t[i][j] = m[i][j];
        t[i][cols + i] = 1.0;
        t[i].back() = rhs[i];
    }
    for (size_t j = 0; j < cols; ++j) t[rows][j] = -c[j];

    std::vector<size_t> basis(rows);
    for (size_t i = 0; i < rows; ++i) basis[i] = cols + i;

    for (int iter = 0; iter < 20000; ++iter) {
        // Bland: entering column is the lowest index with negative cost.
        size_t enter = cols + rows;
        for (size_t j = 0; j < cols + rows; ++j) {
            if (t[rows][j] < -1e-12) {
                enter = j;
                break;
            }
        }
        if (enter == cols + rows) break;  // optimal

        size_t leave = rows;
        double best = 0.0;
        for (size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 1e-12) continue;
            double ratio = t[i].back() / t[i][enter];
            if (leave == rows || ratio < best - 1e-15 ||
                (ratio < best + 1e-15 && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows) return {0.0, {}, false};  // unbounded

        const double piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        for (size_t i = 0; i <= rows; ++i) {
            if (i == leave) continue;
            const double f = t[i][enter];
            if (f == 0.0) continue;
            for (size_t j = 0; j <= cols + rows; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    SimplexResult out;
    out.x.assign(cols, 0.0);
    for (size_t i = 0; i < rows; ++i)
        if (basis[i] < cols) out.x[basis[i]] = t[i].back();
    out.objective = t[rows].back();
    return out;
}

}  // namespace detail

/**
 * Decides strict separation of two finite sphere point sets by a generalized
 * circle via the lifted plane-separation LP: maximize the margin eps subject
 * to n.a_i >= b + eps, n.b_j <= b - eps and the box |n|_inf <= 1. A
 * certificate is returned iff the optimum exceeds 1e-9; a tiny positive
 * optimum is reported as tangency.
 */
inline SeparationResult separable_by_circle(const std::vector<SpherePoint>& a,
                                            const std::vector<SpherePoint>& b,
                                            double tol = 1e-9) {
    if (a.empty() || b.empty()) throw DegenerateInput("separation needs two nonempty sets");
    for (const auto& pa : a)
        for (const auto& pb : b)
            if (chordal(pa, pb) < 1e-12) throw NotDisjoint("sets share a point on the sphere");

    std::vector<LiftedPoint> la, lb;
    for (const auto& p : a) la.push_back(stereographic_lift(p));
    for (const auto& p : b) lb.push_back(stereographic_lift(p));

    // Variables (all >= 0): n = np - nm (3+3), b = bp - bm (1+1), eps (1).
    const size_t cols = 9;
    std::vector<std::vector<double>> m;
    std::vector<double> rhs;
    auto row = [&](const std::array<double, 3>& p, double sign) {
        // sign=+1 encodes -n.p + b + eps <= 0 (set A), sign=-1 the reverse.
        std::vector<double> r(cols, 0.0);
        for (size_t k = 0; k < 3; ++k) {
            r[k] = -sign * p[k];
            r[3 + k] = sign * p[k];
        }
        r[6] = sign;
        r[7] = -sign;
        r[8] = 1.0;
        m.push_back(std::move(r));
        rhs.push_back(0.0);
    };
    for (const auto& p : la) row(p.xyz, +1.0);
    for (const auto& p : lb) row(p.xyz, -1.0);
    for (size_t k = 0; k < 3; ++k) {  // |n_k| <= 1 via np_k <= 1, nm_k <= 1
        for (double s : {+1.0, -1.0}) {
            std::vector<double> r(cols, 0.0);
            r[(s > 0 ? k : 3 + k)] = 1.0;
            m.push_back(std::move(r));
            rhs.push_back(1.0);
        }
    }
    std::vector<double> c(cols, 0.0);
    c[8] = 1.0;

    auto sol = detail::simplex_max(m, rhs, c);
    SeparationResult result;
    result.margin = sol.bounded ? sol.objective : 2.0;
    if (!sol.bounded || sol.x.size() < cols) return result;

    if (result.margin > tol) {
        SeparationCertificate cert;
        for (size_t k = 0; k < 3; ++k) cert.normal[k] = sol.x[k] - sol.x[3 + k];
        cert.offset = sol.x[6] - sol.x[7];
        cert.margin = result.margin;
        result.certificate = cert;
    } else if (result.margin > 1e-12) {
        result.tangent = true;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Monte-Carlo scan
// ---------------------------------------------------------------------------

namespace detail {

/// Number of worker threads: ISODYN_THREADS if set, hardware count otherwise.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("ISODYN_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Static partition of [0, count) across the thread budget.
template <class Fn>
void parallel_for(int count, Fn&& fn) {
    const unsigned workers = std::min<unsigned>(thread_budget(), std::max(count, 1));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace detail

/// Sampling rectangle for random roots.
struct Rect {
    double xmin = -5, xmax = 5, ymin = -5, ymax = 5;
};

/// A separable (or tangent) instance found by the scan, fully replayable.
struct SeparationHit {
    int index = 0;
    std::vector<Complex> roots;
    SeparationCertificate certificate;
    bool strict = false;
};

struct SeparationScanReport {
    int d = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    Rect rect;
    int strict_count = 0;
    int weak_count = 0;  // tangent instances, counted separately
    int redraws = 0;     // invalid polynomial draws that were rejected
    std::vector<SeparationHit> hits;
};

namespace detail {

inline std::vector<Complex> draw_roots(int d, const Rect& rect, std::uint64_t seed, int index,
                                       int attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(attempt)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> ux(rect.xmin, rect.xmax), uy(rect.ymin, rect.ymax);
    std::vector<Complex> roots(static_cast<size_t>(d));
    for (auto& r : roots) r = Complex(ux(rng), uy(rng));
    return roots;
}

}  // namespace detail

/**
 * Draws polynomials with i.i.d. roots in the rectangle and tests whether the
 * root set can be strictly separated from the isodynamic divisor support by
 * a generalized circle. Any hit carries its roots and certificate so it can
 * be replayed bit-for-bit from (seed, index).
 */
inline SeparationScanReport conjecture_scan(int d, int samples, const Rect& rect,
                                            std::uint64_t seed) {
    if (d < 3) throw DegenerateInput("conjecture scan needs degree >= 3");
    SeparationScanReport report;
    report.d = d;
    report.samples = samples;
    report.seed = seed;
    report.rect = rect;

    struct SampleOut {
        int redraws = 0;
        bool exhausted = false;
        std::optional<SeparationHit> hit;
    };
    std::vector<SampleOut> outs(static_cast<size_t>(samples));

    detail::parallel_for(samples, [&](int s) {
        auto& out = outs[static_cast<size_t>(s)];
        for (int attempt = 0; attempt < 64; ++attempt) {
            auto roots = detail::draw_roots(d, rect, seed, s, attempt);
            PolyC p = poly_from_roots(roots);
            auto w = RationalMapC::from_polynomial(p);
            SphereDivisor div;
            try {
                if (!validate(w).valid()) {
                    ++out.redraws;
                    continue;
                }
                div = isodynamic_divisor(w);
            } catch (const Error&) {
                ++out.redraws;
                continue;
            }
            std::vector<SpherePoint> a;
            for (const auto& r : roots) a.push_back(SpherePoint::finite(r));
            std::vector<SpherePoint> b;
            for (const auto& [z, mult] : div.finite_points) b.push_back(SpherePoint::finite(z));
            if (div.infinity_multiplicity > 0) b.push_back(SpherePoint::infinity());

            SeparationResult sep;
            try {
                sep = separable_by_circle(a, b);
            } catch (const NotDisjoint&) {
                ++out.redraws;
                continue;
            }
            if (sep.certificate || sep.tangent) {
                SeparationHit hit;
                hit.index = s;
                hit.roots = roots;
                hit.strict = sep.certificate.has_value();
                if (sep.certificate) hit.certificate = *sep.certificate;
                out.hit = hit;
            }
            return;
        }
        // Throwing across the worker boundary would terminate; record and
        // re-raise on the caller's thread.
        out.exhausted = true;
    });

    for (auto& out : outs) {
        if (out.exhausted) throw DegenerateInput("conjecture scan: too many invalid draws");
        report.redraws += out.redraws;
        if (out.hit) {
            if (out.hit->strict)
                ++report.strict_count;
            else
                ++report.weak_count;
            report.hits.push_back(std::move(*out.hit));
        }
    }
    return report;
}

}  // namespace isodyn

#endif  // ISODYN_SEPARATION_HPP
