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

#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "isodyn/figures.hpp"
#include "isodyn/io.hpp"
#include "isodyn/mobius.hpp"
#include "isodyn/separation.hpp"
#include "isodyn/strata.hpp"
#include "isodyn/triangle.hpp"

namespace {

using namespace isodyn;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

/// Splits "1,0,0,-1" (descending powers) into a float polynomial.
PolyC parse_coeff_list(const std::string& s) {
    std::vector<double> desc;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            desc.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw DegenerateInput("cannot parse coefficient: " + tok);
        }
    }
    if (desc.empty()) throw DegenerateInput("empty coefficient list");
    std::vector<Complex> asc;
    for (auto it = desc.rbegin(); it != desc.rend(); ++it) asc.emplace_back(*it, 0.0);
    return PolyC(std::move(asc));
}

std::vector<Complex> parse_vertex_list(const std::string& s) {
    std::vector<Complex> out;
    std::stringstream ss(s);
    std::string pair;
    while (ss >> pair) {
        auto comma = pair.find(',');
        if (comma == std::string::npos) throw DegenerateInput("vertex must be re,im: " + pair);
        out.emplace_back(std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1)));
    }
    return out;
}

Json sphere_point_json(const SpherePoint& p) {
    if (p.at_infinity) return Json{{"infinity", true}};
    return Json{{"re", std::real(p.z)}, {"im", std::imag(p.z)}};
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    out << content;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file: " + path);
    // Exceptions from the parser carry the byte position of the error.
    return Json::parse(in);
}

int run_iso_poly(const std::string& coeffs, const std::string& json_path, double tol,
                 const std::string& out) {
    Json result;
    result["tolerance"] = tol;
    if (!json_path.empty()) {
        PolyInput in = parse_poly(load_json(json_path));
        if (in.exact) {
            auto w = RationalMapQ::from_polynomial(in.q);
            result["mode"] = "exact";
            result["isodynamic_poly"] = poly_to_json(isodynamic_poly(w));
            result["divisor"] = divisor_to_json(isodynamic_divisor(w, tol));
        } else {
            auto w = RationalMapC::from_polynomial(in.c);
            result["mode"] = "float";
            result["isodynamic_poly"] = poly_to_json(isodynamic_poly(w));
            result["divisor"] = divisor_to_json(isodynamic_divisor(w, tol));
        }
    } else {
        auto w = RationalMapC::from_polynomial(parse_coeff_list(coeffs));
        result["mode"] = "float";
        result["isodynamic_poly"] = poly_to_json(isodynamic_poly(w));
        result["divisor"] = divisor_to_json(isodynamic_divisor(w, tol));
    }
    write_output(out, result.dump(2));
    return kExitPass;
}

int run_iso_rat(const std::string& pc, const std::string& qc, const std::string& json_path,
                double tol, const std::string& out) {
    Json result;
    result["tolerance"] = tol;
    if (!json_path.empty()) {
        RationalInput in = parse_rational_map(load_json(json_path));
        if (in.exact) {
            result["mode"] = "exact";
            result["isodynamic_poly"] = poly_to_json(isodynamic_poly(in.q));
            result["divisor"] = divisor_to_json(isodynamic_divisor(in.q, tol));
        } else {
            result["mode"] = "float";
            result["isodynamic_poly"] = poly_to_json(isodynamic_poly(in.c));
            result["divisor"] = divisor_to_json(isodynamic_divisor(in.c, tol));
        }
    } else {
        auto w = RationalMapC::from_fraction(parse_coeff_list(pc), parse_coeff_list(qc));
        result["mode"] = "float";
        result["isodynamic_poly"] = poly_to_json(isodynamic_poly(w));
        result["divisor"] = divisor_to_json(isodynamic_divisor(w, tol));
    }
    write_output(out, result.dump(2));
    return kExitPass;
}

int run_iso_triangle(const std::string& vertices, const std::string& out) {
    auto v = parse_vertex_list(vertices);
    if (v.size() != 3) throw DegenerateInput("triangle needs exactly three vertices");
    Triangle t(v[0], v[1], v[2]);
    if (t.collinear()) throw DegenerateInput("vertices are collinear");
    auto pts = isodynamic_points_triangle(t);

    Json result;
    result["S"] = sphere_point_json(pts.first);
    result["S2"] = sphere_point_json(pts.second);
    Json residuals = Json::array();
    for (const SpherePoint* p : {&pts.first, &pts.second})
        if (!p->at_infinity) residuals.push_back(apollonian_residual(t, p->z));
    result["apollonian_residuals"] = residuals;
    try {
        Complex x = x26613(t);
        result["x26613"] = Json{{"re", std::real(x)}, {"im", std::imag(x)}};
    } catch (const IsodynamicUndefined&) {
        result["x26613"] = nullptr;  // equilateral
    }
    write_output(out, result.dump(2));
    return kExitPass;
}

int run_check_equivariance(int d, int pole, int trials, std::uint64_t seed, double tol,
                           const std::string& out) {
    std::cerr << "equivariance: d=" << d << " pole=" << pole << " trials=" << trials
              << " seed=" << seed << " tol=" << tol << "\n";
    int passed = 0;
    double worst = 0.0;
    for (int i = 0; i < trials; ++i) {
        auto rng = isodyn::detail::sample_rng(seed, static_cast<std::uint64_t>(i));
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 64) throw DegenerateInput("too many degenerate draws");
            std::vector<Complex> zr(static_cast<size_t>(d + pole)), pr(static_cast<size_t>(pole));
            for (auto& z : zr) z = Complex(u(rng), u(rng));
            for (auto& z : pr) z = Complex(u(rng), u(rng));
            auto w = RationalMapC::from_fraction(poly_from_roots(zr),
                                                 pole ? poly_from_roots(pr) : PolyC::one());
            MobiusC m(Complex(u(rng), u(rng)), Complex(u(rng), u(rng)), Complex(u(rng), u(rng)),
                      Complex(u(rng), u(rng)));
            try {
                if (!validate(w).valid()) continue;
                auto wt = transform_map(m, w);
                if (!validate(wt).valid()) continue;  // skip near-degenerate transforms
                auto rep = equivariance_check(w, m, tol);
                worst = std::max(worst, rep.cost);
                if (rep.pass) ++passed;
                break;
            } catch (const Error&) {
                continue;
            }
        }
    }
    Json result{{"d", d},      {"pole", pole},     {"trials", trials}, {"seed", seed},
                {"tol", tol},  {"passed", passed}, {"worst_cost", worst}};
    write_output(out, result.dump(2));
    return passed == trials ? kExitPass : kExitFail;
}

int run_check_separation(int d, int samples, const std::string& rect_spec, std::uint64_t seed,
                         const std::string& out) {
    Rect rect;
    if (!rect_spec.empty()) {
        double v[4];
        if (std::sscanf(rect_spec.c_str(), "%lf,%lf,%lf,%lf", &v[0], &v[1], &v[2], &v[3]) != 4)
            throw DegenerateInput("rect must be xmin,xmax,ymin,ymax");
        rect = {v[0], v[1], v[2], v[3]};
    }
    std::cerr << "separation scan: d=" << d << " samples=" << samples << " seed=" << seed
              << " margin tol=1e-9\n";
    auto rep = conjecture_scan(d, samples, rect, seed);
    Json hits = Json::array();
    for (const auto& h : rep.hits) {
        Json roots = Json::array();
        for (const auto& r : h.roots) roots.push_back({std::real(r), std::imag(r)});
        hits.push_back(Json{{"index", h.index},
                            {"strict", h.strict},
                            {"roots", roots},
                            {"normal", h.certificate.normal},
                            {"offset", h.certificate.offset},
                            {"margin", h.certificate.margin}});
    }
    Json result{{"d", rep.d},
                {"samples", rep.samples},
                {"seed", rep.seed},
                {"rect", {rect.xmin, rect.xmax, rect.ymin, rect.ymax}},
                {"strict_count", rep.strict_count},
                {"weak_count", rep.weak_count},
                {"redraws", rep.redraws},
                {"hits", hits}};
    write_output(out, result.dump(2));
    return rep.strict_count == 0 ? kExitPass : kExitFail;
}

int run_scan_strata(int d, int samples, std::uint64_t seed, const std::string& out) {
    std::cerr << "strata scan: d=" << d << " samples=" << samples << " seed=" << seed << "\n";
    Json result{{"d", d}, {"samples", samples}, {"seed", seed}};
    if (d >= 3 && d <= 5) {
        auto rep = factorization_check(d, samples, seed);
        Json rows = Json::array();
        for (const auto& s : rep.samples) {
            Json pt = Json::array();
            for (const auto& x : s.point) pt.push_back(to_string(x));
            rows.push_back(Json{{"point", pt}, {"ratio", to_string(s.ratio)},
                                {"resampled", s.resampled}});
        }
        result["pass"] = rep.pass;
        result["constant"] = to_string(rep.constant);
        result["samples_detail"] = rows;
        write_output(out, result.dump(2));
        return rep.pass ? kExitPass : kExitFail;
    }
    // Beyond the tabulated range: report raw meta-discriminant data without
    // a verdict (the factor exponents are not established there).
    Json rows = Json::array();
    for (int s = 0; s < samples; ++s) {
        auto rng = isodyn::detail::sample_rng(seed, static_cast<std::uint64_t>(s));
        std::vector<Rational> pt(static_cast<size_t>(family_dimension(d)));
        for (auto& x : pt) x = isodyn::detail::random_rational(rng);
        Json jpt = Json::array();
        for (const auto& x : pt) jpt.push_back(to_string(x));
        try {
            rows.push_back(Json{{"point", jpt}, {"meta", to_string(meta_discriminant(d, pt))}});
        } catch (const Error& e) {
            rows.push_back(Json{{"point", jpt}, {"error", e.what()}});
        }
    }
    result["raw"] = rows;
    result["pass"] = nullptr;
    write_output(out, result.dump(2));
    return kExitPass;
}

int run_centroid_line(const std::string& coeffs, const std::string& alphas_spec,
                      const std::string& out) {
    PolyC p = parse_coeff_list(coeffs);
    std::vector<double> alphas;
    {
        std::stringstream ss(alphas_spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) alphas.push_back(std::stod(tok));
    }
    if (alphas.empty())
        for (int a = -5; a <= 5; ++a) alphas.push_back(a);
    auto rep = centroid_line(p, alphas);
    Json pts = Json::array();
    for (const auto& [alpha, m] : rep.points)
        pts.push_back(Json{{"alpha", alpha}, {"re", std::real(m)}, {"im", std::imag(m)}});
    Json result{{"points", pts},
                {"degenerate_point", rep.degenerate_point},
                {"anchor", {std::real(rep.anchor), std::imag(rep.anchor)}},
                {"direction", {std::real(rep.direction), std::imag(rep.direction)}},
                {"max_residual", rep.max_residual}};
    write_output(out, result.dump(2));
    return kExitPass;
}

int run_emit_figure(const std::string& kind_name, int n, const std::string& prefix) {
    FigureKind kind;
    if (kind_name == "legendre")
        kind = FigureKind::Legendre;
    else if (kind_name == "laguerre")
        kind = FigureKind::Laguerre;
    else
        throw DegenerateInput("figure kind must be legendre or laguerre");
    auto fig = compute_figure(kind, n);
    const std::string base =
        prefix.empty() ? "figure_" + kind_name + "_" + std::to_string(n) : prefix;
    auto pts = fig.scatter();
    write_output(base + ".csv", to_csv(pts));
    write_output(base + ".svg", to_svg(pts));
    std::cerr << "wrote " << base << ".csv and " << base << ".svg (" << fig.roots.size()
              << " roots, " << fig.iso.multiplicity_sum() - fig.iso.infinity_multiplicity
              << " finite isodynamic points, max root residual " << fig.max_root_residual
              << ")\n";
    if (!fig.solver_converged) {
        std::cerr << "warning: root solver did not fully converge; output is partial\n";
        return kExitFail;
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"isodynamic divisors of polynomials and rational maps"};
    app.require_subcommand(1);

    std::string coeffs, pcoeffs, qcoeffs, json_path, out, vertices, rect_spec, alphas_spec;
    std::string figure_kind;
    double tol = 1e-10;
    double eq_tol = 1e-7;
    int d = 4, pole = 0, trials = 50, samples = 100, fig_n = 60;
    std::uint64_t seed = 42;

    auto* iso_poly = app.add_subcommand("poly", "isodynamic divisor of a polynomial");
    iso_poly->add_option("--coeffs", coeffs, "comma-separated real coefficients, descending");
    iso_poly->add_option("--json", json_path, "polynomial JSON file (exact or float mode)");
    iso_poly->add_option("--tol", tol, "root-finder tolerance");
    iso_poly->add_option("--out", out, "output path (default stdout)");
    auto* iso_rat = app.add_subcommand("rat", "isodynamic divisor of a rational map");
    iso_rat->add_option("--p", pcoeffs, "numerator coefficients, descending");
    iso_rat->add_option("--q", qcoeffs, "denominator coefficients, descending");
    iso_rat->add_option("--json", json_path, "rational JSON file {\"p\":...,\"q\":...}");
    iso_rat->add_option("--tol", tol, "root-finder tolerance");
    iso_rat->add_option("--out", out, "output path (default stdout)");
    auto* iso_tri = app.add_subcommand("triangle", "triangle isodynamic points");
    iso_tri->add_option("--vertices", vertices, "three vertices \"x,y x,y x,y\"")->required();
    iso_tri->add_option("--out", out, "output path (default stdout)");

    auto* check = app.add_subcommand("check", "numeric verification suites");
    auto* check_eq = check->add_subcommand("equivariance", "Mobius equivariance trials");
    check_eq->add_option("--d", d, "section degree");
    check_eq->add_option("--pole", pole, "pole divisor degree");
    check_eq->add_option("--trials", trials, "number of random trials");
    check_eq->add_option("--seed", seed, "RNG seed");
    check_eq->add_option("--tol", eq_tol, "matching cost tolerance");
    check_eq->add_option("--out", out, "output path (default stdout)");
    auto* check_sep = check->add_subcommand("separation", "circle-separation conjecture scan");
    check_sep->add_option("--d", d, "polynomial degree");
    check_sep->add_option("--samples", samples, "number of samples");
    check_sep->add_option("--rect", rect_spec, "root rectangle xmin,xmax,ymin,ymax");
    check_sep->add_option("--seed", seed, "RNG seed");
    check_sep->add_option("--out", out, "output path (default stdout)");

    auto* scan = app.add_subcommand("scan", "exact sampling scans");
    auto* scan_strata = scan->add_subcommand("strata", "meta-discriminant factorization scan");
    scan_strata->add_option("--d", d, "family degree");
    scan_strata->add_option("--samples", samples, "number of samples");
    scan_strata->add_option("--seed", seed, "RNG seed");
    scan_strata->add_option("--out", out, "output path (default stdout)");

    auto* cl = app.add_subcommand("centroid-line", "centroid trace of the alpha family");
    cl->add_option("--coeffs", coeffs, "polynomial coefficients, descending")->required();
    cl->add_option("--alphas", alphas_spec, "comma-separated alpha values (default -5..5)");
    cl->add_option("--out", out, "output path (default stdout)");

    auto* emit = app.add_subcommand("emit", "file emitters");
    auto* emit_fig = emit->add_subcommand("figure", "roots + isodynamic scatter (CSV and SVG)");
    emit_fig->add_option("kind", figure_kind, "legendre or laguerre")->required();
    emit_fig->add_option("n", fig_n, "polynomial degree")->required();
    emit_fig->add_option("--out", out, "output path prefix");

    CLI11_PARSE(app, argc, argv);

    try {
        if (iso_poly->parsed()) return run_iso_poly(coeffs, json_path, tol, out);
        if (iso_rat->parsed()) return run_iso_rat(pcoeffs, qcoeffs, json_path, tol, out);
        if (iso_tri->parsed()) return run_iso_triangle(vertices, out);
        if (check_eq->parsed())
            return run_check_equivariance(d, pole, trials, seed, eq_tol, out);
        if (check_sep->parsed()) return run_check_separation(d, samples, rect_spec, seed, out);
        if (scan_strata->parsed()) return run_scan_strata(d, samples, seed, out);
        if (cl->parsed()) return run_centroid_line(coeffs, alphas_spec, out);
        if (emit_fig->parsed()) return run_emit_figure(figure_kind, fig_n, out);
        std::cerr << "no subcommand selected\n";
        return kExitInvalid;
    } catch (const Json::exception& e) {
        std::cerr << "input JSON error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
