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

#ifndef ISODYN_IO_HPP
#define ISODYN_IO_HPP

#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "isodyn/mobius.hpp"

namespace isodyn {

using Json = nlohmann::json;

/// Polynomial in either arithmetic mode, as read from JSON.
struct PolyInput {
    bool exact = false;
    PolyQ q;
    PolyC c;
};

/// Shortest round-trip decimal of a double, deterministic across runs.
inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

/**
 * Parses {"mode":"exact"|"float","coeffs":[[re,im],...]} with coefficients
 * ascending in z-power. Exact coefficients are rational strings ("3/7");
 * float coefficients are numbers.
 */
inline PolyInput parse_poly(const Json& j) {
    if (!j.is_object() || !j.contains("mode") || !j.contains("coeffs"))
        throw ModeMismatch("polynomial JSON needs \"mode\" and \"coeffs\"");
    const std::string mode = j.at("mode").get<std::string>();
    const Json& coeffs = j.at("coeffs");
    if (!coeffs.is_array()) throw ModeMismatch("\"coeffs\" must be an array of [re,im] pairs");

    PolyInput out;
    if (mode == "exact") {
        out.exact = true;
        std::vector<GaussianRational> c;
        for (const auto& entry : coeffs) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
                !entry[1].is_string())
                throw ModeMismatch("exact coefficients must be [\"re\",\"im\"] rational strings");
            c.emplace_back(parse_rational(entry[0].get<std::string>()),
                           parse_rational(entry[1].get<std::string>()));
        }
        out.q = PolyQ(std::move(c));
    } else if (mode == "float") {
        std::vector<Complex> c;
        for (const auto& entry : coeffs) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
                !entry[1].is_number())
                throw ModeMismatch("float coefficients must be [re,im] numbers");
            c.emplace_back(entry[0].get<double>(), entry[1].get<double>());
        }
        out.c = PolyC(std::move(c));
    } else {
        throw ModeMismatch("mode must be \"exact\" or \"float\"");
    }
    return out;
}

inline Json poly_to_json(const PolyQ& p) {
    Json coeffs = Json::array();
    for (int k = 0; k <= p.degree(); ++k)
        coeffs.push_back({to_string(p.coeff(k).re), to_string(p.coeff(k).im)});
    return Json{{"mode", "exact"}, {"coeffs", coeffs}};
}

inline Json poly_to_json(const PolyC& p) {
    Json coeffs = Json::array();
    for (int k = 0; k <= p.degree(); ++k)
        coeffs.push_back({std::real(p.coeff(k)), std::imag(p.coeff(k))});
    return Json{{"mode", "float"}, {"coeffs", coeffs}};
}

/// Rational-map input {"p": <poly>, "q": <poly>}; the modes must agree.
struct RationalInput {
    bool exact = false;
    RationalMapQ q;
    RationalMapC c;
};

inline RationalInput parse_rational_map(const Json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("q"))
        throw ModeMismatch("rational JSON needs \"p\" and \"q\"");
    PolyInput p = parse_poly(j.at("p"));
    PolyInput q = parse_poly(j.at("q"));
    if (p.exact != q.exact) throw ModeMismatch("numerator and denominator modes differ");
    RationalInput out;
    out.exact = p.exact;
    if (p.exact)
        out.q = RationalMapQ::from_fraction(std::move(p.q), std::move(q.q));
    else
        out.c = RationalMapC::from_fraction(std::move(p.c), std::move(q.c));
    return out;
}

/// Divisor output {"points":[[re,im,mult],...],"infinity":m,"degree":n}.
inline Json divisor_to_json(const SphereDivisor& d) {
    Json points = Json::array();
    for (const auto& [z, m] : d.finite_points)
        points.push_back({std::real(z), std::imag(z), m});
    return Json{{"points", points},
                {"infinity", d.infinity_multiplicity},
                {"degree", d.total_degree}};
}

/// Mobius input {"m":[[re,im],[re,im],[re,im],[re,im]]} row-major.
inline MobiusC parse_mobius(const Json& j) {
    if (!j.is_object() || !j.contains("m") || !j.at("m").is_array() || j.at("m").size() != 4)
        throw ModeMismatch("Mobius JSON needs \"m\" with four [re,im] entries");
    std::array<Complex, 4> e;
    for (size_t i = 0; i < 4; ++i) {
        const Json& entry = j.at("m")[i];
        if (!entry.is_array() || entry.size() != 2)
            throw ModeMismatch("Mobius entries must be [re,im] pairs");
        e[i] = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
    return {e[0], e[1], e[2], e[3]};
}

// ---------------------------------------------------------------------------
// CSV and SVG scatter output
// ---------------------------------------------------------------------------

/// One scatter marker: a root of the input or an isodynamic point.
struct ScatterPoint {
    Complex z;
    bool is_root = false;
    int mult = 1;
};

/// Fixed-column CSV: re,im,role(root|iso),mult.
inline std::string to_csv(const std::vector<ScatterPoint>& pts) {
    std::ostringstream out;
    out << "re,im,role,mult\n";
    for (const auto& p : pts)
        out << format_double(std::real(p.z)) << "," << format_double(std::imag(p.z)) << ","
            << (p.is_root ? "root" : "iso") << "," << p.mult << "\n";
    return out.str();
}

/**
 * SVG scatter with one circle marker per point: roots in blue, isodynamic
 * points in red. The viewport is the bounding box of all points padded by 5%
 * on each side.
 */
inline std::string to_svg(const std::vector<ScatterPoint>& pts) {
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (!pts.empty()) {
        xmin = xmax = std::real(pts.front().z);
        ymin = ymax = std::imag(pts.front().z);
        for (const auto& p : pts) {
            xmin = std::min(xmin, std::real(p.z));
            xmax = std::max(xmax, std::real(p.z));
            ymin = std::min(ymin, std::imag(p.z));
            ymax = std::max(ymax, std::imag(p.z));
        }
    }
    double w = xmax - xmin, h = ymax - ymin;
    if (w <= 0) w = 1;
    if (h <= 0) h = 1;
    xmin -= 0.05 * w;
    xmax += 0.05 * w;
    ymin -= 0.05 * h;
    ymax += 0.05 * h;
    w = xmax - xmin;
    h = ymax - ymin;

    const double px = 800.0;
    const double py = px * h / w;
    const double r = 0.006 * std::max(w, h);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_double(px)
        << "\" height=\"" << format_double(py) << "\" viewBox=\"" << format_double(xmin) << " "
        << format_double(-ymax) << " " << format_double(w) << " " << format_double(h) << "\">\n";
    // The y axis is flipped so the mathematical orientation reads correctly.
    for (const auto& p : pts) {
        out << "  <circle cx=\"" << format_double(std::real(p.z)) << "\" cy=\""
            << format_double(-std::imag(p.z)) << "\" r=\"" << format_double(r) << "\" fill=\""
            << (p.is_root ? "#1f4fbf" : "#c0392b") << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace isodyn

#endif  // ISODYN_IO_HPP
