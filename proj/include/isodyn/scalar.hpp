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

#ifndef ISODYN_SCALAR_HPP
#define ISODYN_SCALAR_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

namespace isodyn {

using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Error hierarchy. Each name corresponds to a documented failure mode of the
// public operations; everything derives from isodyn::Error so callers can
// catch the whole family at once.
// ---------------------------------------------------------------------------
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateInput : Error {
    using Error::Error;
};
struct ModeMismatch : Error {
    using Error::Error;
};
struct DegreeMismatch : Error {
    using Error::Error;
};
struct NotDisjoint : Error {
    using Error::Error;
};
struct IsodynamicUndefined : Error {
    using Error::Error;
};

/**
 * Element of Q(i): a complex number with exact rational real and imaginary
 * parts. This is the coefficient field for all exact-mode computations.
 */
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(long r) : re(r) {}
    GaussianRational(long long r) : re(r) {}
    GaussianRational(int r) : re(r) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw DegenerateInput("GaussianRational: division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational conj() const { return {re, -im}; }

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

using Complex = std::complex<double>;

template <class K>
struct scalar_traits;

template <>
struct scalar_traits<GaussianRational> {
    static constexpr bool is_exact = true;
    static bool is_zero(const GaussianRational& x) { return x.is_zero(); }
    static GaussianRational zero() { return {}; }
    static GaussianRational one() { return GaussianRational(1); }
    static std::complex<double> to_complex(const GaussianRational& x) { return x.to_complex(); }
    // Pivot size for exact elimination: any nonzero element works, use the
    // rational "magnitude" |re|+|im| just to prefer simpler pivots.
    static double pivot_size(const GaussianRational& x) {
        return x.is_zero() ? 0.0 : 1.0;
    }
};

template <>
struct scalar_traits<Complex> {
    static constexpr bool is_exact = false;
    static bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
    static Complex zero() { return {0.0, 0.0}; }
    static Complex one() { return {1.0, 0.0}; }
    static std::complex<double> to_complex(const Complex& x) { return x; }
    static double pivot_size(const Complex& x) { return std::abs(x); }
};

/// Parses a decimal rational string such as "3/7", "-2" or "5/-3".
inline Rational parse_rational(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw DegenerateInput("cannot parse rational literal: " + s);
    }
}

inline std::string to_string(const Rational& r) { return r.str(); }

inline std::string to_string(const GaussianRational& x) {
    std::string s = x.re.str();
    if (x.im != 0) s += (x.im > 0 ? "+" : "") + x.im.str() + "i";
    return s;
}

}  // namespace isodyn

#endif  // ISODYN_SCALAR_HPP
