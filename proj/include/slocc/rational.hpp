// Copyright 2026 The slocc-invariants Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file rational.hpp
 * Exact complex-rational scalar type used as the carrier for
 * symbolic-strength invariant evaluation.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace slocc {

/// Arbitrary-precision rational (always stored in lowest terms with a
/// positive denominator).
using Rational = boost::multiprecision::cpp_rational;

/// Arbitrary-precision integer, used for counting problems.
using BigInt = boost::multiprecision::cpp_int;

/**
 * Complex number with exact rational real and imaginary parts
 * (an element of Q(i)).  Supports the field operations needed by the
 * invariant polynomials; equality is exact.
 */
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(int v) : re(v) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT
    GaussianRational(Rational r, Rational i)
        : re(std::move(r)), im(std::move(i)) {}

    [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
    [[nodiscard]] GaussianRational conj() const { return {re, -im}; }

    /// Squared modulus |z|^2 = re^2 + im^2 (a nonnegative rational).
    [[nodiscard]] Rational norm2() const { return re * re + im * im; }

    [[nodiscard]] std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    friend GaussianRational operator+(const GaussianRational& a,
                                      const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a,
                                      const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) {
        return {-a.re, -a.im};
    }
    friend GaussianRational operator*(const GaussianRational& a,
                                      const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a,
                                      const GaussianRational& b) {
        const Rational n2 = b.norm2();
        return {(a.re * b.re + a.im * b.im) / n2,
                (a.im * b.re - a.re * b.im) / n2};
    }
    GaussianRational& operator+=(const GaussianRational& o) {
        return *this = *this + o;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        return *this = *this - o;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        return *this = *this * o;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        return *this = *this / o;
    }
    friend bool operator==(const GaussianRational& a,
                           const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a,
                           const GaussianRational& b) {
        return !(a == b);
    }
};

/// Renders e.g. "3/4", "-1/2+2 i", "i", "0".
inline std::string to_string(const GaussianRational& z) {
    auto rat = [](const Rational& r) {
        std::ostringstream os;
        os << r;
        return os.str();
    };
    if (z.im == 0) return rat(z.re);
    std::string imag = (z.im == 1)    ? "i"
                       : (z.im == -1) ? "-i"
                                      : rat(z.im) + " i";
    if (z.re == 0) return imag;
    if (z.im > 0) return rat(z.re) + "+" + imag;
    return rat(z.re) + imag;
}

/// Scalar traits shared by the floating and exact carriers.  `Cplx` is the
/// fast path, `GaussianRational` the exact path; both expose the same ring
/// surface so the invariant formulas are written once.
using Cplx = std::complex<double>;

inline bool scalar_is_zero(const Cplx& z, double tol) {
    return std::abs(z) < tol;
}
inline bool scalar_is_zero(const GaussianRational& z, double /*tol*/) {
    return z.is_zero();
}

inline Cplx scalar_conj(const Cplx& z) { return std::conj(z); }
inline GaussianRational scalar_conj(const GaussianRational& z) {
    return z.conj();
}

inline std::complex<double> scalar_to_complex(const Cplx& z) { return z; }
inline std::complex<double> scalar_to_complex(const GaussianRational& z) {
    return z.to_complex();
}

}  // namespace slocc
