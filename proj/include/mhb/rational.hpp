#pragma once

// Exact rational scalars for the polynomial algebra.  GMP's mpq_class supplies
// the arbitrary-size integer arithmetic; conversions from double are exact
// (every finite double is a binary rational).

#include <gmpxx.h>

#include <complex>
#include <string>

namespace mhb {

using Rational = mpq_class;

inline Rational rational_from_double(double x) { return Rational(x); }

inline double to_double(const Rational& r) { return r.get_d(); }

// Complex number with exact rational parts.
struct CRational {
    Rational re{0};
    Rational im{0};

    CRational() = default;
    CRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit CRational(long r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    CRational conj() const { return {re, -im}; }

    CRational& operator+=(const CRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    CRational& operator-=(const CRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend CRational operator+(CRational a, const CRational& b) { return a += b; }
    friend CRational operator-(CRational a, const CRational& b) { return a -= b; }
    friend CRational operator*(const CRational& a, const CRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CRational operator*(const Rational& a, const CRational& b) {
        return {a * b.re, a * b.im};
    }
    friend CRational operator-(const CRational& a) { return {-a.re, -a.im}; }
    friend bool operator==(const CRational& a, const CRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

}  // namespace mhb
