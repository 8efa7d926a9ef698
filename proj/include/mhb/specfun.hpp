#pragma once

// Scalar special functions: log-gamma, digamma, Pochhammer symbols, and the
// Gauss hypergeometric function 2F1 on [0,1) with stable evaluation near the
// endpoint t = 1 (connection formulas, including the logarithmic cases where
// c - a - b is an integer), plus Gauss summation at t = 1 and the two-lattice
// ratio expansion around t = 1 for non-integer dimension parameter.

#include "mhb/errors.hpp"

namespace mhb {

// Parameters of 2F1(a, b; c; t).  c must never be a non-positive integer.
struct HypParams {
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;
};

struct SignedLog {
    double log_abs = 0.0;
    int sign = 1;  // 0 at a pole of Gamma
};

// ln Gamma(x) for x > 0.  Relative error <= 1e-14 for x <= 1e6.
double log_gamma(double x);

// ln |Gamma(x)| with sign, defined for every non-pole x (reflection for x < 0).
SignedLog log_gamma_signed(double x);

// Digamma psi(x) = Gamma'(x)/Gamma(x) for x > 0.
double digamma(double x);

// Rising factorial (a)_k = Gamma(a+k)/Gamma(a), a > 0, k >= 0 (real k allowed;
// integer k is evaluated as the exact product).
double pochhammer(double a, double k);

// 2F1(a, b; c; t) on t in [0,1).  All parameter families used by the radial
// profiles and the coefficient integrals are supported; when a < 0 < b the
// evaluation routes through the Euler transform so the result is assembled
// from positive factors only.
double gauss_2f1(const HypParams& p, double t);

// Gauss summation: 2F1(a, b; c; 1) = Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)),
// valid for c - a - b > 0.  Computed in log space.
double gauss_2f1_at_1(const HypParams& p);

// Ratio 2F1(p, q; p+q+n; 1-u) / 2F1(p, q; p+q+n; 1) for non-integer n > 0,
// via the two-lattice expansion around the argument 1 (sum over k in N minus
// sum over k in n+N).  The two lattice sums grow like (1-u)^{-(p+q-n-1)} while
// their difference stays bounded, so the attainable accuracy degrades with
// u (p+q); for u <= 0.5 and p+q <= 7 the result carries ~10 significant
// digits.
double ratio_series_around_1(int p, int q, double n, double u);

namespace detail {
// Plain power series with term cap; terminates naturally when a or b is a
// non-positive integer.  Exposed for tests and for the quadrature integrands.
double hyp2f1_series(double a, double b, double c, double t, int cap = 100000);
// Connection-formula evaluation near t = 1 (a, b, c > 0, 0.0 < t < 1).
double hyp2f1_near1(double a, double b, double c, double t);
// Dispatcher for positive parameters: chooses series vs. near-1 by cost.
double hyp2f1_pos(double a, double b, double c, double t);
}  // namespace detail

}  // namespace mhb
