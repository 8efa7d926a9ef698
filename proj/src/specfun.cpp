#include "mhb/specfun.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace mhb {

namespace {

constexpr double kEps = 1e-17;
constexpr int kSeriesCap = 100000;

bool is_nonpositive_integer(double x, double tol = 1e-12) {
    return x <= tol && std::abs(x - std::round(x)) < tol;
}

bool near_integer(double x, double tol = 1e-9) {
    return std::abs(x - std::round(x)) < tol;
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0))
        throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
    return std::lgamma(x);
}

SignedLog log_gamma_signed(double x) {
    if (x > 0.0) return {std::lgamma(x), 1};
    if (is_nonpositive_integer(x)) return {std::numeric_limits<double>::infinity(), 0};
    // Gamma(x) = pi / (sin(pi x) Gamma(1-x)); sign follows sin(pi x).
    const double s = std::sin(M_PI * x);
    return {std::log(M_PI / std::abs(s)) - std::lgamma(1.0 - x), s > 0.0 ? 1 : -1};
}

double digamma(double x) {
    if (!(x > 0.0))
        throw DomainError("digamma: argument must be positive, got " + std::to_string(x));
    double acc = 0.0;
    while (x < 9.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double r = 1.0 / x, r2 = r * r;
    // Asymptotic series with Bernoulli coefficients up to B_14.
    double psi = std::log(x) - 0.5 * r -
                 r2 * (1.0 / 12 + r2 * (-1.0 / 120 + r2 * (1.0 / 252 + r2 * (-1.0 / 240 +
                       r2 * (1.0 / 132 + r2 * (-691.0 / 32760 + r2 * (1.0 / 12)))))));
    return psi + acc;
}

double pochhammer(double a, double k) {
    if (!(a > 0.0))
        throw DomainError("pochhammer: base must be positive, got " + std::to_string(a));
    if (k < 0.0)
        throw DomainError("pochhammer: order must be nonnegative, got " + std::to_string(k));
    const double kr = std::round(k);
    if (std::abs(k - kr) < 1e-12 && kr <= 4096.0) {
        double prod = 1.0;
        for (long i = 0; i < static_cast<long>(kr); ++i) prod *= a + static_cast<double>(i);
        return prod;
    }
    return std::exp(std::lgamma(a + k) - std::lgamma(a));
}

namespace detail {

double hyp2f1_series(double a, double b, double c, double t, int cap) {
    if (t == 0.0) return 1.0;
    // Terminating case: run the exact polynomial.
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
        const long deg = static_cast<long>(-std::round(is_nonpositive_integer(a) ? a : b));
        double term = 1.0, sum = 1.0;
        for (long k = 0; k < deg; ++k) {
            term *= (a + k) * (b + k) / (c + k) * t / (k + 1);
            sum += term;
        }
        return sum;
    }
    double term = 1.0, sum = 1.0;
    int small_count = 0;
    for (int k = 0; k < cap; ++k) {
        term *= (a + k) * (b + k) / (c + k) * t / (k + 1);
        sum += term;
        if (std::abs(term) <= kEps * std::abs(sum)) {
            if (++small_count >= 2) return sum;
        } else {
            small_count = 0;
        }
    }
    throw ConvergenceError("hyp2f1_series: no convergence within term cap");
}

namespace {

// 2F1(a, b; a+b; 1-w):  logarithmic connection case c - a - b = 0.  The
// stopping tests use the positive envelope `base`, not the term itself, so a
// sign change of the bracket cannot end the sum early.
double near1_log0(double a, double b, double c, double w) {
    const double lw = std::log(w);
    double base = 1.0;
    double bracket = 2.0 * digamma(1.0) - digamma(a) - digamma(b) - lw;
    const double bracket_scale = std::abs(lw) + 4.0;
    double sum = base * bracket;
    for (int k = 0; k < kSeriesCap; ++k) {
        base *= (a + k) * (b + k) * w / ((k + 1.0) * (k + 1.0));
        bracket += 2.0 / (k + 1.0) - 1.0 / (a + k) - 1.0 / (b + k);
        sum += base * bracket;
        if (base * bracket_scale <= kEps * std::abs(sum) && k > 2) break;
    }
    return std::exp(std::lgamma(c) - std::lgamma(a) - std::lgamma(b)) * sum;
}

// 2F1(a, b; a+b+m; 1-w), m >= 1.
double near1_log_pos(double a, double b, double c, int m, double w) {
    // Finite part: Gamma(m)Gamma(c)/(Gamma(a+m)Gamma(b+m)) sum_{k<m} (a)_k(b)_k/(k!(1-m)_k) w^k.
    double fin = 0.0;
    {
        double term = 1.0;
        fin = term;
        for (int k = 0; k + 1 < m; ++k) {
            term *= (a + k) * (b + k) * w / ((k + 1.0) * (1.0 - m + k));
            fin += term;
        }
        fin *= std::exp(std::lgamma(m) + std::lgamma(c) - std::lgamma(a + m) - std::lgamma(b + m));
    }
    // Logarithmic part.
    const double lw = std::log(w);
    double base = std::exp(-std::lgamma(m + 1.0));  // k = 0: 1/m!
    double bracket = lw - digamma(1.0) - digamma(m + 1.0) + digamma(a + m) + digamma(b + m);
    const double bracket_scale = std::abs(lw) + 4.0;
    double sum = base * bracket;
    for (int k = 0; k < kSeriesCap; ++k) {
        base *= (a + m + k) * (b + m + k) * w / ((k + 1.0) * (k + m + 1.0));
        bracket += -1.0 / (k + 1.0) - 1.0 / (k + m + 1.0) + 1.0 / (a + m + k) + 1.0 / (b + m + k);
        sum += base * bracket;
        if (base * bracket_scale <= kEps * std::abs(sum) && k > 2) break;
    }
    const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
    const double logc = std::lgamma(c) - std::lgamma(a) - std::lgamma(b);
    return fin - sgn * std::exp(logc) * std::pow(w, m) * sum;
}

// 2F1(a, b; a+b-m; 1-w), m >= 1.
double near1_log_neg(double a, double b, double c, int m, double w) {
    // Divergent finite part: Gamma(m)Gamma(c)/(Gamma(a)Gamma(b)) w^{-m} sum_{k<m} (a-m)_k(b-m)_k/(k!(1-m)_k) w^k.
    double fin = 0.0;
    {
        double term = 1.0;
        fin = term;
        for (int k = 0; k + 1 < m; ++k) {
            term *= (a - m + k) * (b - m + k) * w / ((k + 1.0) * (1.0 - m + k));
            fin += term;
        }
        fin *= std::exp(std::lgamma(m) + std::lgamma(c) - std::lgamma(a) - std::lgamma(b)) *
               std::pow(w, -m);
    }
    // Logarithmic part; vanishes when a-m or b-m hits a Gamma pole.
    const SignedLog ga = log_gamma_signed(a - m), gb = log_gamma_signed(b - m);
    if (ga.sign == 0 || gb.sign == 0) return fin;
    const double lw = std::log(w);
    double base = std::exp(-std::lgamma(m + 1.0));
    double bracket = lw - digamma(1.0) - digamma(m + 1.0) + digamma(a) + digamma(b);
    const double bracket_scale = std::abs(lw) + 4.0;
    double sum = base * bracket;
    for (int k = 0; k < kSeriesCap; ++k) {
        base *= (a + k) * (b + k) * w / ((k + 1.0) * (k + m + 1.0));
        bracket += -1.0 / (k + 1.0) - 1.0 / (k + m + 1.0) + 1.0 / (a + k) + 1.0 / (b + k);
        sum += base * bracket;
        if (base * bracket_scale <= kEps * std::abs(sum) && k > 2) break;
    }
    const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
    const double coef = sgn * static_cast<double>(ga.sign * gb.sign) *
                        std::exp(std::lgamma(c) - ga.log_abs - gb.log_abs);
    return fin - coef * sum;
}

// Generic two-series connection for non-integer sigma = c - a - b.
double near1_generic(double a, double b, double c, double sigma, double w) {
    const SignedLog gs = log_gamma_signed(sigma), gms = log_gamma_signed(-sigma);
    const SignedLog gca = log_gamma_signed(c - a), gcb = log_gamma_signed(c - b);
    const SignedLog gaa = log_gamma_signed(a), gbb = log_gamma_signed(b);
    const double lgc = std::lgamma(c);
    double total = 0.0;
    if (gca.sign != 0 && gcb.sign != 0) {
        const double coef = static_cast<double>(gs.sign * gca.sign * gcb.sign) *
                            std::exp(lgc + gs.log_abs - gca.log_abs - gcb.log_abs);
        total += coef * hyp2f1_series(a, b, a + b - c + 1.0, w);
    }
    if (gaa.sign != 0 && gbb.sign != 0) {
        const double coef = static_cast<double>(gms.sign * gaa.sign * gbb.sign) *
                            std::exp(lgc + gms.log_abs - gaa.log_abs - gbb.log_abs);
        total += coef * std::pow(w, sigma) * hyp2f1_series(c - a, c - b, sigma + 1.0, w);
    }
    return total;
}

}  // namespace

double hyp2f1_near1(double a, double b, double c, double t) {
    const double w = 1.0 - t;
    const double sigma = c - a - b;
    if (near_integer(sigma)) {
        const int m = static_cast<int>(std::lround(sigma));
        if (m == 0) return near1_log0(a, b, c, w);
        if (m > 0) return near1_log_pos(a, b, c, m, w);
        return near1_log_neg(a, b, c, -m, w);
    }
    return near1_generic(a, b, c, sigma, w);
}

double hyp2f1_pos(double a, double b, double c, double t) {
    if (t == 0.0) return 1.0;
    if (t <= 0.7) return hyp2f1_series(a, b, c, t);
    // The positive-term series is exact at any t < 1; the connection series
    // cancels when a*b*(1-t) is large.  Prefer the series while affordable,
    // hand over only where the connection is accurate.
    const double w = 1.0 - t;
    const double tail = 39.0 / -std::log(t);
    const double peak = std::sqrt(std::max(0.0, a * b * t / w));
    const double cost = peak + tail;
    if (cost <= 3000.0) return hyp2f1_series(a, b, c, t);
    if (a * b * w <= 8.0) return hyp2f1_near1(a, b, c, t);
    if (cost <= 100000.0) return hyp2f1_series(a, b, c, t);
    return hyp2f1_near1(a, b, c, t);
}

}  // namespace detail

double gauss_2f1(const HypParams& p, double t) {
    if (is_nonpositive_integer(p.c))
        throw DomainError("gauss_2f1: c is a non-positive integer");
    if (!(t >= 0.0 && t < 1.0))
        throw DomainError("gauss_2f1: argument must lie in [0,1), got " + std::to_string(t));
    if (p.a == 0.0 || p.b == 0.0 || t == 0.0) return 1.0;
    if (is_nonpositive_integer(p.a) || is_nonpositive_integer(p.b))
        return detail::hyp2f1_series(p.a, p.b, p.c, t);
    if (p.a < 0.0 || p.b < 0.0) {
        // Euler transform to positive parameters: products of positive factors.
        const double ca = p.c - p.a, cb = p.c - p.b;
        if (!(ca > 0.0 && cb > 0.0))
            throw DomainError("gauss_2f1: unsupported negative-parameter combination");
        return std::pow(1.0 - t, p.c - p.a - p.b) * detail::hyp2f1_pos(ca, cb, p.c, t);
    }
    return detail::hyp2f1_pos(p.a, p.b, p.c, t);
}

double gauss_2f1_at_1(const HypParams& p) {
    const double sigma = p.c - p.a - p.b;
    if (!(sigma > 0.0))
        throw DomainError("gauss_2f1_at_1: requires c - a - b > 0");
    if (is_nonpositive_integer(p.c))
        throw DomainError("gauss_2f1_at_1: c is a non-positive integer");
    const SignedLog gca = log_gamma_signed(p.c - p.a), gcb = log_gamma_signed(p.c - p.b);
    if (gca.sign == 0 || gcb.sign == 0) return 0.0;
    const double v = std::lgamma(p.c) + std::lgamma(sigma) - gca.log_abs - gcb.log_abs;
    return static_cast<double>(gca.sign * gcb.sign) * std::exp(v);
}

double ratio_series_around_1(int p, int q, double n, double u) {
    if (p < 1 || q < 1)
        throw DomainError("ratio_series_around_1: requires p, q >= 1");
    if (!(n > 0.0) || near_integer(n))
        throw DomainError("ratio_series_around_1: n must be positive and non-integer");
    if (!(u >= 0.0 && u < 1.0))
        throw DomainError("ratio_series_around_1: u must lie in [0,1)");
    if (u == 0.0) return 1.0;

    // The two lattice sums individually blow up as u -> 1 while their
    // difference stays bounded; long-double accumulation buys headroom for
    // that cancellation.
    long double sum1 = 0.0L;
    {
        long double term = 1.0L;  // term_0 = 1 by cancellation of every Gamma factor
        sum1 = term;
        int small_count = 0;
        for (int k = 0; k < kSeriesCap; ++k) {
            term *= (p + k) * (q + k) * u / ((1.0L - n + k) * (k + 1.0L));
            sum1 += term;
            if (std::abs(static_cast<double>(term)) <=
                kEps * std::abs(static_cast<double>(sum1))) {
                if (++small_count >= 2) break;
            } else {
                small_count = 0;
            }
        }
    }
    long double sum2 = 0.0L;
    {
        const SignedLog g1mn = log_gamma_signed(1.0 - n);
        const double log0 = std::lgamma(p + n) + std::lgamma(q + n) + g1mn.log_abs -
                            std::lgamma(static_cast<double>(p)) -
                            std::lgamma(static_cast<double>(q)) - std::lgamma(1.0 + n) +
                            n * std::log(u);
        long double term = static_cast<long double>(g1mn.sign) * std::exp(log0);
        sum2 = term;
        int small_count = 0;
        for (int j = 0; j < kSeriesCap; ++j) {
            term *= (p + n + j) * (q + n + j) * u / ((1.0L + j) * (1.0L + n + j));
            sum2 += term;
            if (std::abs(static_cast<double>(term)) <=
                kEps * (std::abs(static_cast<double>(sum2)) + 1e-300)) {
                if (++small_count >= 2) break;
            } else {
                small_count = 0;
            }
        }
    }
    return static_cast<double>(sum1 - sum2);
}

}  // namespace mhb
