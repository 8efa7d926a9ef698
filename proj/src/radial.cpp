#include "mhb/radial.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "mhb/quadrature.hpp"
#include "mhb/specfun.hpp"

namespace mhb {

namespace {

constexpr long kRadialSeriesCap = 5000000;

void check_profile(const RadialProfile& prof) {
    if (prof.p < 0 || prof.q < 0)
        throw DomainError("radial: bidegree indices must be nonnegative");
    if (!(prof.n + prof.p + prof.q > 0.0))
        throw DomainError("radial: requires p + q + n > 0");
}

double log_s_prefactor(const RadialProfile& prof) {
    // (n)_p (n)_q / (n)_{p+q}
    return std::lgamma(prof.n + prof.p) + std::lgamma(prof.n + prof.q) -
           std::lgamma(prof.n) - std::lgamma(prof.n + prof.p + prof.q);
}

double ipow(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

// sum_j (p)_j (q)_j / (j! (n+p+q)_j) (p+q+2j)^k t^j  -- the weighted Taylor
// series of (2t d/dt)^k (t^{(p+q)/2} 2F1) with the power prefactor stripped.
double weighted_series(const RadialProfile& prof, int k, double t) {
    const double p = prof.p, q = prof.q, c = prof.n + prof.p + prof.q;
    double base = 1.0;
    double sum = ipow(p + q, k);
    if (prof.p == 0 || prof.q == 0) return sum;  // series terminates at j = 0
    int small_count = 0;
    for (long j = 0; j < kRadialSeriesCap; ++j) {
        base *= (p + j) * (q + j) * t / ((j + 1.0) * (c + j));
        const double term = base * ipow(p + q + 2.0 * (j + 1), k);
        sum += term;
        if (term <= 1e-17 * sum) {
            if (++small_count >= 2) return sum;
        } else {
            small_count = 0;
        }
    }
    throw ConvergenceError("radial weighted series: term cap reached (t too close to 1)");
}

// Expansion of (2t d/dt)^k (t^{m/2} F) as t^{m/2} sum_i c_{k,i} t^i F^{(i)}(t)
// with integer c_{k,i}: c_{k+1,i} = (m + 2i) c_{k,i} + 2 c_{k,i-1}.  Each
// derivative of 2F1 is again a 2F1 with shifted parameters, so near t = 1 the
// terms evaluate through the connection formulas.  All summands positive.
double derivative_expansion(const RadialProfile& prof, int k, double t) {
    const double m = prof.p + prof.q;
    std::vector<double> coef{1.0};
    for (int step = 0; step < k; ++step) {
        std::vector<double> next(coef.size() + 1, 0.0);
        for (std::size_t i = 0; i < coef.size(); ++i) {
            next[i] += (m + 2.0 * i) * coef[i];
            next[i + 1] += 2.0 * coef[i];
        }
        coef = std::move(next);
    }
    const double p = prof.p, q = prof.q, c = prof.n + prof.p + prof.q;
    double deriv_scale = 1.0;  // (p)_i (q)_i / (c)_i
    double sum = 0.0, tpow = 1.0;
    for (std::size_t i = 0; i < coef.size(); ++i) {
        if (coef[i] != 0.0) {
            const double fi = gauss_2f1({p + i, q + i, c + i}, t);
            sum += coef[i] * tpow * deriv_scale * fi;
        }
        deriv_scale *= (p + i) * (q + i) / (c + i);
        tpow *= t;
    }
    return sum;
}

}  // namespace

double s_pq(const RadialProfile& prof, double t) {
    check_profile(prof);
    if (!(t >= 0.0 && t <= 1.0))
        throw DomainError("s_pq: argument must lie in [0,1]");
    if (prof.p == 0 || prof.q == 0) return 1.0;
    if (t == 1.0) return 1.0;  // Gauss summation cancels the prefactor exactly
    const double pref = std::exp(log_s_prefactor(prof));
    return pref * gauss_2f1({static_cast<double>(prof.p), static_cast<double>(prof.q),
                             prof.n + prof.p + prof.q},
                            t);
}

double radial_factor(const RadialProfile& prof, double r) {
    check_profile(prof);
    if (!(r >= 0.0 && r <= 1.0))
        throw DomainError("radial_factor: radius must lie in [0,1]");
    return std::pow(r, prof.p + prof.q) * s_pq(prof, r * r);
}

double radial_k_series(const RadialProfile& prof, int k, double t, bool normalized) {
    check_profile(prof);
    if (k < 0) throw DomainError("radial_k_series: k must be nonnegative");
    if (!(t >= 0.0 && t < 1.0))
        throw DomainError("radial_k_series: argument must lie in [0,1)");
    const double pref =
        (normalized && prof.p > 0 && prof.q > 0) ? std::exp(log_s_prefactor(prof)) : 1.0;
    if (t == 0.0) return pref * ipow(prof.p + prof.q, k);
    const double val = (t <= 0.9 || prof.p == 0 || prof.q == 0)
                           ? weighted_series(prof, k, t)
                           : derivative_expansion(prof, k, t);
    return pref * val;
}

double radial_k_derivative(const RadialProfile& prof, int k, double t, bool normalized) {
    check_profile(prof);
    if (t == 0.0) return (prof.p + prof.q > 0) ? 0.0 : (k == 0 ? 1.0 : 0.0);
    return std::exp(0.5 * (prof.p + prof.q) * std::log(t)) *
           radial_k_series(prof, k, t, normalized);
}

double i_pqs(double n_eff, int k, int p, int q, double s) {
    if (p < 0 || q < 0) throw DomainError("i_pqs: bidegree indices must be nonnegative");
    if (!(p + q + n_eff > 0.0)) throw DomainError("i_pqs: requires p + q + n > 0");
    if (!(s > -1.0)) throw DomainError("i_pqs: requires s > -1 (divergent weight)");
    if (k < 0) throw DomainError("i_pqs: k must be nonnegative");
    if (p == 0 || q == 0)
        return std::exp(log_beta(p + q + n_eff + k, s + 1.0));
    const HypParams hp{static_cast<double>(p), static_cast<double>(q),
                       static_cast<double>(p) + q + n_eff};
    auto f = [&](double t) {
        const double v = gauss_2f1(hp, t);
        return v * v;
    };
    return integrate_endpoint(f, s, p + q + n_eff - 1.0 + k, 1e-10).value;
}

double radial_ode_residual(const RadialProfile& prof, double r) {
    check_profile(prof);
    if (!(r > 0.0 && r < 1.0))
        throw DomainError("radial_ode_residual: interior radius required");
    // u(r) = sum_j a_j r^{p+q+2j}; derivatives term by term.
    const double p = prof.p, q = prof.q, c = prof.n + p + q, m = p + q;
    const double pref = (prof.p > 0 && prof.q > 0) ? std::exp(log_s_prefactor(prof)) : 1.0;
    double base = pref;  // a_j; the power r^{m+2j} carries the t^j factor
    double u = 0.0, du = 0.0, ddu = 0.0;
    for (long j = 0; j < kRadialSeriesCap; ++j) {
        const double e = m + 2.0 * j;
        const double rp = std::pow(r, e);
        const double term = base * rp;
        u += term;
        du += term * e / r;
        ddu += term * e * (e - 1.0) / (r * r);
        if (term <= 1e-18 * std::abs(u) && j > 2) break;
        base *= (p + j) * (q + j) / ((j + 1.0) * (c + j));
        if (prof.p == 0 || prof.q == 0) {
            // single-term profile u = r^{p+q}
            break;
        }
    }
    const double lam = m * (m + 2.0 * prof.n - 2.0);
    const double t1 = (1.0 - r * r) * ddu;
    const double t2 = ((2.0 * prof.n - 1.0) / r - r) * du;
    const double t3 = (-lam / (r * r) + (p - q) * (p - q)) * u;
    const double denom = std::max({std::abs(t1), std::abs(t2), std::abs(t3), 1e-300});
    return std::abs(t1 + t2 + t3) / denom;
}

}  // namespace mhb
