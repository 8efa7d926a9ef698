#include "mhb/coeffs.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "mhb/quadrature.hpp"
#include "mhb/radial.hpp"
#include "mhb/specfun.hpp"

namespace mhb {

std::string route_name(Route r) {
    switch (r) {
        case Route::quadrature: return "quadrature";
        case Route::double_integral: return "double_integral";
        case Route::closed_p0: return "closed_p0";
        case Route::series_noninteger: return "series_noninteger";
        case Route::auto_route: return "auto";
    }
    return "?";
}

Route route_from_name(const std::string& name) {
    if (name == "quadrature") return Route::quadrature;
    if (name == "double_integral") return Route::double_integral;
    if (name == "closed_p0") return Route::closed_p0;
    if (name == "series_noninteger") return Route::series_noninteger;
    if (name == "auto") return Route::auto_route;
    throw ValidationError("unknown route name: " + name);
}

namespace {

void check_pqn(int n, int p, int q) {
    if (n < 1) throw DomainError("c_pq: dimension n must be >= 1");
    if (p < 0 || q < 0) throw DomainError("c_pq: bidegree indices must be nonnegative");
}

// (s+1)_n / Gamma(n) = Gamma(s+n+1) / (Gamma(s+1) Gamma(n)); signed for s < -1.
double measure_prefactor(int n, double s) {
    const SignedLog g1 = log_gamma_signed(s + n + 1.0);
    const SignedLog g2 = log_gamma_signed(s + 1.0);
    if (g1.sign == 0 || g2.sign == 0)
        throw DomainError("c_pq: measure prefactor hit a Gamma pole");
    return static_cast<double>(g1.sign * g2.sign) *
           std::exp(g1.log_abs - g2.log_abs - std::lgamma(static_cast<double>(n)));
}

}  // namespace

CoeffResult c_pq_quadrature(int n, int p, int q, double s, double rel_tol) {
    check_pqn(n, p, q);
    if (!(s > -1.0))
        throw DomainError("c_pq_quadrature: requires s > -1");
    if (p == 0 && q == 0) return {1.0, 0.0, Route::quadrature};
    const RadialProfile prof{static_cast<double>(n), p, q};
    // Weight absorbs t^{p+q+n-1}(1-t)^s; the integrand is S_pq(t)^2 alone,
    // bounded at 1 with an algebraic-log correction there.
    auto f = [&](double t) {
        const double v = s_pq(prof, t);
        return v * v;
    };
    const IntegralEstimate est = integrate_endpoint(f, s, p + q + n - 1.0, rel_tol);
    const double pref = measure_prefactor(n, s);
    return {pref * est.value, pref * est.err_est, Route::quadrature};
}

CoeffResult c_pq_double_integral(int n, int p, int q, double s, double rel_tol) {
    check_pqn(n, p, q);
    if (p < 1 || q < 1)
        throw DomainError("c_pq_double_integral: requires p, q >= 1");
    if (!(s > -n - 1.0))
        throw DomainError("c_pq_double_integral: requires s > -n-1");
    const double nd = n;
    // Gamma(s+n+1) Gamma(s+1+2n) / (Gamma(n)^3 Gamma(2s+2n+2)) * (p)_n (q)_n
    const double logpref = std::lgamma(s + nd + 1.0) + std::lgamma(s + 1.0 + 2.0 * nd) -
                           3.0 * std::lgamma(nd) - std::lgamma(2.0 * s + 2.0 * nd + 2.0) +
                           std::lgamma(p + nd) - std::lgamma(static_cast<double>(p)) +
                           std::lgamma(q + nd) - std::lgamma(static_cast<double>(q));
    // Integrand 2F1(s+1, n+s+1; 2n+2s+2; 1-xy), written through the Euler
    // transform as (xy)^n 2F1(2n+s+1, n+s+1; 2n+2s+2; 1-xy): positive factors.
    const double a = 2.0 * nd + s + 1.0, b = nd + s + 1.0, c = 2.0 * nd + 2.0 * s + 2.0;
    auto f = [&](double x, double y) {
        const double w = x * y;
        return std::pow(w, nd) * gauss_2f1({a, b, c}, 1.0 - w);
    };
    const IntegralEstimate est =
        integrate_2d(f, {nd + s, p - 1.0}, {nd + s, q - 1.0}, rel_tol);
    const double pref = std::exp(logpref);
    return {pref * est.value, pref * est.err_est, Route::double_integral};
}

CoeffResult c_0q_closed(int n, int q, double s) {
    check_pqn(n, 0, q);
    if (!(s > -n - 1.0))
        throw DomainError("c_0q_closed: requires s > -n-1");
    const double nd = n;
    const double v = std::exp(std::lgamma(q + nd) + std::lgamma(nd + s + 1.0) -
                              std::lgamma(nd + s + q + 1.0) - std::lgamma(nd));
    return {v, 0.0, Route::closed_p0};
}

double c_pq_series_noninteger(double n_eff, int p, int q, double s, long kmax) {
    if (p < 1 || q < 1)
        throw DomainError("c_pq_series_noninteger: requires p, q >= 1");
    if (std::abs(n_eff - std::round(n_eff)) < 1e-9)
        throw DomainError("c_pq_series_noninteger: n must be non-integer");
    if (!(n_eff > 0.0)) throw DomainError("c_pq_series_noninteger: n must be positive");
    if (!(s > -n_eff - 1.0))
        throw DomainError("c_pq_series_noninteger: requires s > -n-1");

    const double pd = p, qd = q, n = n_eff;
    // Lattice k in N, k = 0 term.
    const SignedLog gs1 = log_gamma_signed(s + 1.0);
    double a_term = static_cast<double>(gs1.sign) *
                    std::exp(std::lgamma(pd + n) + std::lgamma(qd + n) + gs1.log_abs +
                             std::lgamma(n + s + 1.0) - std::lgamma(n) -
                             std::lgamma(pd + n + s + 1.0) - std::lgamma(qd + n + s + 1.0));
    // Lattice k in n + N, j = 0 term.
    const SignedLog g1mn = log_gamma_signed(1.0 - n);
    double b_term = static_cast<double>(g1mn.sign) *
                    std::exp(2.0 * std::lgamma(pd + n) + 2.0 * std::lgamma(qd + n) +
                             g1mn.log_abs + std::lgamma(s + n + 1.0) +
                             std::lgamma(2.0 * n + s + 1.0) - std::lgamma(n) -
                             std::lgamma(1.0 + n) - std::lgamma(pd) - std::lgamma(qd) -
                             std::lgamma(pd + 2.0 * n + s + 1.0) -
                             std::lgamma(qd + 2.0 * n + s + 1.0));
    double sum = 0.0;
    int small_count = 0;
    for (long j = 0; j < kmax; ++j) {
        const double jd = j;
        const double diff = a_term - b_term;
        sum += diff;
        if (std::abs(diff) <= 1e-15 * std::abs(sum) && j > 4) {
            if (++small_count >= 3) break;
        } else {
            small_count = 0;
        }
        a_term *= (pd + jd) * (qd + jd) * (s + 1.0 + jd) * (n + s + 1.0 + jd) /
                  ((1.0 - n + jd) * (1.0 + jd) * (pd + n + s + 1.0 + jd) *
                   (qd + n + s + 1.0 + jd));
        b_term *= (pd + n + jd) * (qd + n + jd) * (s + n + 1.0 + jd) *
                  (2.0 * n + s + 1.0 + jd) /
                  ((1.0 + jd) * (1.0 + n + jd) * (pd + 2.0 * n + s + 1.0 + jd) *
                   (qd + 2.0 * n + s + 1.0 + jd));
    }
    // (s+1)_n / Gamma(n) with real n: Gamma(s+1+n)/(Gamma(s+1) Gamma(n)).
    const SignedLog gtop = log_gamma_signed(s + 1.0 + n);
    const double pref = static_cast<double>(gtop.sign * gs1.sign) *
                        std::exp(gtop.log_abs - gs1.log_abs - std::lgamma(n));
    return pref * sum;
}

namespace {

struct CoeffKey {
    int n, p, q;
    std::uint64_t s_bits;
    int route;
    bool operator<(const CoeffKey& o) const {
        return std::tie(n, p, q, s_bits, route) < std::tie(o.n, o.p, o.q, o.s_bits, o.route);
    }
};

std::uint64_t bits_of(double x) {
    std::uint64_t u;
    std::memcpy(&u, &x, sizeof(u));
    return u;
}

}  // namespace

CoeffResult c_pq(const CoeffRequest& req) {
    check_pqn(req.n, req.p, req.q);
    if (!(req.s > -req.n - 1.0))
        throw DomainError("c_pq: requires s > -n-1");
    Route route = req.route;
    if (route == Route::auto_route) {
        if (req.p == 0 || req.q == 0)
            route = Route::closed_p0;
        else if (req.s > -1.0)
            route = Route::quadrature;
        else
            route = Route::double_integral;
    }

    static std::mutex mtx;
    static std::map<CoeffKey, CoeffResult> memo;
    const CoeffKey key{req.n, req.p, req.q, bits_of(req.s), static_cast<int>(route)};
    {
        std::lock_guard lock(mtx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    CoeffResult res;
    switch (route) {
        case Route::quadrature:
            res = c_pq_quadrature(req.n, req.p, req.q, req.s, req.rel_tol);
            break;
        case Route::double_integral:
            res = c_pq_double_integral(req.n, req.p, req.q, req.s, req.rel_tol);
            break;
        case Route::closed_p0:
            if (req.p != 0 && req.q != 0)
                throw DomainError("c_pq: closed_p0 route requires p = 0 or q = 0");
            res = c_0q_closed(req.n, std::max(req.p, req.q), req.s);
            break;
        case Route::series_noninteger:
            throw DomainError("c_pq: series_noninteger route needs non-integer n; "
                              "call c_pq_series_noninteger directly");
        case Route::auto_route:
            break;
    }
    if (!(res.value > 0.0))
        throw ConvergenceError("c_pq: computed coefficient is not positive");
    std::lock_guard lock(mtx);
    memo.emplace(key, res);
    return res;
}

double normalized_c(int n, int p, int q, double s) {
    const CoeffResult r = c_pq({n, p, q, s, Route::auto_route, 1e-10});
    return std::pow(p + 1.0, s + 1.0) * std::pow(q + 1.0, s + 1.0) * r.value;
}

namespace {

// Fixed-order Gauss-Legendre sum of g over [lo, hi].
double legendre_on(const std::function<double(double)>& g, double lo, double hi, int order) {
    const QuadratureRule& rule = cached_rule(order, 0.0, 0.0);
    double sum = 0.0;
    for (int i = 0; i < rule.order; ++i)
        sum += rule.weights[i] * g(lo + (hi - lo) * rule.nodes[i]);
    return (hi - lo) * sum;
}

}  // namespace

CpqkResult c_pq_k(int n, int p, int q, int k, double s, double rel_tol) {
    check_pqn(n, p, q);
    if (!(s > -1.0)) throw DomainError("c_pq_k: requires s > -1");
    if (k < 0) throw DomainError("c_pq_k: k must be nonnegative");
    if (p == 0 && q == 0) {
        if (k > 0) return {0.0, 0.0, false};
        return {std::exp(log_beta(static_cast<double>(n), s + 1.0)), 0.0, false};
    }
    const RadialProfile prof{static_cast<double>(n), p, q};
    if (p == 0 || q == 0 || k < n) {
        // The squared series is bounded near t = 1; its square carries weight t^{p+q}.
        auto f = [&](double t) {
            const double v = radial_k_series(prof, k, t);
            return v * v;
        };
        const IntegralEstimate est = integrate_endpoint(f, s, n - 1.0 + p + q, rel_tol);
        return {est.value, est.err_est, false};
    }
    // k >= n, pq > 0: the derivative grows like (1-t)^{n-k} log(1-t) at the
    // endpoint.  Integrate dyadic slices toward t = 1; non-decaying increments
    // (possible only for k > n) mean the integral blows up.
    auto f_full = [&](double t) {
        const double v = radial_k_derivative(prof, k, t);
        return std::pow(t, n - 1.0) * std::pow(1.0 - t, s) * v * v;
    };
    const double head_end = 1.0 - 1.0 / 16.0;
    // head on [0, head_end] with the t^{p+q+n-1} factor absorbed into the weight
    double total;
    {
        auto g = [&](double u) {
            const double t = head_end * u;
            const double v = radial_k_series(prof, k, t);
            return std::pow(1.0 - t, s) * v * v;
        };
        total = integrate(g, 0.0, n - 1.0 + p + q, rel_tol).value *
                std::pow(head_end, n + p + q);
    }
    // Increment growth is transient while the mass concentrates: the weight
    // t^{p+q+n-1} suppresses slices until w ~ 1/(p+q), and the derivative's
    // logarithmic coefficient only switches on below w ~ 1/(pq).  The
    // divergence ratio test starts after both scales have passed; genuinely
    // divergent integrands keep ratios >= 0.9 forever, convergent ones settle
    // at 2^{-(s+1)} (1 + 1/m)^2.
    const int m0 = std::max(
        {6,
         static_cast<int>(std::ceil(std::log2(std::max(1.0, n - 1.0 + p + q)))) + 3,
         static_cast<int>(std::ceil(std::log2(std::max(1.0, static_cast<double>(p) * q)))) +
             4});
    std::vector<double> incs;
    int slow_ratios = 0;  // consecutive post-transient increment ratios >= 0.9
    const int m_cap = 48;  // 1 - 2^{-m} and the node distances stay clean below this
    for (int m = 4; m <= m_cap; ++m) {
        const double lo = 1.0 - std::ldexp(1.0, -m);
        const double hi = 1.0 - std::ldexp(1.0, -m - 1);
        const double inc = legendre_on(f_full, lo, hi, 32);
        if (!incs.empty() && m >= m0 + 1) {
            if (inc >= 0.9 * incs.back()) {
                // a convergent profile shows at most one slow ratio where the
                // increments cross their peak; three in a row means blow-up
                if (++slow_ratios >= 3)
                    return {std::numeric_limits<double>::infinity(), 0.0, true};
            } else {
                slow_ratios = 0;
            }
        }
        incs.push_back(inc);
        total += inc;
        if (m >= m0 && inc <= 0.5 * rel_tol * std::abs(total) && incs.size() >= 3) {
            const double ratio =
                incs[incs.size() - 1] / std::max(incs[incs.size() - 2], 1e-300);
            const double tail = inc * ratio / std::max(1.0 - ratio, 0.1);
            return {total + tail, std::abs(tail) + inc, false};
        }
    }
    // depth exhausted: complete a clearly convergent geometric tail, otherwise
    // report the refinement as undecided
    const double ratio = incs.back() / std::max(incs[incs.size() - 2], 1e-300);
    if (ratio < 0.9) {
        const double tail = incs.back() * ratio / (1.0 - ratio);
        return {total + tail, 0.1 * std::abs(tail) + std::abs(incs.back()), false};
    }
    throw ConvergenceError("c_pq_k: dyadic refinement undecided at the slice cap");
}

}  // namespace mhb
