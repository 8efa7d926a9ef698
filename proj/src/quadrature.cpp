#include "mhb/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>

#include "mhb/specfun.hpp"

namespace mhb {

double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

namespace {

// Eigenvalues of a symmetric tridiagonal matrix by implicit QL with Wilkinson
// shifts, tracking only the first component of each eigenvector (all that
// Golub-Welsch needs).  d: diagonal, e: subdiagonal (e[i] couples d[i], d[i+1]).
void tridiag_eigen_first_components(std::vector<double>& d, std::vector<double>& e,
                                    std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    e.resize(n, 0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m != l) {
                if (iter++ == 60)
                    throw ConvergenceError("tridiagonal eigensolver: too many QL iterations");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double bb = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * bb;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - bb;
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

struct RuleKey {
    int order;
    std::uint64_t alpha_bits;
    std::uint64_t beta_bits;
    bool operator<(const RuleKey& o) const {
        return std::tie(order, alpha_bits, beta_bits) <
               std::tie(o.order, o.alpha_bits, o.beta_bits);
    }
};

std::uint64_t double_bits(double x) {
    std::uint64_t u;
    std::memcpy(&u, &x, sizeof(u));
    return u;
}

}  // namespace

QuadratureRule build_rule(int order, double alpha_exp, double beta_exp) {
    if (order < 1) throw DomainError("build_rule: order must be >= 1");
    if (!(alpha_exp > -1.0) || !(beta_exp > -1.0))
        throw DomainError("build_rule: weight exponents must exceed -1 (divergent integral)");

    const double a = alpha_exp, b = beta_exp, ab = a + b;
    std::vector<double> d(order), e(order, 0.0), z(order, 0.0);
    d[0] = (b - a) / (ab + 2.0);
    for (int k = 1; k < order; ++k) {
        const double tk = 2.0 * k + ab;
        d[k] = (b * b - a * a) / (tk * (tk + 2.0));
        double e2;
        if (k == 1) {
            e2 = 4.0 * (a + 1.0) * (b + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
        } else {
            e2 = 4.0 * k * (k + a) * (k + b) * (k + ab) /
                 (tk * tk * (tk + 1.0) * (tk - 1.0));
        }
        e[k - 1] = std::sqrt(e2);
    }
    z[0] = 1.0;
    tridiag_eigen_first_components(d, e, z);

    std::vector<int> idx(order);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return d[i] < d[j]; });

    const double mu0 = std::exp(log_beta(beta_exp + 1.0, alpha_exp + 1.0));
    QuadratureRule rule;
    rule.order = order;
    rule.alpha_exp = alpha_exp;
    rule.beta_exp = beta_exp;
    rule.nodes.reserve(order);
    rule.weights.reserve(order);
    for (int i : idx) {
        rule.nodes.push_back(0.5 * (1.0 + d[i]));
        rule.weights.push_back(mu0 * z[i] * z[i]);
    }
    return rule;
}

const QuadratureRule& cached_rule(int order, double alpha_exp, double beta_exp) {
    static std::mutex mtx;
    static std::map<RuleKey, std::unique_ptr<QuadratureRule>> cache;
    const RuleKey key{order, double_bits(alpha_exp), double_bits(beta_exp)};
    {
        std::lock_guard lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    auto rule = std::make_unique<QuadratureRule>(build_rule(order, alpha_exp, beta_exp));
    std::lock_guard lock(mtx);
    auto [it, inserted] = cache.emplace(key, std::move(rule));
    return *it->second;
}

namespace {

double apply_rule(const QuadratureRule& rule, const std::function<double(double)>& f) {
    double sum = 0.0;
    for (int i = 0; i < rule.order; ++i) sum += rule.weights[i] * f(rule.nodes[i]);
    return sum;
}

constexpr int kMinOrder = 16;
constexpr int kMaxOrder1d = 4096;
constexpr int kMaxOrder2d = 2048;

}  // namespace

IntegralEstimate integrate(const std::function<double(double)>& f, double alpha_exp,
                           double beta_exp, double rel_tol) {
    double prev = apply_rule(cached_rule(kMinOrder, alpha_exp, beta_exp), f);
    for (int order = 2 * kMinOrder; order <= kMaxOrder1d; order *= 2) {
        const double cur = apply_rule(cached_rule(order, alpha_exp, beta_exp), f);
        const double diff = std::abs(cur - prev);
        if (diff <= rel_tol * std::max(std::abs(cur), 1e-300)) return {cur, diff};
        prev = cur;
    }
    throw ConvergenceError("integrate: adaptive refinement hit the order cap 4096");
}

IntegralEstimate integrate_endpoint(const std::function<double(double)>& f,
                                    double alpha_exp, double beta_exp, double rel_tol) {
    if (!(alpha_exp > -1.0) || !(beta_exp > -1.0))
        throw DomainError("integrate_endpoint: weight exponents must exceed -1");
    // head on [0, 15/16]: substitute t = h u; the t^beta factor becomes the
    // Jacobi weight in u, everything else is analytic on the closed interval
    const double h = 1.0 - 1.0 / 16.0;
    auto head_f = [&](double u) {
        const double t = h * u;
        return std::pow(1.0 - t, alpha_exp) * f(t);
    };
    double total = integrate(head_f, 0.0, beta_exp, rel_tol).value *
                   std::pow(h, beta_exp + 1.0);
    // Dyadic slices toward t = 1; increments decay like 2^{-m(alpha+1)}.
    // The slice depth is capped at w ~ 2^{-32}: below that the distance 1 - t
    // of a node carries relative rounding noise above 1e-7 (ulp(1) floor), so
    // the remainder is completed analytically instead.
    const QuadratureRule& gl = cached_rule(32, 0.0, 0.0);
    double prev_inc = 0.0;
    double last_inc = 0.0;
    const int m_last = 32;
    // early stopping is disabled while the t^beta mass transient lasts
    const int m0 = std::max(
        7, static_cast<int>(std::ceil(std::log2(std::max(1.0, beta_exp)))) + 3);
    for (int m = 4; m <= m_last; ++m) {
        const double lo = 1.0 - std::ldexp(1.0, -m);
        const double width = std::ldexp(1.0, -m - 1);
        double inc = 0.0;
        for (int i = 0; i < gl.order; ++i) {
            const double t = lo + width * gl.nodes[i];
            inc += gl.weights[i] * std::pow(t, beta_exp) *
                   std::pow(1.0 - t, alpha_exp) * f(t);
        }
        inc *= width;
        total += inc;
        last_inc = std::abs(inc);
        if (m >= m0 && last_inc <= 0.25 * rel_tol * std::abs(total)) {
            const double ratio = last_inc / std::max(std::abs(prev_inc), 1e-300);
            const double tail = last_inc * ratio / std::max(1.0 - ratio, 0.05);
            return {total, tail + last_inc};
        }
        prev_inc = inc;
    }
    // Analytic completion below w* = 2^{-m_last-1}: freeze f at the
    // log-mean abscissa of the w^alpha weight (exact to first order in
    // log w even for log-type integrands) and integrate the weight itself.
    const double w_star = std::ldexp(1.0, -m_last - 1);
    const double w_mean = std::max(w_star * std::exp(-1.0 / (alpha_exp + 1.0)), 1e-14);
    const double f_frozen = std::pow(1.0 - w_mean, beta_exp) * f(1.0 - w_mean);
    const QuadratureRule& tail_rule = cached_rule(16, 0.0, alpha_exp);
    double weight_mass = 0.0;  // int_0^1 v^alpha (1 - w* v)^beta dv
    for (int i = 0; i < tail_rule.order; ++i)
        weight_mass += tail_rule.weights[i] *
                       std::exp(beta_exp * std::log1p(-w_star * tail_rule.nodes[i]));
    const double tail = f_frozen * std::pow(w_star, alpha_exp + 1.0) * weight_mass;
    total += tail;
    return {total, std::abs(tail) * 1e-4 + last_inc};
}

IntegralEstimate integrate_2d(const std::function<double(double, double)>& f,
                              std::pair<double, double> x_exps,
                              std::pair<double, double> y_exps, double rel_tol) {
    auto tensor = [&](int order) {
        const QuadratureRule& rx = cached_rule(order, x_exps.first, x_exps.second);
        const QuadratureRule& ry = cached_rule(order, y_exps.first, y_exps.second);
        double sum = 0.0;
        for (int i = 0; i < order; ++i) {
            double row = 0.0;
            for (int j = 0; j < order; ++j) row += ry.weights[j] * f(rx.nodes[i], ry.nodes[j]);
            sum += rx.weights[i] * row;
        }
        return sum;
    };
    double prev = tensor(kMinOrder);
    for (int order = 2 * kMinOrder; order <= kMaxOrder2d; order *= 2) {
        const double cur = tensor(order);
        const double diff = std::abs(cur - prev);
        if (diff <= rel_tol * std::max(std::abs(cur), 1e-300)) return {cur, diff};
        prev = cur;
    }
    throw ConvergenceError("integrate_2d: adaptive refinement hit the order cap");
}

}  // namespace mhb
