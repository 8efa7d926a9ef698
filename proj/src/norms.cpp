#include "mhb/norms.hpp"

#include <cmath>
#include <limits>

#include "mhb/coeffs.hpp"
#include "mhb/radial.hpp"

namespace mhb {

namespace {

double ipow(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

double coeff(int n, int p, int q, double s) {
    return c_pq({n, p, q, s, Route::auto_route, 1e-10}).value;
}

}  // namespace

double component_sphere_norm_sq(const MhFunction& f, const MhComponent& c) {
    const double base = to_double(sphere_inner_product(c.h, c.h).re);
    if (f.box_power() == 0.0) return base;
    const double lam = box_eigenvalue(f.dim(), c.p, c.q);
    return std::pow(lam, 2.0 * f.box_power()) * base;
}

double norm_bergman(const MhFunction& f, double s) {
    const int n = f.dim();
    if (!(s > -n - 1.0)) throw DomainError("norm_bergman: requires s > -n-1");
    double total = 0.0;
    for (const auto& c : f.components())
        total += coeff(n, c.p, c.q, s) * component_sphere_norm_sq(f, c);
    return total;
}

double norm_box_smoothed(const MhFunction& f, double s, double t) {
    const int n = f.dim();
    if (!(s + t > -n - 1.0)) throw DomainError("norm_box_smoothed: requires s + t > -n-1");
    double total = 0.0;
    for (const auto& c : f.components()) {
        const double lam = box_eigenvalue(n, c.p, c.q);
        total += std::pow(lam, t) * coeff(n, c.p, c.q, s + t) *
                 component_sphere_norm_sq(f, c);
    }
    return total;
}

double norm_hardy_smoothed(const MhFunction& f, double s) {
    double total = 0.0;
    for (const auto& c : f.components()) {
        const double lam = box_eigenvalue(f.dim(), c.p, c.q);
        total += std::pow(lam, -s - 1.0) * component_sphere_norm_sq(f, c);
    }
    return total;
}

double hardy_dilate_norm_sq(const MhFunction& f, double s, double r) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("hardy_dilate_norm_sq: radius in (0,1)");
    double total = 0.0;
    for (const auto& c : f.components()) {
        const double lam = box_eigenvalue(f.dim(), c.p, c.q);
        const double u = radial_factor({static_cast<double>(f.dim()), c.p, c.q}, r);
        total += std::pow(lam, -s - 1.0) * u * u * component_sphere_norm_sq(f, c);
    }
    return total;
}

namespace {

// Exact m-fold sum of squares of the 2n^2 tangential fields on H^{pq}.  Each
// field maps H^{pq} into H^{p-1,q+1} (holomorphic family, total mass
// 2p(q+n-1)) or H^{p+1,q-1} (conjugate family, mass 2q(p+n-1)); the masses add
// up to the box eigenvalue 4pq + (2n-2)(p+q), and iterating the walk along the
// antidiagonal p+q = const gives the exact m-step total.  For m = 1 this is
// the box eigenvalue itself.
double tangential_walk_mass(int n, int p, int q, int m) {
    const int total_deg = p + q;
    std::vector<double> mass(total_deg + 1, 0.0);
    mass[p] = 1.0;
    for (int step = 0; step < m; ++step) {
        std::vector<double> next(total_deg + 1, 0.0);
        for (int pp = 0; pp <= total_deg; ++pp) {
            if (mass[pp] == 0.0) continue;
            const int qq = total_deg - pp;
            const double a = 2.0 * pp * (qq + n - 1.0);
            const double b = 2.0 * qq * (pp + n - 1.0);
            if (pp > 0) next[pp - 1] += a * mass[pp];
            if (qq > 0) next[pp + 1] += b * mass[pp];
        }
        mass = std::move(next);
    }
    double total = 0.0;
    for (double v : mass) total += v;
    return total;
}

double norm_tangential_spectral(const MhFunction& f, double s, int m) {
    const int n = f.dim();
    double total = std::norm(f.value_at_origin());
    for (const auto& c : f.components()) {
        if (c.p + c.q == 0) continue;
        total += tangential_walk_mass(n, c.p, c.q, m) * coeff(n, c.p, c.q, s + m) *
                 component_sphere_norm_sq(f, c);
    }
    return total;
}

// sum over all m-fold products X_{j_1} ... X_{j_m} of ||X... P||^2 in the
// (s+m)-weighted ball measure, accumulated depth-first.
double symbolic_level_sum(const BigradedPolynomial& P, int depth, double weight_s,
                          const std::vector<std::tuple<int, int, bool>>& fields) {
    if (depth == 0) return ball_inner_product(P, P, weight_s).real();
    double total = 0.0;
    for (const auto& [j, k, conj] : fields) {
        if (j == k) continue;  // zero field
        total += symbolic_level_sum(apply_L(P, j, k, conj), depth - 1, weight_s, fields);
    }
    return total;
}

// Radial ball moment of a matched monomial pair of total degree m:
// Gamma(m+n) Gamma(sigma+n+1) / (Gamma(n) Gamma(m+n+sigma+1)).
double radial_moment(int n, long m, double sigma) {
    return std::exp(std::lgamma(m + static_cast<double>(n)) + std::lgamma(sigma + n + 1.0) -
                    std::lgamma(static_cast<double>(n)) -
                    std::lgamma(m + n + sigma + 1.0));
}

// Ratio of the full radial quadratic form sum_{i,j} a_i a_j Rad(i+j+p+q) to its
// [0,K]^2 truncation, for the Taylor coefficients a_j of 2F1(p,q;p+q+n;t).
// This is the exact completion of the truncated symbolic norm; the S_pq
// normalization cancels in the ratio.
double radial_completion_factor(int n, int p, int q, double sigma, int K) {
    if (p == 0 || q == 0) return 1.0;  // the series terminates; truncation exact
    const double c = n + p + q;
    std::vector<double> a{1.0};
    // extend until the quadratic-form increments are negligible
    double full = 0.0;
    std::vector<double> cauchy;  // c2_m = sum_{i+j=m} a_i a_j, grown incrementally
    long m = 0;
    for (;;) {
        // ensure coefficients up to index m exist
        while (static_cast<long>(a.size()) <= m) {
            const long j = static_cast<long>(a.size()) - 1;
            a.push_back(a.back() * (p + j) * (q + j) / ((j + 1.0) * (c + j)));
        }
        double c2 = 0.0;
        for (long i = 0; i <= m; ++i) c2 += a[i] * a[m - i];
        const double inc = c2 * radial_moment(n, m + p + q, sigma);
        full += inc;
        if (m > 2 * K + 4 && inc <= 1e-15 * full) break;
        if (m > 2000000)
            throw ConvergenceError("radial_completion_factor: series cap reached");
        ++m;
    }
    double trunc = 0.0;
    for (long i = 0; i <= K; ++i)
        for (long j = 0; j <= K; ++j)
            trunc += a[i] * a[j] * radial_moment(n, i + j + p + q, sigma);
    return full / trunc;
}

double norm_tangential_symbolic(const MhFunction& f, double s, int m, int K) {
    if (!(s + m > -1.0))
        throw DomainError("norm_tangential symbolic: requires s + m > -1");
    const auto fields = tangential_field_indices(f.dim());
    double total = std::norm(f.value_at_origin());
    for (const auto& c : f.components()) {
        if (c.p + c.q == 0) continue;  // fields annihilate constants
        const MhFunction single = MhFunction::create(f.dim(), {c}, f.box_power());
        const BigradedPolynomial P = truncate_to_polynomial(single, K);
        const double sym = symbolic_level_sum(P, m, s + m, fields);
        total += sym * radial_completion_factor(f.dim(), c.p, c.q, s + m, K);
    }
    return total;
}

}  // namespace

double norm_tangential(const MhFunction& f, double s, int m, TangentialMode mode, int K) {
    if (m < 0) throw DomainError("norm_tangential: order must be nonnegative");
    if (mode == TangentialMode::spectral) return norm_tangential_spectral(f, s, m);
    return norm_tangential_symbolic(f, s, m, K);
}

double norm_sobolev(const MhFunction& f, double s, int m) {
    const int n = f.dim();
    if (!(s > -1.0)) throw DomainError("norm_sobolev: requires s > -1");
    if (m < 0) throw DomainError("norm_sobolev: order must be nonnegative");
    double total = 0.0;
    for (const auto& c : f.components()) {
        const double nrm = component_sphere_norm_sq(f, c);
        const double eig = (c.p + c.q) * (c.p + c.q + 2.0 * n - 2.0);
        for (int l = 0; l <= m; ++l) {
            for (int k = 0; k <= l; ++k) {
                const CpqkResult ck = c_pq_k(n, c.p, c.q, k, s);
                if (ck.divergent) return std::numeric_limits<double>::infinity();
                total += ipow(eig, l - k) * ck.value * nrm;
            }
        }
    }
    return total;
}

NormReport norm_report(const MhFunction& f, double s, int m, double t, int sobolev_order) {
    NormReport r;
    r.s = s;
    r.m = m;
    r.t = t;
    r.sobolev_order = sobolev_order;
    r.bergman = norm_bergman(f, s);
    r.tangential = norm_tangential(f, s, m, TangentialMode::spectral);
    r.box_smoothed = norm_box_smoothed(f, s, t);
    r.hardy = norm_hardy_smoothed(f, s);
    r.sobolev = norm_sobolev(f, s, sobolev_order);
    return r;
}

}  // namespace mhb
