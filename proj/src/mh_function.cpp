#include "mhb/mh_function.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>

#include "mhb/radial.hpp"
#include "mhb/specfun.hpp"

namespace mhb {

MhFunction MhFunction::create(int n, std::vector<MhComponent> components, double box_power) {
    if (n < 1) throw ValidationError("MhFunction: dimension must be >= 1");
    std::set<std::pair<int, int>> seen;
    for (auto& c : components) {
        if (c.p < 0 || c.q < 0)
            throw ValidationError("MhFunction: component bidegree must be nonnegative");
        if (c.h.dim() != n) throw ValidationError("MhFunction: component dimension mismatch");
        if (c.h.is_zero()) throw ValidationError("MhFunction: zero component");
        if (!seen.insert({c.p, c.q}).second)
            throw ValidationError("MhFunction: duplicate component (" + std::to_string(c.p) +
                                  "," + std::to_string(c.q) + ")");
        const auto deg = c.h.bidegree();
        if (!deg || deg->first != c.p || deg->second != c.q)
            throw ValidationError("MhFunction: component (" + std::to_string(c.p) + "," +
                                  std::to_string(c.q) + ") is not bihomogeneous of its label");
        if (!is_harmonic(c.h))
            throw ValidationError("MhFunction: component (" + std::to_string(c.p) + "," +
                                  std::to_string(c.q) + ") is not harmonic: " +
                                  c.h.to_string());
    }
    std::sort(components.begin(), components.end(), [](const auto& a, const auto& b) {
        return std::pair{a.p, a.q} < std::pair{b.p, b.q};
    });
    return MhFunction(n, std::move(components), box_power);
}

std::complex<double> MhFunction::value_at_origin() const {
    for (const auto& c : comps_) {
        if (c.p == 0 && c.q == 0) {
            const std::vector<std::complex<double>> origin(n_, 0.0);
            return c.h.eval(origin);
        }
    }
    return 0.0;
}

double box_eigenvalue(int n, int p, int q) {
    return 4.0 * p * q + (2.0 * n - 2.0) * (p + q) + 1.0;
}

std::complex<double> evaluate(const MhFunction& f, std::span<const std::complex<double>> z) {
    if (static_cast<int>(z.size()) != f.dim())
        throw DomainError("evaluate: point dimension mismatch");
    double t = 0.0;
    for (const auto& zi : z) t += std::norm(zi);
    if (!(t < 1.0)) throw DomainError("evaluate: point must lie inside the unit ball");
    std::complex<double> total = 0.0;
    for (const auto& c : f.components()) {
        const double radial = s_pq({static_cast<double>(f.dim()), c.p, c.q}, t);
        const double scale =
            f.box_power() == 0.0
                ? 1.0
                : std::pow(box_eigenvalue(f.dim(), c.p, c.q), f.box_power());
        total += scale * radial * c.h.eval(z);
    }
    return total;
}

namespace {

// Exact Taylor coefficients a_j of S_pq: a_0 = (n)_p(n)_q/(n)_{p+q},
// a_{j+1} = a_j (p+j)(q+j) / ((j+1)(n+p+q+j)).
std::vector<Rational> s_series_coeffs(int n, int p, int q, int K) {
    Rational a0(1);
    for (int i = 0; i < p; ++i) a0 *= Rational(n + i);
    for (int i = 0; i < q; ++i) a0 *= Rational(n + i);
    for (int i = 0; i < p + q; ++i) a0 /= Rational(n + i);
    std::vector<Rational> out{a0};
    for (int j = 0; j < K; ++j) {
        if (p == 0 || q == 0) break;  // series terminates
        Rational next = out.back();
        next *= Rational(static_cast<long>(p) + j) * Rational(static_cast<long>(q) + j);
        next /= Rational(static_cast<long>(j) + 1) *
                Rational(static_cast<long>(n) + p + q + j);
        out.push_back(std::move(next));
    }
    return out;
}

}  // namespace

BigradedPolynomial truncate_to_polynomial(const MhFunction& f, int K) {
    if (K < 0) throw DomainError("truncate_to_polynomial: K must be >= 0");
    const int n = f.dim();
    const BigradedPolynomial r2 = BigradedPolynomial::radius_power(n, 1);
    BigradedPolynomial out(n);
    for (const auto& c : f.components()) {
        const auto coeffs = s_series_coeffs(n, c.p, c.q, K);
        Rational scale(1);
        if (f.box_power() != 0.0)
            scale = rational_from_double(
                std::pow(box_eigenvalue(n, c.p, c.q), f.box_power()));
        BigradedPolynomial power = c.h;  // |z|^{2j} h, built incrementally
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            out += power.scaled(scale * coeffs[j]);
            if (j + 1 < coeffs.size()) power = power * r2;
        }
    }
    return out;
}

double truncation_tail_bound(const MhFunction& f, int K, double r0) {
    if (!(r0 >= 0.0 && r0 < 1.0))
        throw DomainError("truncation_tail_bound: radius must lie in [0,1)");
    const int n = f.dim();
    const double t0 = r0 * r0;
    double bound = 0.0;
    for (const auto& c : f.components()) {
        if (c.p == 0 || c.q == 0) continue;  // truncation exact
        double coeff_sum = 0.0;
        for (const auto& [key, coef] : c.h.terms()) {
            const auto v = coef.to_complex();
            coeff_sum += std::abs(v);
        }
        const double scale = f.box_power() == 0.0
                                 ? 1.0
                                 : std::pow(box_eigenvalue(n, c.p, c.q), f.box_power());
        // a_j t0^j summed past K until negligible
        double a = to_double(s_series_coeffs(n, c.p, c.q, 0)[0]);
        double tpow = 1.0, tail = 0.0;
        for (long j = 0; j < 2000000; ++j) {
            if (j > K) tail += a * tpow;
            const double term = a * tpow;
            a *= (c.p + j) * (c.q + j) / ((j + 1.0) * (n + c.p + c.q + j));
            tpow *= t0;
            if (j > K && term <= 1e-18 * std::max(tail, 1e-300)) break;
        }
        bound += scale * coeff_sum * tail * std::pow(r0, c.p + c.q);
    }
    return bound;
}

namespace {

// 4 (1 - |z|^2) sum_{j,k} (delta_jk - z_j zb_k) d_j db_k applied symbolically.
BigradedPolynomial invariant_laplacian(const BigradedPolynomial& P) {
    const int n = P.dim();
    BigradedPolynomial acc(n);
    for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
            BigradedPolynomial d2 = wirtinger(wirtinger(P, k, true), j, false);
            if (j == k) acc += d2;
            std::vector<int> a(n, 0), b(n, 0);
            a[j - 1] += 1;
            b[k - 1] += 1;
            acc -= BigradedPolynomial::monomial(n, a, b) * d2;
        }
    }
    BigradedPolynomial one_minus_r2(n);
    one_minus_r2.add_term({std::vector<int>(n, 0), std::vector<int>(n, 0)}, CRational(1));
    one_minus_r2 -= BigradedPolynomial::radius_power(n, 1);
    return (one_minus_r2 * acc).scaled(Rational(4));
}

}  // namespace

double mharmonicity_residual(const MhFunction& f, int K,
                             std::span<const std::vector<std::complex<double>>> points) {
    const BigradedPolynomial residual_poly = invariant_laplacian(truncate_to_polynomial(f, K));
    double worst = 0.0;
    for (const auto& pt : points) {
        const std::complex<double> v = residual_poly.eval(pt);
        worst = std::max(worst, std::abs(v));
    }
    return worst;
}

MhFunction apply_box_power(const MhFunction& f, double t) {
    return MhFunction::create(f.dim(), f.components(), f.box_power() + t);
}

std::vector<std::complex<double>> moebius(std::span<const std::complex<double>> z,
                                          std::span<const std::complex<double>> w) {
    if (z.size() != w.size()) throw DomainError("moebius: dimension mismatch");
    const std::size_t n = z.size();
    double z2 = 0.0;
    for (const auto& zi : z) z2 += std::norm(zi);
    if (!(z2 < 1.0)) throw DomainError("moebius: center must lie inside the ball");
    std::vector<std::complex<double>> out(n);
    if (z2 == 0.0) {
        for (std::size_t i = 0; i < n; ++i) out[i] = -w[i];
        return out;
    }
    std::complex<double> wz = 0.0;  // <w, z>
    for (std::size_t i = 0; i < n; ++i) wz += w[i] * std::conj(z[i]);
    const std::complex<double> denom = 1.0 - wz;
    if (std::abs(denom) < 1e-15) throw DomainError("moebius: vanishing denominator");
    const std::complex<double> proj = wz / z2;  // P_z w = proj * z
    const double root = std::sqrt(1.0 - z2);
    for (std::size_t i = 0; i < n; ++i) {
        const std::complex<double> pzw = proj * z[i];
        out[i] = (z[i] - pzw - root * (w[i] - pzw)) / denom;
    }
    return out;
}

namespace {

// Flattened evaluator for tight Monte Carlo loops: per component, the radial
// Taylor coefficients to the needed depth plus numeric monomial terms.
struct CompiledMh {
    struct Term {
        std::vector<int> alpha, beta;
        std::complex<double> coef;
    };
    struct Comp {
        std::vector<double> radial;  // includes normalization and box scaling
        std::vector<Term> terms;
    };
    int n = 1;
    std::vector<Comp> comps;

    static CompiledMh build(const MhFunction& f, double t_max) {
        CompiledMh c;
        c.n = f.dim();
        for (const auto& mc : f.components()) {
            Comp comp;
            const double scale =
                f.box_power() == 0.0
                    ? 1.0
                    : std::pow(box_eigenvalue(f.dim(), mc.p, mc.q), f.box_power());
            double a = 1.0;
            for (int i = 0; i < mc.p; ++i) a *= (f.dim() + i);
            for (int i = 0; i < mc.q; ++i) a *= (f.dim() + i);
            for (int i = 0; i < mc.p + mc.q; ++i) a /= (f.dim() + i);
            double tpow = 1.0;
            for (long j = 0;; ++j) {
                comp.radial.push_back(scale * a);
                if (mc.p == 0 || mc.q == 0) break;
                const double mag = a * tpow;
                if (j > 4 && mag <= 1e-18) break;
                if (j > 2000000)
                    throw ConvergenceError("mean_value evaluator: radius too close to 1");
                a *= (mc.p + j) * (mc.q + j) /
                     ((j + 1.0) * (f.dim() + mc.p + mc.q + j));
                tpow *= t_max;
            }
            for (const auto& [key, coef] : mc.h.terms())
                comp.terms.push_back({key.alpha, key.beta, coef.to_complex()});
            c.comps.push_back(std::move(comp));
        }
        return c;
    }

    std::complex<double> eval(std::span<const std::complex<double>> z) const {
        double t = 0.0;
        for (const auto& zi : z) t += std::norm(zi);
        std::complex<double> total = 0.0;
        for (const auto& comp : comps) {
            double s = 0.0, tp = 1.0;
            for (const double a : comp.radial) {
                s += a * tp;
                tp *= t;
            }
            std::complex<double> hval = 0.0;
            for (const auto& term : comp.terms) {
                std::complex<double> mono = term.coef;
                for (int i = 0; i < n; ++i) {
                    for (int e = 0; e < term.alpha[i]; ++e) mono *= z[i];
                    if (term.beta[i] > 0) {
                        const std::complex<double> zc = std::conj(z[i]);
                        for (int e = 0; e < term.beta[i]; ++e) mono *= zc;
                    }
                }
                hval += mono;
            }
            total += s * hval;
        }
        return total;
    }
};

}  // namespace

MeanValueCheck mean_value_residual(const MhFunction& f,
                                   std::span<const std::complex<double>> z, double r,
                                   long samples, std::uint64_t seed) {
    if (static_cast<int>(z.size()) != f.dim())
        throw DomainError("mean_value_residual: point dimension mismatch");
    if (!(r > 0.0 && r < 1.0)) throw DomainError("mean_value_residual: radius in (0,1)");
    double z2 = 0.0;
    for (const auto& zi : z) z2 += std::norm(zi);
    if (!(z2 < 1.0)) throw DomainError("mean_value_residual: center outside the ball");

    const double zr = std::sqrt(z2);
    const double rho = (zr + r) / (1.0 + zr * r);  // max |phi_z(r zeta)|
    const CompiledMh ev = CompiledMh::build(f, rho * rho);
    const std::complex<double> fz = evaluate(f, z);

    std::mt19937_64 rng(seed);
    const int n = f.dim();
    auto next_uniform = [&rng]() {
        return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
    };
    std::vector<std::complex<double>> zeta(n), w(n);
    double sum_re = 0.0, sum_im = 0.0, sq_re = 0.0, sq_im = 0.0;
    for (long it = 0; it < samples; ++it) {
        // complex Gaussian vector normalized to the sphere (Box-Muller)
        double norm2 = 0.0;
        for (int i = 0; i < n; ++i) {
            const double u1 = next_uniform(), u2 = next_uniform();
            const double rad = std::sqrt(-2.0 * std::log(u1));
            zeta[i] = {rad * std::cos(2.0 * M_PI * u2), rad * std::sin(2.0 * M_PI * u2)};
            norm2 += std::norm(zeta[i]);
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (int i = 0; i < n; ++i) zeta[i] *= inv * r;
        w = moebius(z, zeta);
        const std::complex<double> v = ev.eval(w);
        sum_re += v.real();
        sum_im += v.imag();
        sq_re += v.real() * v.real();
        sq_im += v.imag() * v.imag();
    }
    const double ns = static_cast<double>(samples);
    const std::complex<double> mean{sum_re / ns, sum_im / ns};
    const double var_re = std::max(0.0, sq_re / ns - mean.real() * mean.real());
    const double var_im = std::max(0.0, sq_im / ns - mean.imag() * mean.imag());
    MeanValueCheck out;
    out.residual = std::abs(fz - mean);
    out.std_error = std::sqrt((var_re + var_im) / ns);
    return out;
}

std::vector<std::pair<double, double>> blowup_profile(int n, int p, int q,
                                                      std::span<const double> r_grid) {
    if (p < 1 || q < 1) throw DomainError("blowup_profile: requires p, q >= 1");
    std::vector<std::pair<double, double>> out;
    out.reserve(r_grid.size());
    const RadialProfile prof{static_cast<double>(n), p, q};
    for (const double r : r_grid) {
        if (!(r > 0.0 && r <= 1.0 - 1e-6))
            throw DomainError("blowup_profile: radii must lie in (0, 1-1e-6]");
        out.emplace_back(r, radial_k_derivative(prof, n + 1, r * r, /*normalized=*/false));
    }
    return out;
}

}  // namespace mhb
