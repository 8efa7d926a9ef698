#include "mhb/polynomial.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "mhb/specfun.hpp"

namespace mhb {

int MultiIndexPair::total_alpha() const {
    return std::accumulate(alpha.begin(), alpha.end(), 0);
}
int MultiIndexPair::total_beta() const {
    return std::accumulate(beta.begin(), beta.end(), 0);
}

BigradedPolynomial::BigradedPolynomial(int n) : n_(n) {
    if (n < 1) throw DomainError("BigradedPolynomial: dimension must be >= 1");
}

BigradedPolynomial BigradedPolynomial::monomial(int n, std::vector<int> alpha,
                                                std::vector<int> beta, CRational coef) {
    BigradedPolynomial p(n);
    if (static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n)
        throw DomainError("monomial: exponent vectors must have length n");
    for (int e : alpha)
        if (e < 0) throw DomainError("monomial: negative exponent");
    for (int e : beta)
        if (e < 0) throw DomainError("monomial: negative exponent");
    p.add_term({std::move(alpha), std::move(beta)}, coef);
    return p;
}

BigradedPolynomial BigradedPolynomial::radius_power(int n, int k) {
    BigradedPolynomial r(n);
    r.add_term({std::vector<int>(n, 0), std::vector<int>(n, 0)}, CRational(1));
    if (k == 0) return r;
    BigradedPolynomial r2(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> a(n, 0), b(n, 0);
        a[i] = 1;
        b[i] = 1;
        r2.add_term({a, b}, CRational(1));
    }
    for (int i = 0; i < k; ++i) r = r * r2;
    return r;
}

void BigradedPolynomial::add_term(const MultiIndexPair& key, const CRational& coef) {
    if (coef.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coef);
    } else {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<std::pair<int, int>> BigradedPolynomial::bidegree() const {
    std::optional<std::pair<int, int>> deg;
    for (const auto& [key, coef] : terms_) {
        const std::pair<int, int> d{key.total_alpha(), key.total_beta()};
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

BigradedPolynomial& BigradedPolynomial::operator+=(const BigradedPolynomial& o) {
    for (const auto& [key, coef] : o.terms_) add_term(key, coef);
    return *this;
}

BigradedPolynomial& BigradedPolynomial::operator-=(const BigradedPolynomial& o) {
    for (const auto& [key, coef] : o.terms_) add_term(key, -coef);
    return *this;
}

BigradedPolynomial operator*(const BigradedPolynomial& a, const BigradedPolynomial& b) {
    BigradedPolynomial out(a.n_);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            MultiIndexPair key = ka;
            for (int i = 0; i < a.n_; ++i) {
                key.alpha[i] += kb.alpha[i];
                key.beta[i] += kb.beta[i];
            }
            out.add_term(key, ca * cb);
        }
    }
    return out;
}

BigradedPolynomial BigradedPolynomial::scaled(const CRational& c) const {
    BigradedPolynomial out(n_);
    if (c.is_zero()) return out;
    for (const auto& [key, coef] : terms_) out.terms_.emplace(key, c * coef);
    return out;
}

BigradedPolynomial BigradedPolynomial::scaled(const Rational& c) const {
    return scaled(CRational{c, Rational(0)});
}

std::complex<double> BigradedPolynomial::eval(std::span<const std::complex<double>> z) const {
    if (static_cast<int>(z.size()) != n_)
        throw DomainError("eval: point dimension mismatch");
    std::complex<double> total = 0.0;
    for (const auto& [key, coef] : terms_) {
        std::complex<double> mono = 1.0;
        for (int i = 0; i < n_; ++i) {
            for (int e = 0; e < key.alpha[i]; ++e) mono *= z[i];
            const std::complex<double> zc = std::conj(z[i]);
            for (int e = 0; e < key.beta[i]; ++e) mono *= zc;
        }
        total += coef.to_complex() * mono;
    }
    return total;
}

std::string BigradedPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coef] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << coef.re.get_str() << (coef.im >= 0 ? "+" : "") << coef.im.get_str()
           << "i)";
        for (int i = 0; i < n_; ++i) {
            if (key.alpha[i] > 0) os << " z" << (i + 1) << "^" << key.alpha[i];
            if (key.beta[i] > 0) os << " zb" << (i + 1) << "^" << key.beta[i];
        }
    }
    return os.str();
}

BigradedPolynomial wirtinger(const BigradedPolynomial& poly, int j, bool conjugate) {
    const int n = poly.dim();
    if (j < 1 || j > n) throw DomainError("wirtinger: index out of range");
    BigradedPolynomial out(n);
    for (const auto& [key, coef] : poly.terms()) {
        const int e = conjugate ? key.beta[j - 1] : key.alpha[j - 1];
        if (e == 0) continue;
        MultiIndexPair k2 = key;
        if (conjugate)
            k2.beta[j - 1] -= 1;
        else
            k2.alpha[j - 1] -= 1;
        out.add_term(k2, Rational(e) * coef);
    }
    return out;
}

namespace {

// poly * z_j (conjugate = false) or poly * z-bar_j (conjugate = true)
BigradedPolynomial shift_up(const BigradedPolynomial& poly, int j, bool conjugate) {
    BigradedPolynomial out(poly.dim());
    for (const auto& [key, coef] : poly.terms()) {
        MultiIndexPair k2 = key;
        if (conjugate)
            k2.beta[j - 1] += 1;
        else
            k2.alpha[j - 1] += 1;
        out.add_term(k2, coef);
    }
    return out;
}

}  // namespace

BigradedPolynomial apply_L(const BigradedPolynomial& poly, int j, int k, bool conjugate) {
    const int n = poly.dim();
    if (j < 1 || j > n || k < 1 || k > n) throw DomainError("apply_L: index out of range");
    // L_jk = zb_j d_k - zb_k d_j;  Lbar_jk = z_j db_k - z_k db_j.
    BigradedPolynomial t1 = shift_up(wirtinger(poly, k, conjugate), j, !conjugate);
    BigradedPolynomial t2 = shift_up(wirtinger(poly, j, conjugate), k, !conjugate);
    return t1 - t2;
}

BigradedPolynomial apply_R(const BigradedPolynomial& poly) {
    BigradedPolynomial out(poly.dim());
    for (const auto& [key, coef] : poly.terms()) {
        const int w = key.total_alpha() - key.total_beta();
        if (w != 0) out.add_term(key, Rational(w) * coef);
    }
    return out;
}

BigradedPolynomial apply_N(const BigradedPolynomial& poly) {
    BigradedPolynomial out(poly.dim());
    for (const auto& [key, coef] : poly.terms()) {
        const int w = key.total_alpha() + key.total_beta();
        if (w != 0) out.add_term(key, Rational(w) * coef);
    }
    return out;
}

BigradedPolynomial apply_box(const BigradedPolynomial& poly) {
    const int n = poly.dim();
    BigradedPolynomial acc(n);
    for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
            if (j == k) continue;  // L_jj = 0
            acc += apply_L(apply_L(poly, j, k, true), j, k, false);
            acc += apply_L(apply_L(poly, j, k, false), j, k, true);
        }
    }
    return acc.scaled(Rational(-1));
}

BigradedPolynomial laplacian(const BigradedPolynomial& poly) {
    const int n = poly.dim();
    BigradedPolynomial acc(n);
    for (int j = 1; j <= n; ++j) acc += wirtinger(wirtinger(poly, j, false), j, true);
    return acc.scaled(Rational(4));
}

bool is_harmonic(const BigradedPolynomial& poly) { return laplacian(poly).is_zero(); }

std::vector<std::pair<int, BigradedPolynomial>> harmonic_decompose(
    const BigradedPolynomial& poly) {
    const auto deg = poly.bidegree();
    if (!deg) throw DomainError("harmonic_decompose: input must be bihomogeneous");
    if (poly.is_zero()) return {};
    const int a = deg->first, b = deg->second, n = poly.dim();

    BigradedPolynomial lap = laplacian(poly);
    if (lap.is_zero()) return {{0, poly}};

    // Delta(|z|^{2k} h) = 4k(a+b+n-k-1) |z|^{2(k-1)} h for h harmonic of
    // bidegree (a-k, b-k); recurse on Delta P and back-substitute h_0.
    auto sub = harmonic_decompose(lap);
    std::vector<std::pair<int, BigradedPolynomial>> out;
    BigradedPolynomial rest(n);
    for (auto& [m, g] : sub) {
        const int k = m + 1;
        const Rational gamma(4L * k * (a + b + n - k - 1));
        BigradedPolynomial h = g.scaled(Rational(1) / gamma);
        rest += BigradedPolynomial::radius_power(n, k) * h;
        out.emplace_back(k, std::move(h));
    }
    BigradedPolynomial h0 = poly - rest;
    if (!h0.is_zero()) out.insert(out.begin(), {0, std::move(h0)});
    return out;
}

namespace {

Rational factorial_rat(long m) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    return Rational(f);
}

// Pairs of terms contribute iff alpha_u - beta_u == gamma_v - delta_v; group
// both sides by that difference vector.
template <typename Accum, typename Moment>
void paired_moments(const BigradedPolynomial& P, const BigradedPolynomial& Q,
                    Accum&& accum, Moment&& moment) {
    std::map<std::vector<int>, std::vector<const std::pair<const MultiIndexPair, CRational>*>>
        groups;
    const int n = P.dim();
    for (const auto& term : Q.terms()) {
        std::vector<int> diff(n);
        for (int i = 0; i < n; ++i) diff[i] = term.first.alpha[i] - term.first.beta[i];
        groups[diff].push_back(&term);
    }
    for (const auto& tu : P.terms()) {
        std::vector<int> diff(n);
        for (int i = 0; i < n; ++i) diff[i] = tu.first.alpha[i] - tu.first.beta[i];
        auto it = groups.find(diff);
        if (it == groups.end()) continue;
        for (const auto* tv : it->second) {
            std::vector<int> kappa(n);
            for (int i = 0; i < n; ++i) kappa[i] = tu.first.alpha[i] + tv->first.beta[i];
            accum(tu.second, tv->second, moment(kappa));
        }
    }
}

}  // namespace

CRational sphere_inner_product(const BigradedPolynomial& P, const BigradedPolynomial& Q) {
    if (P.dim() != Q.dim()) throw DomainError("sphere_inner_product: dimension mismatch");
    const int n = P.dim();
    CRational total{Rational(0), Rational(0)};
    auto moment = [&](const std::vector<int>& kappa) -> Rational {
        long total_deg = 0;
        Rational num = factorial_rat(n - 1);
        for (int e : kappa) {
            num *= factorial_rat(e);
            total_deg += e;
        }
        return Rational(num / factorial_rat(n - 1 + total_deg));
    };
    paired_moments(P, Q,
                   [&](const CRational& cu, const CRational& cv, const Rational& m) {
                       total += m * (cu * cv.conj());
                   },
                   moment);
    return total;
}

std::complex<double> ball_inner_product(const BigradedPolynomial& P,
                                        const BigradedPolynomial& Q, double s) {
    if (P.dim() != Q.dim()) throw DomainError("ball_inner_product: dimension mismatch");
    if (!(s > -1.0)) throw DomainError("ball_inner_product: requires s > -1");
    const int n = P.dim();

    // flatten with coefficients converted once; group by alpha - beta
    struct Term {
        const MultiIndexPair* key;
        std::complex<double> coef;
    };
    std::map<std::vector<int>, std::vector<Term>> qgroups;
    for (const auto& [key, coef] : Q.terms()) {
        std::vector<int> diff(n);
        for (int i = 0; i < n; ++i) diff[i] = key.alpha[i] - key.beta[i];
        qgroups[diff].push_back({&key, coef.to_complex()});
    }
    // per-exponent factorial and Pochhammer tables sized by the largest degree
    int max_e = 0;
    auto scan = [&](const BigradedPolynomial& poly) {
        for (const auto& [key, coef] : poly.terms())
            for (int i = 0; i < n; ++i)
                max_e = std::max({max_e, key.alpha[i], key.beta[i]});
    };
    scan(P);
    scan(Q);
    std::vector<double> lg_fact(2 * max_e + 2, 0.0);
    for (std::size_t e = 1; e < lg_fact.size(); ++e)
        lg_fact[e] = lg_fact[e - 1] + std::log(static_cast<double>(e));
    std::vector<double> log_poch(2 * n * max_e + 2);
    {
        double acc = 0.0;
        for (std::size_t d = 0; d < log_poch.size(); ++d) {
            log_poch[d] = acc;  // log (s+n+1)_d
            acc += std::log(s + n + 1.0 + static_cast<double>(d));
        }
    }

    std::complex<double> total = 0.0;
    std::vector<int> diff(n);
    for (const auto& [pkey, pcoef] : P.terms()) {
        for (int i = 0; i < n; ++i) diff[i] = pkey.alpha[i] - pkey.beta[i];
        const auto it = qgroups.find(diff);
        if (it == qgroups.end()) continue;
        const std::complex<double> cu = pcoef.to_complex();
        for (const Term& t : it->second) {
            long deg = 0;
            double lg = 0.0;
            for (int i = 0; i < n; ++i) {
                const int e = pkey.alpha[i] + t.key->beta[i];
                lg += lg_fact[e];
                deg += e;
            }
            // kappa! / (s+n+1)_{|kappa|}
            total += std::exp(lg - log_poch[deg]) * (cu * std::conj(t.coef));
        }
    }
    return total;
}

std::vector<std::tuple<int, int, bool>> tangential_field_indices(int n) {
    std::vector<std::tuple<int, int, bool>> out;
    out.reserve(2 * n * n);
    for (int conj = 0; conj < 2; ++conj)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) out.emplace_back(j, k, conj == 1);
    return out;
}

}  // namespace mhb
