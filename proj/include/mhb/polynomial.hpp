#pragma once

// Exact sparse polynomial algebra in (z, z-bar) on C^n: Wirtinger derivatives,
// the tangential fields L_jk / Lbar_jk, the Euler-type operators R and N, the
// sphere sublaplacian box, the Euclidean Laplacian, harmonic decomposition of
// bihomogeneous polynomials, and closed-form sphere/ball moment inner products.
// Coefficients are exact complex rationals throughout; operator identities are
// tested for exact equality.

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mhb/errors.hpp"
#include "mhb/rational.hpp"

namespace mhb {

struct MultiIndexPair {
    std::vector<int> alpha;  // exponents of z
    std::vector<int> beta;   // exponents of z-bar

    int total_alpha() const;
    int total_beta() const;
    friend bool operator<(const MultiIndexPair& a, const MultiIndexPair& b) {
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        return a.beta < b.beta;
    }
    friend bool operator==(const MultiIndexPair& a, const MultiIndexPair& b) {
        return a.alpha == b.alpha && a.beta == b.beta;
    }
};

class BigradedPolynomial {
public:
    explicit BigradedPolynomial(int n);

    static BigradedPolynomial monomial(int n, std::vector<int> alpha, std::vector<int> beta,
                                       CRational coef = CRational(1));
    // (z_1 z-bar_1 + ... + z_n z-bar_n)^k
    static BigradedPolynomial radius_power(int n, int k);

    int dim() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<MultiIndexPair, CRational>& terms() const { return terms_; }

    void add_term(const MultiIndexPair& key, const CRational& coef);

    // (p, q) when every term has |alpha| = p and |beta| = q.
    std::optional<std::pair<int, int>> bidegree() const;

    BigradedPolynomial& operator+=(const BigradedPolynomial& o);
    BigradedPolynomial& operator-=(const BigradedPolynomial& o);
    friend BigradedPolynomial operator+(BigradedPolynomial a, const BigradedPolynomial& b) {
        return a += b;
    }
    friend BigradedPolynomial operator-(BigradedPolynomial a, const BigradedPolynomial& b) {
        return a -= b;
    }
    friend BigradedPolynomial operator*(const BigradedPolynomial& a,
                                        const BigradedPolynomial& b);
    friend bool operator==(const BigradedPolynomial& a, const BigradedPolynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    BigradedPolynomial scaled(const CRational& c) const;
    BigradedPolynomial scaled(const Rational& c) const;

    std::complex<double> eval(std::span<const std::complex<double>> z) const;
    std::string to_string() const;

private:
    int n_;
    std::map<MultiIndexPair, CRational> terms_;
};

// d/dz_j (conjugate = false) or d/dz-bar_j (conjugate = true); j is 1-based.
BigradedPolynomial wirtinger(const BigradedPolynomial& poly, int j, bool conjugate);

// L_jk = z-bar_j d/dz_k - z-bar_k d/dz_j, and the conjugate family.
BigradedPolynomial apply_L(const BigradedPolynomial& poly, int j, int k, bool conjugate);

// R = sum_j (z_j d/dz_j - z-bar_j d/dz-bar_j): eigenvalue p - q on bidegree (p,q).
BigradedPolynomial apply_R(const BigradedPolynomial& poly);

// N = sum_j (z_j d/dz_j + z-bar_j d/dz-bar_j): eigenvalue p + q.
BigradedPolynomial apply_N(const BigradedPolynomial& poly);

// box = -sum_{j,k} (L_jk Lbar_jk + Lbar_jk L_jk): eigenvalue 4pq + (2n-2)(p+q)
// on bigraded-harmonic input.
BigradedPolynomial apply_box(const BigradedPolynomial& poly);

// Euclidean Laplacian 4 sum_j d/dz_j d/dz-bar_j.
BigradedPolynomial laplacian(const BigradedPolynomial& poly);

bool is_harmonic(const BigradedPolynomial& poly);

// Unique splitting P = sum_k |z|^{2k} h_k with every h_k harmonic; input must
// be bihomogeneous.  Returns (k, h_k) pairs with nonzero h_k, ascending k.
std::vector<std::pair<int, BigradedPolynomial>> harmonic_decompose(
    const BigradedPolynomial& poly);

// Exact inner product in L^2 of the unit sphere (normalized surface measure):
// monomials pair to (n-1)! (alpha+delta)! / (n-1+|alpha+delta|)! when
// alpha+delta = beta+gamma, else zero.
CRational sphere_inner_product(const BigradedPolynomial& P, const BigradedPolynomial& Q);

// Weighted-ball analogue against the probability measure with parameter s > -1:
// matched monomials integrate to kappa! / (s+n+1)_{|kappa|}.
std::complex<double> ball_inner_product(const BigradedPolynomial& P,
                                        const BigradedPolynomial& Q, double s);

// All 2n^2 tangential fields (j, k, conjugate) in deterministic order; slots
// with j = k are identically zero fields and are kept for index regularity.
std::vector<std::tuple<int, int, bool>> tangential_field_indices(int n);

}  // namespace mhb
