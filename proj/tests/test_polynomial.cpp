#include <doctest.h>

#include <cmath>
#include <random>

#include "mhb/polynomial.hpp"
#include "mhb/specfun.hpp"
#include "mhb/verify.hpp"
#include "testutil.hpp"

using namespace mhb;
using testutil::rel_err;

namespace {

BigradedPolynomial mono(int n, std::vector<int> a, std::vector<int> b, long re = 1,
                        long im = 0) {
    return BigradedPolynomial::monomial(n, std::move(a), std::move(b),
                                        {Rational(re), Rational(im)});
}

}  // namespace

TEST_CASE("wirtinger derivatives") {
    CHECK(wirtinger(mono(2, {2, 0}, {0, 0}), 1, false) == mono(2, {1, 0}, {0, 0}, 2));
    CHECK(wirtinger(mono(2, {1, 0}, {0, 0}), 1, true).is_zero());
    CHECK(wirtinger(mono(2, {1, 0}, {0, 1}), 1, false) == mono(2, {0, 0}, {0, 1}));
    CHECK_THROWS_AS(wirtinger(mono(2, {1, 0}, {0, 0}), 3, false), DomainError);
}

TEST_CASE("tangential fields on coordinates") {
    CHECK(apply_L(mono(2, {1, 0}, {0, 0}), 1, 2, false) == mono(2, {0, 0}, {0, 1}, -1));
    CHECK(apply_L(mono(2, {0, 1}, {0, 0}), 1, 2, false) == mono(2, {0, 0}, {1, 0}));
    CHECK(apply_L(mono(2, {0, 0}, {0, 1}), 1, 2, true) == mono(2, {1, 0}, {0, 0}));
    // L annihilates |z|^2, so it commutes with radius powers
    const auto r2 = BigradedPolynomial::radius_power(2, 1);
    CHECK(apply_L(r2, 1, 2, false).is_zero());
    CHECK(apply_L(r2, 2, 1, true).is_zero());
}

TEST_CASE("Euler-type operators") {
    const auto g = mono(2, {2, 0}, {0, 1});
    CHECK(apply_R(g) == g.scaled(Rational(1)));
    CHECK(apply_N(mono(2, {1, 0}, {0, 1})) == mono(2, {1, 0}, {0, 1}).scaled(Rational(2)));
    CHECK(apply_R(mono(2, {0, 0}, {0, 0}, 5)).is_zero());
}

TEST_CASE("box eigenvalues on harmonic monomials") {
    // box(z1 zbar2) = 8 z1 zbar2 for n = 2
    const auto h = mono(2, {1, 0}, {0, 1});
    CHECK(apply_box(h) == h.scaled(Rational(8)));
    // box(z1^p) = (2n-2) p z1^p
    for (int n : {2, 3}) {
        for (int p : {1, 2, 5}) {
            std::vector<int> a(n, 0), b(n, 0);
            a[0] = p;
            const auto zp = mono(n, a, b);
            CHECK(apply_box(zp) == zp.scaled(Rational((2L * n - 2) * p)));
        }
    }
    CHECK(apply_box(mono(2, {0, 0}, {0, 0})).is_zero());
}

TEST_CASE("laplacian basics") {
    BigradedPolynomial z1zb1(2);
    z1zb1.add_term({{1, 0}, {1, 0}}, CRational(1));
    CHECK(laplacian(z1zb1) == mono(2, {0, 0}, {0, 0}, 4));
    CHECK(laplacian(mono(2, {3, 0}, {0, 2})).is_zero());
    for (int n : {2, 3}) {
        const auto r2 = BigradedPolynomial::radius_power(n, 1);
        CHECK(laplacian(r2) ==
              BigradedPolynomial::monomial(n, std::vector<int>(n, 0), std::vector<int>(n, 0),
                                           CRational(4L * n)));
    }
}

TEST_CASE("harmonic decomposition") {
    // z1 zbar1 = (z1 zbar1 - |z|^2/2) + |z|^2 * 1/2 for n = 2
    BigradedPolynomial P(2);
    P.add_term({{1, 0}, {1, 0}}, CRational(1));
    const auto parts = harmonic_decompose(P);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].first == 0);
    CHECK(parts[1].first == 1);
    CHECK(is_harmonic(parts[0].second));
    BigradedPolynomial rebuilt =
        parts[0].second + BigradedPolynomial::radius_power(2, 1) * parts[1].second;
    CHECK(rebuilt == P);

    // separated-variable monomials are already harmonic
    const auto single = harmonic_decompose(mono(2, {3, 0}, {0, 2}));
    REQUIRE(single.size() == 1);
    CHECK(single[0].first == 0);

    CHECK_THROWS_AS(harmonic_decompose(mono(2, {1, 0}, {0, 0}) + mono(2, {2, 0}, {0, 0})),
                    DomainError);

    // random bihomogeneous polynomials: exact round-trip, harmonic components
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const int dp = 1 + static_cast<int>(rng() % 3);
        const int dq = 1 + static_cast<int>(rng() % 3);
        BigradedPolynomial Q(n);
        for (int t = 0; t < 4; ++t) {
            std::vector<int> a(n, 0), b(n, 0);
            for (int i = 0; i < dp; ++i) a[rng() % n] += 1;
            for (int i = 0; i < dq; ++i) b[rng() % n] += 1;
            Q.add_term({a, b},
                       {Rational(static_cast<long>(rng() % 9) - 4),
                        Rational(static_cast<long>(rng() % 9) - 4)});
        }
        if (Q.is_zero()) continue;
        const auto comps = harmonic_decompose(Q);
        BigradedPolynomial back(n);
        for (const auto& [k, h] : comps) {
            CHECK(is_harmonic(h));
            back += BigradedPolynomial::radius_power(n, k) * h;
        }
        CHECK(back == Q);
    }
}

TEST_CASE("sphere inner products: exact moments and a Monte Carlo oracle") {
    const auto z1 = mono(2, {1, 0}, {0, 0});
    const auto z2 = mono(2, {0, 1}, {0, 0});
    CHECK(sphere_inner_product(z1, z1) == CRational{Rational(1, 2), Rational(0)});
    CHECK(sphere_inner_product(z1, z2).is_zero());

    // Monte Carlo oracle with 1e7 uniform sphere samples, 3 sigma band
    std::mt19937_64 rng(52);
    const auto h = mono(2, {1, 0}, {0, 1});  // z1 zbar2
    const long N = 10000000;
    double acc = 0.0, acc2 = 0.0;
    for (long i = 0; i < N; ++i) {
        const auto zeta = testutil::sphere_point(2, rng);
        const double v = std::norm(zeta[0] * std::conj(zeta[1]));
        acc += v;
        acc2 += v * v;
    }
    const double mean = acc / N;
    const double sigma = std::sqrt((acc2 / N - mean * mean) / N);
    const double exact = to_double(sphere_inner_product(h, h).re);
    CHECK(rel_err(exact, 1.0 / 6.0) < 1e-15);
    CHECK(std::abs(mean - exact) < 3.0 * sigma + 1e-12);
}

TEST_CASE("ball inner products use the shifted-Pochhammer moments") {
    // ||z^alpha||^2 = alpha! / (s+n+1)_{|alpha|}
    for (double s : {-0.5, 0.0, 1.5}) {
        const auto m1 = mono(2, {2, 1}, {0, 0});
        const double want =
            (2.0 * 1.0) /
            (pochhammer(s + 3.0, 3.0));
        CHECK(rel_err(ball_inner_product(m1, m1, s).real(), want) < 1e-13);
    }
    const auto u = mono(2, {1, 0}, {0, 0});
    const auto v = mono(2, {0, 1}, {0, 0});
    CHECK(std::abs(ball_inner_product(u, v, 0.0)) < 1e-16);
    CHECK_THROWS_AS(ball_inner_product(u, u, -1.0), DomainError);
}

TEST_CASE("adjointness, commutation, orthogonality on random polynomials") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        auto rnd = [&](int dp, int dq) {
            BigradedPolynomial P(n);
            for (int t = 0; t < 3; ++t) {
                std::vector<int> a(n, 0), b(n, 0);
                for (int i = 0; i < dp; ++i) a[rng() % n] += 1;
                for (int i = 0; i < dq; ++i) b[rng() % n] += 1;
                P.add_term({a, b},
                           {Rational(static_cast<long>(rng() % 7) - 3),
                            Rational(static_cast<long>(rng() % 7) - 3)});
            }
            return P;
        };
        const auto P = rnd(2, 1), Q = rnd(2, 1);
        for (int j = 1; j <= n; ++j) {
            for (int k = 1; k <= n; ++k) {
                // <L_jk P, Q> = -<P, Lbar_jk Q>, exactly
                const auto lhs = sphere_inner_product(apply_L(P, j, k, false), Q);
                const auto rhs = sphere_inner_product(P, apply_L(Q, j, k, true));
                CHECK((lhs + rhs).is_zero());
                // N commutes with every field
                CHECK(apply_N(apply_L(P, j, k, false)) == apply_L(apply_N(P), j, k, false));
            }
        }
        CHECK(apply_box(apply_R(P)) == apply_R(apply_box(P)));
    }

    // distinct bidegrees are orthogonal on the sphere
    std::mt19937_64 rng2(54);
    const auto h1 = verify::random_harmonic_component(2, 2, 1, rng2);
    const auto h2 = verify::random_harmonic_component(2, 1, 2, rng2);
    const auto h3 = verify::random_harmonic_component(2, 2, 2, rng2);
    CHECK(sphere_inner_product(h1, h2).is_zero());
    CHECK(sphere_inner_product(h1, h3).is_zero());
    CHECK_FALSE(sphere_inner_product(h3, h3).is_zero());
}

TEST_CASE("full eigenvalue table including the normal-derivative square") {
    for (int n : {2, 3, 4}) {
        for (int p = 0; p <= 4; ++p) {
            for (int q = 0; q <= 4; ++q) {
                std::vector<int> a(n, 0), b(n, 0);
                a[0] = p;
                b[1] = q;
                const auto h = mono(n, a, b);
                const long box_eig = 4L * p * q + (2L * n - 2) * (p + q);
                const long full_eig = static_cast<long>(p + q) * (p + q + 2 * n - 2);
                CHECK(apply_box(h) == h.scaled(Rational(box_eig)));
                CHECK(apply_R(h) == h.scaled(Rational(static_cast<long>(p) - q)));
                CHECK((apply_R(apply_R(h)) + apply_box(h)) == h.scaled(Rational(full_eig)));
            }
        }
    }
}

TEST_CASE("field index enumeration covers 2n^2 slots") {
    for (int n : {1, 2, 3}) {
        const auto idx = tangential_field_indices(n);
        CHECK(static_cast<int>(idx.size()) == 2 * n * n);
    }
}
