#include <doctest.h>

#include <cmath>
#include <random>

#include "mhb/coeffs.hpp"
#include "mhb/quadrature.hpp"
#include "mhb/radial.hpp"
#include "mhb/specfun.hpp"
#include "testutil.hpp"

using namespace mhb;
using testutil::rel_err;

TEST_CASE("s_pq endpoint and symmetry properties") {
    CHECK(s_pq({3.0, 4, 0}, 0.37) == 1.0);
    CHECK(s_pq({2.0, 5, 3}, 1.0) == 1.0);
    CHECK(rel_err(s_pq({2.0, 1, 1}, 0.0), pochhammer(2, 1) * pochhammer(2, 1) /
                                              pochhammer(2, 2)) < 1e-14);
    std::mt19937_64 rng(31);
    for (int i = 0; i < 30; ++i) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const int p = static_cast<int>(rng() % 9);
        const int q = static_cast<int>(rng() % 9);
        const double t = (rng() % 10000) / 10000.0 * 0.999;
        const double a = s_pq({static_cast<double>(n), p, q}, t);
        const double b = s_pq({static_cast<double>(n), q, p}, t);
        CHECK(rel_err(a, b) < 1e-13);
        CHECK(a > 0.0);
        CHECK(a <= 1.0 + 1e-14);
    }
}

TEST_CASE("radial factor monotone with limit 1") {
    CHECK(radial_factor({2.0, 3, 2}, 1.0) == 1.0);
    CHECK(radial_factor({3.0, 0, 0}, 0.41) == 1.0);
    CHECK(rel_err(radial_factor({2.0, 1, 1}, 0.5), 0.25 * s_pq({2.0, 1, 1}, 0.25)) <
          1e-14);
    std::mt19937_64 rng(32);
    for (int i = 0; i < 12; ++i) {
        const RadialProfile prof{2.0 + static_cast<double>(rng() % 3),
                                 static_cast<int>(rng() % 6),
                                 static_cast<int>(rng() % 6)};
        double prev = 0.0;
        for (int k = 1; k <= 40; ++k) {
            const double u = radial_factor(prof, k / 40.0);
            CHECK(u >= prev - 1e-14);
            prev = u;
        }
        CHECK(prev == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("radial_k_derivative basics") {
    // k = 0 reproduces t^{(p+q)/2} S_pq
    for (double t : {0.2, 0.6, 0.93}) {
        const RadialProfile prof{2.0, 2, 1};
        CHECK(rel_err(radial_k_derivative(prof, 0, t),
                      std::pow(t, 1.5) * s_pq(prof, t)) < 1e-12);
    }
    // constants are annihilated for k >= 1
    CHECK(radial_k_derivative({2.0, 0, 0}, 1, 0.5) == 0.0);
    CHECK(radial_k_derivative({3.0, 0, 0}, 0, 0.5) == 1.0);
    // pluriharmonic profile: eigenvalue p+q per application
    for (double t : {0.1, 0.5, 0.9}) {
        CHECK(rel_err(radial_k_derivative({2.0, 1, 0}, 1, t), std::sqrt(t)) < 1e-13);
        CHECK(rel_err(radial_k_derivative({2.0, 3, 0}, 2, t), 9.0 * std::pow(t, 1.5)) <
              1e-13);
    }
}

TEST_CASE("radial_k_derivative against a finite-difference oracle") {
    const RadialProfile prof{2.0, 2, 2};
    for (double t : {0.3, 0.55, 0.8}) {
        const double h = 1e-6;
        const double fd = 2.0 * t *
                          (radial_k_derivative(prof, 0, t + h) -
                           radial_k_derivative(prof, 0, t - h)) /
                          (2.0 * h);
        CHECK(rel_err(radial_k_derivative(prof, 1, t), fd) < 1e-7);
    }
}

TEST_CASE("weighted series and derivative expansion agree across the seam") {
    // the t <= 0.9 branch sums the weighted Taylor series; past the seam each
    // 2F1 derivative is evaluated through the connection formulas
    for (int k : {0, 1, 2, 3}) {
        for (double t : {0.89, 0.91, 0.97, 0.999}) {
            const RadialProfile prof{2.0, 2, 3};
            const double got = radial_k_series(prof, k, t);
            // independent long-double weighted sum
            long double base = 1.0L, sum = std::pow(5.0L, k);
            const long double p = 2, q = 3, c = 7;
            for (long j = 0; j < 80000000; ++j) {
                base *= (p + j) * (q + j) * t / ((j + 1) * (c + j));
                long double term = base;
                for (int i = 0; i < k; ++i) term *= (p + q + 2.0L * (j + 1));
                sum += term;
                if (term < 1e-21L * sum) break;
            }
            const double pref = std::exp(std::lgamma(4.0) + std::lgamma(5.0) -
                                         std::lgamma(2.0) - std::lgamma(7.0));
            CHECK(rel_err(got, pref * static_cast<double>(sum)) < 1e-11);
        }
    }
}

TEST_CASE("pointwise sandwich for the k-fold derivative") {
    // lower/upper bounds with the shifted-parameter profile, on the
    // unnormalized derivative
    for (int n : {2, 3}) {
        for (int p = 1; p <= 5; ++p) {
            for (int q = 1; q <= 5; ++q) {
                for (int k = 0; k <= n; ++k) {
                    const double lo_const =
                        pochhammer(static_cast<double>(p + q + n - k), k) /
                        pochhammer(static_cast<double>(n - k + 1), k);
                    const double hi_const =
                        std::pow(2.0, k) * pochhammer(static_cast<double>(p + q + n - k), k);
                    for (double t : {0.15, 0.5, 0.85, 0.97}) {
                        const double mid = radial_k_derivative(
                            {static_cast<double>(n), p, q}, k, t, /*normalized=*/false);
                        const double shifted =
                            std::pow(t, 0.5 * (p + q)) *
                            gauss_2f1({static_cast<double>(p), static_cast<double>(q),
                                       static_cast<double>(p + q + n - k)},
                                      t);
                        CHECK(mid >= lo_const * shifted * (1 - 1e-6));
                        CHECK(mid <= hi_const * shifted * (1 + 1e-6));
                    }
                }
            }
        }
    }
}

TEST_CASE("i_pqs closed form at pq = 0 and route agreement") {
    CHECK(rel_err(i_pqs(2.0, 1, 0, 3, 0.5), std::exp(log_beta(3 + 2 + 1, 1.5))) < 1e-13);
    CHECK(rel_err(i_pqs(3.0, 0, 4, 0, -0.25), std::exp(log_beta(4 + 3, 0.75))) < 1e-13);

    // c_{pq,0}(s) = GG(n+p, n+q; n, n+p+q)^2 I_pqs(n, 0); cross-checked through
    // the independent series-of-Beta oracle
    const int n = 2, p = 1, q = 1;
    const double s = 0.0;
    const double I = i_pqs(static_cast<double>(n), 0, p, q, s);
    double oracle = 0.0;
    {
        // term-by-term integration of the Cauchy square of the 2F1 series
        std::vector<double> b;
        double base = 1.0;
        for (int j = 0; j < 4000; ++j) {
            b.push_back(base);
            base *= (p + j) * (q + j) / ((j + 1.0) * (p + q + n + j));
        }
        for (std::size_t m = 0; m < b.size(); ++m) {
            double c2 = 0.0;
            for (std::size_t i = 0; i <= m; ++i) c2 += b[i] * b[m - i];
            oracle += c2 * std::exp(log_beta(p + q + n + m, s + 1.0));
        }
    }
    CHECK(rel_err(I, oracle) < 1e-7);

    CHECK_THROWS_AS(i_pqs(2.0, 0, 1, 1, -1.0), DomainError);
    CHECK_THROWS_AS(i_pqs(-3.0, 0, 1, 1, 0.0), DomainError);
}

TEST_CASE("zeroth Sobolev coefficient factors through the moment integral") {
    // c_{pq,0}(s) = [Gamma(n+p)Gamma(n+q) / (Gamma(n)Gamma(n+p+q))]^2 I_pqs(n,0)
    for (auto [n, p, q, s] : {std::tuple{2, 1, 1, 0.0}, {2, 3, 2, 0.5}, {3, 2, 4, -0.3}}) {
        const double gg =
            std::exp(std::lgamma(static_cast<double>(n + p)) +
                     std::lgamma(static_cast<double>(n + q)) -
                     std::lgamma(static_cast<double>(n)) -
                     std::lgamma(static_cast<double>(n + p + q)));
        const double lhs = mhb::c_pq_k(n, p, q, 0, s).value;
        const double rhs = gg * gg * i_pqs(n, 0, p, q, s);
        CHECK(rel_err(lhs, rhs) < 1e-9);
    }
}

TEST_CASE("moment-shift ratios stay within the proof bounds") {
    const double s = 0.5;
    for (int k = 1; k <= 4; ++k) {
        const double lower = std::exp(std::lgamma(k + 1.0)) / pochhammer(s + 2.0, k);
        for (auto [p, q] : {std::pair{1, 1}, {4, 2}, {10, 9}, {16, 16}}) {
            const double r = i_pqs(2.0, k, p, q, s) / i_pqs(2.0, 0, p, q, s);
            CHECK(r <= 1.0 + 1e-9);
            CHECK(r >= lower * (1 - 1e-9));
        }
    }
}

TEST_CASE("radial ODE residual is tiny at interior radii") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 24; ++i) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const int p = static_cast<int>(rng() % 11);
        const int q = static_cast<int>(rng() % 11);
        const double r = 0.05 + 0.9 * (rng() % 10000) / 10000.0;
        CHECK(radial_ode_residual({static_cast<double>(n), p, q}, r) < 1e-8);
    }
}
