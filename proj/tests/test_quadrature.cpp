#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "mhb/quadrature.hpp"
#include "mhb/radial.hpp"
#include "testutil.hpp"

using namespace mhb;
using testutil::rel_err;

namespace {

double beta_fn(double a, double b) { return std::exp(log_beta(a, b)); }

// adaptive Simpson on dyadically subdivided intervals; independent of the
// Gauss-Jacobi machinery
double simpson_oracle(const std::function<double(double)>& f, double a, double b,
                      int depth = 0) {
    const double m = 0.5 * (a + b);
    auto simpson = [&](double lo, double hi) {
        return (hi - lo) / 6.0 * (f(lo) + 4.0 * f(0.5 * (lo + hi)) + f(hi));
    };
    const double whole = simpson(a, b);
    const double split = simpson(a, m) + simpson(m, b);
    if (depth > 24 || std::abs(whole - split) < 1e-13 * (std::abs(split) + 1e-3))
        return split;
    return simpson_oracle(f, a, m, depth + 1) + simpson_oracle(f, m, b, depth + 1);
}

}  // namespace

TEST_CASE("single-node Legendre rule is the midpoint") {
    const QuadratureRule r = build_rule(1, 0.0, 0.0);
    REQUIRE(r.nodes.size() == 1);
    CHECK(r.nodes[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(r.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("rule mass equals the Beta integral") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 24; ++trial) {
        const double alpha = -0.9 + 3.9 * (rng() % 10000) / 10000.0;
        const double beta = -0.9 + 3.9 * (rng() % 10000) / 10000.0;
        const int order = 16 << (trial % 3);
        const QuadratureRule r = build_rule(order, alpha, beta);
        double mass = 0.0;
        for (double w : r.weights) {
            CHECK(w > 0.0);
            mass += w;
        }
        CHECK(rel_err(mass, beta_fn(beta + 1.0, alpha + 1.0)) < 1e-12);
        for (double t : r.nodes) {
            CHECK(t > 0.0);
            CHECK(t < 1.0);
        }
    }
    // total mass with the measure exponents (s, n-1)
    const QuadratureRule r = build_rule(64, 0.7, 2.0);
    double mass = 0.0;
    for (double w : r.weights) mass += w;
    CHECK(rel_err(mass, beta_fn(3.0, 1.7)) < 1e-12);
}

TEST_CASE("polynomial exactness up to degree 2*order - 1") {
    // singular weight case pinned by the module contract
    {
        const QuadratureRule r = build_rule(16, -0.5, 0.0);
        for (int k = 0; k <= 31; ++k) {
            double got = 0.0;
            for (int i = 0; i < r.order; ++i) got += r.weights[i] * std::pow(r.nodes[i], k);
            CHECK(rel_err(got, beta_fn(k + 1.0, 0.5)) < 1e-12);
        }
    }
    // random weights and random polynomials
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 12; ++trial) {
        const double alpha = -0.8 + 3.0 * (rng() % 10000) / 10000.0;
        const double beta = -0.8 + 3.0 * (rng() % 10000) / 10000.0;
        const int order = 8 + static_cast<int>(rng() % 40);
        const QuadratureRule r = build_rule(order, alpha, beta);
        std::vector<double> coef(2 * order);
        for (auto& c : coef) c = ((rng() % 2000) - 1000.0) / 250.0;
        double got = 0.0;
        for (int i = 0; i < r.order; ++i) {
            double poly = 0.0;
            for (int k = static_cast<int>(coef.size()) - 1; k >= 0; --k)
                poly = poly * r.nodes[i] + coef[k];
            got += r.weights[i] * poly;
        }
        double want = 0.0;
        for (std::size_t k = 0; k < coef.size(); ++k)
            want += coef[k] * beta_fn(beta + k + 1.0, alpha + 1.0);
        CHECK(rel_err(got, want) < 1e-11);
    }
}

TEST_CASE("adaptive integrate basics") {
    auto one = [](double) { return 1.0; };
    CHECK(rel_err(integrate(one, 0.0, 0.0).value, 1.0) < 1e-14);
    CHECK(rel_err(integrate(one, 0.5, 2.0).value, beta_fn(3.0, 1.5)) < 1e-13);

    // int t^3 S_11(t)^2 dt equals Gamma(n)/(s+1)_n times c_11(0) for n = 2
    const RadialProfile prof{2.0, 1, 1};
    auto f = [&](double t) {
        const double v = s_pq(prof, t);
        return v * v;
    };
    const double got = integrate(f, 0.0, 3.0, 1e-11).value;
    auto full = [&](double t) { return t * t * t * f(t); };
    const double oracle = simpson_oracle(full, 0.0, 1.0);
    CHECK(rel_err(got, oracle) < 1e-9);
}

TEST_CASE("refinement monotonicity of the error estimate") {
    auto f = [](double t) { return std::cos(3.0 * t) + t * t; };
    for (double tol : {1e-6, 1e-8, 1e-10}) {
        const double e1 = integrate(f, 0.3, 1.2, tol).err_est;
        const double e2 = integrate(f, 0.3, 1.2, tol / 2).err_est;
        CHECK(e2 <= 2.0 * e1 + 1e-16);
    }
}

TEST_CASE("integrate rejects divergent weights and hopeless integrands") {
    auto one = [](double) { return 1.0; };
    CHECK_THROWS_AS(build_rule(16, -1.0, 0.0), DomainError);
    CHECK_THROWS_AS(integrate(one, 0.0, -1.5), DomainError);
    auto step = [](double t) { return t < 0.531 ? 0.0 : 1.0; };
    CHECK_THROWS_AS(integrate(step, 0.0, 0.0, 1e-12), ConvergenceError);
}

TEST_CASE("2d tensor rule") {
    auto one2 = [](double, double) { return 1.0; };
    CHECK(rel_err(integrate_2d(one2, {0.0, 0.0}, {0.0, 0.0}).value, 1.0) < 1e-13);

    // product of Beta masses with the double-integral weights
    const int n = 2, p = 3, q = 2;
    const double s = 0.5;
    const double want = beta_fn(p, n + s + 1.0) * beta_fn(q, n + s + 1.0);
    CHECK(rel_err(integrate_2d(one2, {n + s, p - 1.0}, {n + s, q - 1.0}).value, want) <
          1e-12);

    // separable integrand equals the product of 1d integrals
    auto g = [](double x) { return std::exp(0.3 * x) + x; };
    auto h = [](double y) { return 1.0 / (1.0 + y); };
    auto gh = [&](double x, double y) { return g(x) * h(y); };
    const double lhs = integrate_2d(gh, {0.5, 1.0}, {0.25, 0.5}).value;
    const double rhs =
        integrate(g, 0.5, 1.0).value * integrate(h, 0.25, 0.5).value;
    CHECK(rel_err(lhs, rhs) < 1e-12);
}
