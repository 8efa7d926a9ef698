#include "mhb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "mhb/coeffs.hpp"
#include "mhb/mh_function.hpp"
#include "mhb/norms.hpp"
#include "mhb/parallel.hpp"
#include "mhb/radial.hpp"
#include "mhb/specfun.hpp"

namespace mhb::verify {

namespace {

std::string fmt(const char* pattern, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, args...);
    return buf;
}

VerificationReport make_check(std::string name, std::string params, double lhs, double rhs,
                              double metric, double tol) {
    VerificationReport r;
    r.check = std::move(name);
    r.params = std::move(params);
    r.lhs = lhs;
    r.rhs = rhs;
    r.metric = metric;
    r.tolerance = tol;
    r.pass = metric <= tol;
    return r;
}

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

// Random composition of total into `parts` nonnegative entries.
std::vector<int> random_composition(int total, int parts, std::mt19937_64& rng) {
    std::vector<int> out(parts, 0);
    for (int i = 0; i < total; ++i)
        out[static_cast<std::size_t>(rng() % parts)] += 1;
    return out;
}

BigradedPolynomial random_bihomogeneous(int n, int a, int b, std::mt19937_64& rng) {
    BigradedPolynomial P(n);
    const int terms = 3 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        const long re = static_cast<long>(rng() % 7) - 3;
        const long im = static_cast<long>(rng() % 7) - 3;
        if (re == 0 && im == 0) continue;
        P.add_term({random_composition(a, n, rng), random_composition(b, n, rng)},
                   {Rational(re), Rational(im)});
    }
    return P;
}

}  // namespace

BigradedPolynomial random_harmonic_component(int n, int p, int q, std::mt19937_64& rng) {
    if (p == 0 || q == 0) {
        // z_1^p zbar_1^q is harmonic when pq = 0
        std::vector<int> a(n, 0), b(n, 0);
        a[0] = p;
        b[0] = q;
        const long re = 1 + static_cast<long>(rng() % 3);
        const long im = static_cast<long>(rng() % 3) - 1;
        return BigradedPolynomial::monomial(n, a, b, {Rational(re), Rational(im)});
    }
    for (int attempt = 0; attempt < 32; ++attempt) {
        const auto parts = harmonic_decompose(random_bihomogeneous(n, p, q, rng));
        for (const auto& [k, h] : parts)
            if (k == 0 && !h.is_zero()) return h;
    }
    throw ConvergenceError("random_harmonic_component: no nonzero projection found");
}

SuiteResult identity_pe(const IdentityPeConfig& cfg) {
    SuiteResult suite;
    suite.suite = "identity-pe";
    suite.verifies =
        "Bergman coefficients agree across the radial-integral and double-integral "
        "routes; pq=0 coefficients match the Gamma-ratio closed form, including the "
        "continuation range";

    for (int n : cfg.pq_max >= 1 ? cfg.ns : std::vector<int>{}) {
        for (double s : cfg.s_values) {
            const int cells = cfg.pq_max * cfg.pq_max;
            std::vector<double> rel(cells, 0.0);
            parallel_for(cells, [&](std::size_t idx) {
                const int p = 1 + static_cast<int>(idx) / cfg.pq_max;
                const int q = 1 + static_cast<int>(idx) % cfg.pq_max;
                const double v1 = c_pq_quadrature(n, p, q, s, cfg.route_rel_tol).value;
                const double v2 = c_pq_double_integral(n, p, q, s, cfg.route_rel_tol).value;
                rel[idx] = std::abs(v1 - v2) / v1;
            });
            const auto worst = std::max_element(rel.begin(), rel.end());
            const int wi = static_cast<int>(worst - rel.begin());
            suite.checks.push_back(make_check(
                "route agreement quadrature vs double-integral",
                fmt("n=%d s=%g grid=[1,%d]^2 worst=(%d,%d)", n, s, cfg.pq_max,
                    1 + wi / cfg.pq_max, 1 + wi % cfg.pq_max),
                0.0, 0.0, *worst, cfg.tol));
        }
    }

    for (int n : cfg.ns) {
        for (double s : cfg.closed_s) {
            double worst = 0.0;
            int worst_q = 0;
            for (int q = 0; q <= cfg.closed_q_max; ++q) {
                const double vq = c_pq_quadrature(n, 0, q, s, 1e-12).value;
                const double vc = c_0q_closed(n, q, s).value;
                const double r = rel_diff(vq, vc);
                if (r > worst) {
                    worst = r;
                    worst_q = q;
                }
            }
            suite.checks.push_back(make_check(
                "pq=0 closed form vs quadrature",
                fmt("n=%d s=%g q<=%d worst_q=%d", n, s, cfg.closed_q_max, worst_q), 0.0,
                0.0, worst, cfg.closed_tol));
        }
    }

    for (double s : cfg.continuation_s) {
        const int n = 2;
        bool ok = true;
        double min_v = std::numeric_limits<double>::infinity();
        for (int q = 0; q <= cfg.closed_q_max; ++q) {
            const double v = c_0q_closed(n, q, s).value;
            ok = ok && std::isfinite(v) && v > 0.0;
            min_v = std::min(min_v, v);
        }
        suite.checks.push_back(make_check(
            "continuation-range closed form finite and positive",
            fmt("n=%d s=%g q<=%d", n, s, cfg.closed_q_max), min_v, 0.0, ok ? 0.0 : 1.0,
            0.5));
    }
    return suite;
}

SuiteResult asymptotics(const AsymptoticsConfig& cfg) {
    SuiteResult suite;
    suite.suite = "asymptotics";
    suite.verifies =
        "(p+1)^{s+1}(q+1)^{s+1} c_pq(s) stays within grid-stable two-sided bounds "
        "(max/min ratio changes little under window refinement)";

    const int g = cfg.grid_max;
    for (double s : cfg.s_values) {
        std::vector<double> grid((g + 1) * (g + 1), 0.0);
        // symmetric in (p,q): compute the upper triangle and mirror
        std::vector<std::pair<int, int>> cells;
        for (int p = 0; p <= g; ++p)
            for (int q = p; q <= g; ++q) cells.emplace_back(p, q);
        parallel_for(cells.size(), [&](std::size_t i) {
            const auto [p, q] = cells[i];
            grid[p * (g + 1) + q] = normalized_c(cfg.n, p, q, s);
        });
        for (int p = 0; p <= g; ++p)
            for (int q = 0; q < p; ++q) grid[p * (g + 1) + q] = grid[q * (g + 1) + p];

        auto window_ratio = [&](int lo, int hi) {
            double mn = std::numeric_limits<double>::infinity(), mx = 0.0;
            for (int p = lo; p <= hi; ++p) {
                for (int q = lo; q <= hi; ++q) {
                    const double v = grid[p * (g + 1) + q];
                    mn = std::min(mn, v);
                    mx = std::max(mx, v);
                }
            }
            return mx / mn;
        };
        bool positive = true;
        for (double v : grid) positive = positive && v > 0.0 && std::isfinite(v);
        const double r1 = window_ratio(g / 4, g / 2);
        const double r2 = window_ratio(g / 2, g);
        const double change = std::abs(r2 - r1) / r1;
        suite.checks.push_back(make_check(
            "normalized coefficient window stability",
            fmt("n=%d s=%g windows=[%d,%d]^2,[%d,%d]^2 ratios=%.6g,%.6g%s", cfg.n, s,
                g / 4, g / 2, g / 2, g, r1, r2, positive ? "" : " NONPOSITIVE-CELL"),
            r1, r2, positive ? change : 1e9, cfg.window_rel_change));
    }
    return suite;
}

SuiteResult eigenvalues(const EigenvaluesConfig& cfg) {
    SuiteResult suite;
    suite.suite = "eigenvalues";
    suite.verifies =
        "exact operator identities on bigraded harmonics: box, R, and R^2+box "
        "eigenvalues, adjointness of the tangential fields, commutation, Peter-Weyl "
        "orthogonality, and harmonic-decomposition round-trips";

    std::mt19937_64 rng(cfg.seed);
    for (int n : cfg.ns) {
        long basis_fail = 0, random_fail = 0, ortho_fail = 0, adj_fail = 0, comm_fail = 0;

        auto check_eigen = [&](const BigradedPolynomial& h, int p, int q) {
            const long box_eig = 4L * p * q + (2L * n - 2) * (p + q);
            const long sum_eig = static_cast<long>(p + q) * (p + q + 2 * n - 2);
            bool ok = apply_box(h) == h.scaled(Rational(box_eig));
            ok = ok && apply_R(h) == h.scaled(Rational(static_cast<long>(p) - q));
            ok = ok && (apply_R(apply_R(h)) + apply_box(h)) == h.scaled(Rational(sum_eig));
            return ok;
        };

        for (int p = 0; p <= cfg.pq_max; ++p) {
            for (int q = 0; q <= cfg.pq_max; ++q) {
                std::vector<int> a(n, 0), b(n, 0);
                a[0] = p;
                b[1 % n] = q;
                if (n == 1 && p > 0 && q > 0) continue;
                const auto h = BigradedPolynomial::monomial(n, a, b);
                if (!check_eigen(h, p, q)) ++basis_fail;
            }
        }

        for (int trial = 0; trial < cfg.random_polys; ++trial) {
            const int a = 1 + static_cast<int>(rng() % cfg.pq_max);
            const int b = 1 + static_cast<int>(rng() % cfg.pq_max);
            const BigradedPolynomial P = random_bihomogeneous(n, a, b, rng);
            if (P.is_zero()) continue;
            const auto parts = harmonic_decompose(P);
            BigradedPolynomial rebuilt(n);
            for (const auto& [k, h] : parts) {
                if (!is_harmonic(h)) ++random_fail;
                if (!check_eigen(h, a - k, b - k)) ++random_fail;
                rebuilt += BigradedPolynomial::radius_power(n, k) * h;
            }
            if (!(rebuilt == P)) ++random_fail;
            // Peter-Weyl orthogonality across distinct bidegrees
            for (std::size_t i = 0; i < parts.size(); ++i)
                for (std::size_t j = i + 1; j < parts.size(); ++j)
                    if (!sphere_inner_product(parts[i].second, parts[j].second).is_zero())
                        ++ortho_fail;
            // adjointness <L u, v> = -<u, Lbar v> and commutation on P
            const BigradedPolynomial Q = random_bihomogeneous(n, a, b, rng);
            for (int j = 1; j <= std::min(n, 2); ++j) {
                for (int k = 1; k <= n; ++k) {
                    if (j == k) continue;
                    const auto lhs = sphere_inner_product(apply_L(P, j, k, false), Q);
                    const auto rhs = sphere_inner_product(P, apply_L(Q, j, k, true));
                    if (!((lhs + rhs).is_zero())) ++adj_fail;
                    if (!(apply_N(apply_L(P, j, k, false)) ==
                          apply_L(apply_N(P), j, k, false)))
                        ++comm_fail;
                }
            }
            if (!(apply_box(apply_R(P)) == apply_R(apply_box(P)))) ++comm_fail;
        }

        suite.checks.push_back(make_check("eigenvalue table on monomial basis (exact)",
                                          fmt("n=%d p,q<=%d", n, cfg.pq_max), 0.0, 0.0,
                                          static_cast<double>(basis_fail), 0.0));
        suite.checks.push_back(make_check("decomposition round-trip and component "
                                          "eigenvalues (exact)",
                                          fmt("n=%d trials=%d", n, cfg.random_polys), 0.0,
                                          0.0, static_cast<double>(random_fail), 0.0));
        suite.checks.push_back(make_check("Peter-Weyl orthogonality (exact)",
                                          fmt("n=%d", n), 0.0, 0.0,
                                          static_cast<double>(ortho_fail), 0.0));
        suite.checks.push_back(make_check("tangential adjointness (exact)", fmt("n=%d", n),
                                          0.0, 0.0, static_cast<double>(adj_fail), 0.0));
        suite.checks.push_back(make_check("operator commutation (exact)", fmt("n=%d", n),
                                          0.0, 0.0, static_cast<double>(comm_fail), 0.0));
    }
    return suite;
}

SuiteResult radial_ode(const RadialOdeConfig& cfg) {
    SuiteResult suite;
    suite.suite = "radial-ode";
    suite.verifies =
        "r^{p+q} S_pq(r^2) solves the tangential-eigenvalue reduction of the "
        "invariant Laplacian: (1-r^2)u'' + ((2n-1)/r - r)u' + (-(p+q)(p+q+2n-2)/r^2 "
        "+ (p-q)^2)u = 0";

    for (int n : cfg.ns) {
        std::vector<std::pair<int, int>> pqs;
        for (int p = 0; p <= cfg.pq_max; ++p)
            for (int q = p; q <= cfg.pq_max; ++q) pqs.emplace_back(p, q);
        std::vector<double> worst(pqs.size(), 0.0);
        parallel_for(pqs.size(), [&](std::size_t i) {
            const auto [p, q] = pqs[i];
            const RadialProfile prof{static_cast<double>(n), p, q};
            double w = 0.0;
            for (int k = 1; k <= cfg.num_points; ++k) {
                const double r = static_cast<double>(k) / (cfg.num_points + 1);
                w = std::max(w, radial_ode_residual(prof, r));
            }
            worst[i] = w;
        });
        const double w = *std::max_element(worst.begin(), worst.end());
        suite.checks.push_back(make_check(
            "radial ODE residual",
            fmt("n=%d p,q<=%d points=%d", n, cfg.pq_max, cfg.num_points), 0.0, 0.0, w,
            cfg.tol));
    }
    return suite;
}

namespace {

MhFunction canonical_single(int n, int p, int q) {
    std::vector<int> a(n, 0), b(n, 0);
    if (p == 0 && q == 0) {
        // constant 1
    } else if (p == 0) {
        b[0] = q;
    } else if (q == 0) {
        a[0] = p;
    } else {
        a[0] = p;
        b[1 % n] = q;
    }
    return MhFunction::create(n, {{p, q, BigradedPolynomial::monomial(n, a, b)}});
}

struct FourNorms {
    double a, b, c, d;
};

FourNorms four_norms(const MhFunction& f, double s, int m, double t) {
    return {norm_bergman(f, s), norm_tangential(f, s, m), norm_box_smoothed(f, s, t),
            norm_hardy_smoothed(f, s)};
}

}  // namespace

SuiteResult norm_equivalence(const NormEquivalenceConfig& cfg) {
    SuiteResult suite;
    suite.suite = "norm-equivalence";
    suite.verifies =
        "the four equivalent norms (weighted Bergman, iterated tangential, "
        "box-smoothed, smoothed Hardy): spectral vs fully symbolic tangential "
        "evaluation, and bounded norm ratios on random finite sums against the "
        "single-component envelope";

    // Spectral vs symbolic, n = 2, s = 0.
    {
        const int n = 2;
        const double s = 0.0;
        std::vector<std::pair<std::string, MhFunction>> funcs;
        funcs.emplace_back("single(1,0)", canonical_single(n, 1, 0));
        funcs.emplace_back("single(1,1)", canonical_single(n, 1, 1));
        funcs.emplace_back("single(2,1)", canonical_single(n, 2, 1));
        funcs.emplace_back("single(2,2)", canonical_single(n, 2, 2));
        {
            std::vector<MhComponent> comps;
            comps.push_back({0, 0, BigradedPolynomial::monomial(
                                       n, {0, 0}, {0, 0}, CRational{Rational(2), Rational(1)})});
            comps.push_back({1, 1, BigradedPolynomial::monomial(n, {1, 0}, {0, 1})});
            comps.push_back({2, 1, BigradedPolynomial::monomial(n, {2, 0}, {0, 1})});
            comps.push_back({2, 2, BigradedPolynomial::monomial(n, {2, 0}, {0, 2})});
            funcs.emplace_back("mixed", MhFunction::create(n, std::move(comps)));
        }
        for (int m = 1; m <= 2; ++m) {
            double worst = 0.0;
            std::string worst_f;
            for (const auto& [name, f] : funcs) {
                const double spec = norm_tangential(f, s, m, TangentialMode::spectral);
                const double symb =
                    norm_tangential(f, s, m, TangentialMode::symbolic, cfg.truncation_K);
                const double r = rel_diff(spec, symb);
                if (r > worst) {
                    worst = r;
                    worst_f = name;
                }
            }
            suite.checks.push_back(make_check(
                "tangential norm spectral vs symbolic",
                fmt("n=%d s=%g m=%d K=%d worst=%s", n, s, m, cfg.truncation_K,
                    worst_f.c_str()),
                0.0, 0.0, worst, cfg.spectral_symbolic_tol));
        }
    }

    // Envelope of pairwise ratios over single components, then random sums.
    std::mt19937_64 rng(cfg.seed);
    const int m = 1;
    const double t = 1.0;
    int combo_idx = -1;
    for (int n : cfg.ns) {
        for (double s : cfg.s_values) {
            ++combo_idx;
            double env_lo[6], env_hi[6];
            std::fill(std::begin(env_lo), std::end(env_lo),
                      std::numeric_limits<double>::infinity());
            std::fill(std::begin(env_hi), std::end(env_hi), 0.0);
            auto ratios_of = [](const FourNorms& v, double out[6]) {
                out[0] = v.a / v.b;
                out[1] = v.a / v.c;
                out[2] = v.a / v.d;
                out[3] = v.b / v.c;
                out[4] = v.b / v.d;
                out[5] = v.c / v.d;
            };
            for (int p = 0; p <= cfg.comp_max; ++p) {
                for (int q = 0; q <= cfg.comp_max; ++q) {
                    const FourNorms v = four_norms(canonical_single(n, p, q), s, m, t);
                    double r[6];
                    ratios_of(v, r);
                    for (int i = 0; i < 6; ++i) {
                        env_lo[i] = std::min(env_lo[i], r[i]);
                        env_hi[i] = std::max(env_hi[i], r[i]);
                    }
                }
            }
            // distribute the function budget across the (n, s) combinations
            const int combos = static_cast<int>(cfg.ns.size() * cfg.s_values.size());
            const int count = cfg.random_functions / combos +
                              (combo_idx < cfg.random_functions % combos ? 1 : 0);
            double worst_excess = 0.0;
            for (int trial = 0; trial < count; ++trial) {
                std::vector<MhComponent> comps;
                for (int p = 0; p <= cfg.comp_max; ++p) {
                    for (int q = 0; q <= cfg.comp_max; ++q) {
                        if (rng() % 100 < 12) {
                            comps.push_back({p, q, random_harmonic_component(n, p, q, rng)});
                        }
                    }
                }
                if (comps.empty())
                    comps.push_back({1, 1, random_harmonic_component(n, 1, 1, rng)});
                const MhFunction f = MhFunction::create(n, std::move(comps));
                const FourNorms v = four_norms(f, s, m, t);
                double r[6];
                ratios_of(v, r);
                for (int i = 0; i < 6; ++i) {
                    const double excess = std::max(r[i] / (env_hi[i] * cfg.envelope_slack),
                                                   env_lo[i] / cfg.envelope_slack / r[i]);
                    worst_excess = std::max(worst_excess, excess);
                }
            }
            suite.checks.push_back(make_check(
                "random sums inside single-component ratio envelope",
                fmt("n=%d s=%g m=%d t=%g functions=%d comp<=%d", n, s, m, t, count,
                    cfg.comp_max),
                0.0, 0.0, std::max(0.0, worst_excess - 1.0), 0.0));
        }
    }
    return suite;
}

SuiteResult mean_value(const MeanValueConfig& cfg) {
    SuiteResult suite;
    suite.suite = "mean-value";
    suite.verifies =
        "the invariant mean-value property: f(z) equals the average of f over "
        "Moebius spheres phi_z(r S^{2n-1}), checked by seeded Monte Carlo";

    struct Triple {
        MhFunction f;
        std::vector<std::complex<double>> z;
        double r;
    };
    std::vector<Triple> triples;
    std::mt19937_64 rng(cfg.seed);
    auto uniform = [&rng]() { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; };

    std::vector<MhFunction> pool;
    {
        const int n = 2;
        pool.push_back(canonical_single(n, 1, 1));
        std::vector<MhComponent> comps;
        comps.push_back({0, 0, BigradedPolynomial::monomial(
                                   n, {0, 0}, {0, 0}, CRational{Rational(1), Rational(-1)})});
        comps.push_back({1, 0, BigradedPolynomial::monomial(n, {1, 0}, {0, 0})});
        // z1 zbar1 - z2 zbar2 is harmonic for n = 2
        BigradedPolynomial h11(n);
        h11.add_term({{1, 0}, {1, 0}}, CRational(1));
        h11.add_term({{0, 1}, {0, 1}}, CRational(-1));
        comps.push_back({1, 1, h11});
        comps.push_back({2, 1, BigradedPolynomial::monomial(n, {2, 0}, {0, 1})});
        pool.push_back(MhFunction::create(n, std::move(comps)));
    }
    {
        const int n = 3;
        std::vector<MhComponent> comps;
        comps.push_back({1, 1, BigradedPolynomial::monomial(n, {1, 0, 0}, {0, 1, 0})});
        comps.push_back({2, 0, BigradedPolynomial::monomial(n, {1, 1, 0}, {0, 0, 0})});
        pool.push_back(MhFunction::create(n, std::move(comps)));
    }

    for (int i = 0; i < cfg.triples; ++i) {
        const MhFunction& f = pool[i % pool.size()];
        const int n = f.dim();
        std::vector<std::complex<double>> z(n);
        for (int d = 0; d < n; ++d)
            z[d] = {0.5 * (uniform() - 0.5), 0.5 * (uniform() - 0.5)};
        const double r = 0.3 + 0.4 * uniform();
        triples.push_back({f, std::move(z), r});
    }

    std::vector<MeanValueCheck> results(triples.size());
    parallel_for(triples.size(), [&](std::size_t i) {
        results[i] = mean_value_residual(triples[i].f, triples[i].z, triples[i].r,
                                         cfg.samples, cfg.seed + 1000 + i);
    });
    double worst_sigma = 0.0;
    int worst_idx = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const double sigmas = results[i].residual / std::max(results[i].std_error, 1e-14);
        if (sigmas > worst_sigma) {
            worst_sigma = sigmas;
            worst_idx = static_cast<int>(i);
        }
    }
    suite.checks.push_back(make_check(
        "Monte Carlo mean-value residual within sigma bound",
        fmt("triples=%d samples=%ld worst_triple=%d residual=%.3g stderr=%.3g",
            cfg.triples, cfg.samples, worst_idx, results[worst_idx].residual,
            results[worst_idx].std_error),
        results[worst_idx].residual, results[worst_idx].std_error, worst_sigma,
        cfg.sigma_bound));
    return suite;
}

SuiteResult sobolev(const SobolevConfig& cfg) {
    SuiteResult suite;
    suite.suite = "sobolev";
    suite.verifies =
        "Sobolev-weight coefficients c_{pq,k}(s): closed forms at pq=0, the "
        "normalization link to c_pq, growth-rate window stability, the integral "
        "sandwich with the proof constants, I-ratio bounds, and integer-order "
        "Sobolev/Besov weight stability";

    const int n = cfg.n;
    const double s = cfg.s;

    // closed forms at pq = 0: c_{p0,k} = p^{2k} Gamma(n+p)/(s+1)_{n+p}
    {
        double worst = 0.0;
        for (int p = 1; p <= 12; ++p) {
            for (int k = 0; k <= n + 1; ++k) {
                const double v = c_pq_k(n, p, 0, k, s).value;
                const double closed =
                    std::pow(p, 2.0 * k) *
                    std::exp(std::lgamma(n + static_cast<double>(p)) -
                             (std::lgamma(s + 1.0 + n + p) - std::lgamma(s + 1.0)));
                worst = std::max(worst, rel_diff(v, closed));
            }
        }
        bool zero_ok = true;
        for (int k = 1; k <= n + 1; ++k)
            zero_ok = zero_ok && c_pq_k(n, 0, 0, k, s).value == 0.0;
        suite.checks.push_back(make_check("pluriharmonic closed form for c_{pq,k}",
                                          fmt("n=%d s=%g p<=12 k<=%d%s", n, s, n + 1,
                                              zero_ok ? "" : " c00k!=0"),
                                          0.0, 0.0, zero_ok ? worst : 1e9,
                                          cfg.closed_form_tol));
    }

    // normalization link (s+1)_n/Gamma(n) c_{pq,0}(s) = c_pq(s)
    {
        const double pref = std::exp(std::lgamma(s + 1.0 + n) - std::lgamma(s + 1.0) -
                                     std::lgamma(static_cast<double>(n)));
        double worst = 0.0;
        for (int p : {1, 2, 3, 6, 12, 24}) {
            for (int q : {1, 4, 16, 24}) {
                const double lhs = pref * c_pq_k(n, p, q, 0, s, 1e-9).value;
                const double rhs = c_pq({n, p, q, s}).value;
                worst = std::max(worst, rel_diff(lhs, rhs));
            }
        }
        suite.checks.push_back(make_check("normalization link c_{pq,0} -> c_pq",
                                          fmt("n=%d s=%g", n, s), 0.0, 0.0, worst,
                                          cfg.link_tol));
    }

    // window stability of c_{pq,k}(s) / [(p+1)(q+1)]^{2k-s-1}, k = 0..n
    {
        const int g = cfg.grid_max;
        std::map<std::pair<int, int>, std::array<double, 8>> cache;
        std::vector<std::pair<int, int>> cells;
        for (int p = g / 8; p <= g; ++p)
            for (int q = p; q <= g; ++q) cells.emplace_back(p, q);
        std::vector<std::array<double, 8>> vals(cells.size());
        parallel_for(cells.size(), [&](std::size_t i) {
            const auto [p, q] = cells[i];
            for (int k = 0; k <= n; ++k)
                vals[i][k] = c_pq_k(n, p, q, k, s, 1e-8).value;
        });
        for (std::size_t i = 0; i < cells.size(); ++i) cache[cells[i]] = vals[i];
        auto value_at = [&](int p, int q, int k) {
            const auto it = cache.find(p <= q ? std::make_pair(p, q) : std::make_pair(q, p));
            return it->second[k] /
                   std::pow((p + 1.0) * (q + 1.0), 2.0 * k - s - 1.0);
        };
        for (int k = 0; k <= n; ++k) {
            auto window_ratio = [&](int lo, int hi) {
                double mn = std::numeric_limits<double>::infinity(), mx = 0.0;
                for (int p = lo; p <= hi; ++p) {
                    for (int q = lo; q <= hi; ++q) {
                        const double v = value_at(p, q, k);
                        mn = std::min(mn, v);
                        mx = std::max(mx, v);
                    }
                }
                return mx / mn;
            };
            const double r1 = window_ratio(g / 4, g / 2);
            const double r2 = window_ratio(g / 2, g);
            suite.checks.push_back(make_check(
                "c_{pq,k} growth-rate window stability",
                fmt("n=%d s=%g k=%d ratios=%.6g,%.6g", n, s, k, r1, r2), r1, r2,
                std::abs(r2 - r1) / r1, cfg.window_rel_change));
        }

        // integer-order stability: Sobolev weight vs Besov weight
        for (int t = 0; t <= n; ++t) {
            auto sob_weight = [&](int p, int q) {
                const double eig = static_cast<double>(p + q) * (p + q + 2.0 * n - 2.0);
                double total = 0.0;
                for (int l = 0; l <= t; ++l) {
                    for (int k = 0; k <= l; ++k) {
                        double e = 1.0;
                        for (int i = 0; i < l - k; ++i) e *= eig;
                        const auto it = cache.find(p <= q ? std::make_pair(p, q)
                                                          : std::make_pair(q, p));
                        total += e * it->second[k];
                    }
                }
                return total / std::pow((p + 1.0) * (q + 1.0), 2.0 * t - s - 1.0);
            };
            auto window_ratio = [&](int lo, int hi) {
                double mn = std::numeric_limits<double>::infinity(), mx = 0.0;
                for (int p = lo; p <= hi; ++p) {
                    for (int q = lo; q <= hi; ++q) {
                        const double v = sob_weight(p, q);
                        mn = std::min(mn, v);
                        mx = std::max(mx, v);
                    }
                }
                return mx / mn;
            };
            const double r1 = window_ratio(g / 4, g / 2);
            const double r2 = window_ratio(g / 2, g);
            suite.checks.push_back(make_check(
                "integer-order Sobolev/Besov weight stability",
                fmt("n=%d s=%g t=%d ratios=%.6g,%.6g", n, s, t, r1, r2), r1, r2,
                std::abs(r2 - r1) / r1, cfg.window_rel_change));
        }
    }

    // integral sandwich with the proof constants
    {
        const std::vector<std::pair<int, int>> samples{{1, 1}, {2, 1}, {3, 4}, {8, 8},
                                                       {16, 13}, {24, 24}, {40, 24}};
        double worst = 0.0;
        for (int k = 0; k <= n; ++k) {
            const double lower = 1.0 / std::pow(pochhammer(n - k + 1.0, k), 2.0);
            const double upper = std::pow(4.0, k);
            for (const auto& [p, q] : samples) {
                const double gg =
                    std::exp(std::lgamma(static_cast<double>(n)) +
                             std::lgamma(static_cast<double>(n + p + q)) -
                             std::lgamma(static_cast<double>(n + p)) -
                             std::lgamma(static_cast<double>(n + q)));
                const double shift = pochhammer(static_cast<double>(p + q + n - k), k);
                const double ratio = c_pq_k(n, p, q, k, s, 1e-8).value * gg * gg /
                                     (shift * shift * i_pqs(n - k, k, p, q, s));
                const double excess = std::max(lower * (1.0 - cfg.sandwich_slack) / ratio,
                                               ratio / (upper * (1.0 + cfg.sandwich_slack)));
                worst = std::max(worst, excess);
            }
        }
        suite.checks.push_back(make_check("derivative sandwich with proof constants",
                                          fmt("n=%d s=%g k<=%d", n, s, n), 0.0, 0.0,
                                          std::max(0.0, worst - 1.0), 0.0));
    }

    // I-ratio bounds: I(n,k)/I(n,0) in [k!/(s+2)_k, 1]
    {
        const std::vector<std::pair<int, int>> samples{{1, 0}, {1, 1}, {3, 2}, {8, 8},
                                                       {20, 12}, {32, 32}, {40, 24}};
        double worst = 0.0;
        for (int k = 1; k <= 4; ++k) {
            const double lower = std::exp(std::lgamma(k + 1.0)) / pochhammer(s + 2.0, k);
            for (const auto& [p, q] : samples) {
                const double ratio = i_pqs(n, k, p, q, s) / i_pqs(n, 0, p, q, s);
                const double excess =
                    std::max(lower * (1.0 - cfg.sandwich_slack) / ratio,
                             ratio / (1.0 + cfg.sandwich_slack));
                worst = std::max(worst, excess);
            }
        }
        suite.checks.push_back(make_check("moment-shift ratio bounds",
                                          fmt("n=%d s=%g k<=4", n, s), 0.0, 0.0,
                                          std::max(0.0, worst - 1.0), 0.0));
    }
    return suite;
}

SuiteResult blowup(const BlowupConfig& cfg) {
    SuiteResult suite;
    suite.suite = "blowup";
    suite.verifies =
        "the (n+1)-fold normal derivative of solid-harmonic profiles blows up like "
        "2^n Gamma(p+q+n)/(Gamma(p)Gamma(q)) / (1-r), and c_{pq,n+1} is flagged "
        "divergent for pq > 0";

    const int n = cfg.n;
    for (const auto& [p, q] : cfg.pqs) {
        const double target =
            std::pow(2.0, n) *
            std::exp(std::lgamma(static_cast<double>(p + q + n)) -
                     std::lgamma(static_cast<double>(p)) - std::lgamma(static_cast<double>(q)));
        const std::vector<double> grid{0.9, 0.99, 0.999, cfg.fit_r};
        const auto prof = blowup_profile(n, p, q, grid);
        const double fitted = prof.back().second * (1.0 - prof.back().first);
        suite.checks.push_back(make_check(
            "blow-up constant of the (n+1)-fold normal derivative",
            fmt("n=%d p=%d q=%d r=%.6g fitted=%.8g target=%.8g", n, p, q, cfg.fit_r,
                fitted, target),
            fitted, target, rel_diff(fitted, target), cfg.fit_rel_tol));

        bool monotone = true;
        double prev_gap = std::numeric_limits<double>::infinity();
        for (const auto& [r, v] : prof) {
            const double gap = std::abs(v * (1.0 - r) - target);
            monotone = monotone && gap <= prev_gap * (1.0 + 1e-9);
            prev_gap = gap;
        }
        suite.checks.push_back(make_check("blow-up product approaches its limit",
                                          fmt("n=%d p=%d q=%d", n, p, q), 0.0, 0.0,
                                          monotone ? 0.0 : 1.0, 0.5));

        const CpqkResult div = c_pq_k(n, p, q, n + 1, 0.0);
        suite.checks.push_back(make_check("divergence flag for c_{pq,n+1}",
                                          fmt("n=%d p=%d q=%d k=%d s=0", n, p, q, n + 1),
                                          div.value, 0.0, div.divergent ? 0.0 : 1.0, 0.5));
    }
    return suite;
}

std::vector<std::string> suite_names() {
    return {"identity-pe", "asymptotics", "eigenvalues", "radial-ode",
            "norm-equivalence", "mean-value", "sobolev", "blowup"};
}

SuiteResult run_suite(const std::string& name, int n_override, std::uint64_t seed_override) {
    if (name == "identity-pe") {
        IdentityPeConfig cfg;
        if (n_override > 0) cfg.ns = {n_override};
        return identity_pe(cfg);
    }
    if (name == "asymptotics") {
        AsymptoticsConfig cfg;
        if (n_override > 0) cfg.n = n_override;
        return asymptotics(cfg);
    }
    if (name == "eigenvalues") {
        EigenvaluesConfig cfg;
        if (n_override > 0) cfg.ns = {n_override};
        if (seed_override) cfg.seed = seed_override;
        return eigenvalues(cfg);
    }
    if (name == "radial-ode") {
        RadialOdeConfig cfg;
        if (n_override > 0) cfg.ns = {n_override};
        return radial_ode(cfg);
    }
    if (name == "norm-equivalence") {
        NormEquivalenceConfig cfg;
        if (n_override > 0) cfg.ns = {n_override};
        if (seed_override) cfg.seed = seed_override;
        return norm_equivalence(cfg);
    }
    if (name == "mean-value") {
        MeanValueConfig cfg;
        if (seed_override) cfg.seed = seed_override;
        return mean_value(cfg);
    }
    if (name == "sobolev") {
        SobolevConfig cfg;
        if (n_override > 0) cfg.n = n_override;
        return sobolev(cfg);
    }
    if (name == "blowup") {
        BlowupConfig cfg;
        if (n_override > 0) cfg.n = n_override;
        return blowup(cfg);
    }
    throw ValidationError("unknown verification suite: " + name);
}

}  // namespace mhb::verify
