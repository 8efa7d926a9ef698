#pragma once

// Verification suites: each runs a family of cross-route / cross-representation
// checks and returns one VerificationReport per check.  The acceptance tests
// call these with their pinned grids; the CLI exposes them with the same
// defaults.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "mhb/polynomial.hpp"
#include "mhb/report.hpp"

namespace mhb::verify {

// Coefficient route agreement (radial-integral route vs. double-integral
// closed form), the pq = 0 Gamma-ratio closed form, and continuation-range
// positivity.
struct IdentityPeConfig {
    std::vector<int> ns{2, 3};
    int pq_max = 24;
    std::vector<double> s_values{-0.5, 0.0, 1.0, 2.5};
    double tol = 1e-8;
    int closed_q_max = 64;
    std::vector<double> closed_s{-0.5, 0.0, 2.0};
    double closed_tol = 1e-10;
    std::vector<double> continuation_s{-1.5, -2.0};
    double route_rel_tol = 1e-10;
};
SuiteResult identity_pe(const IdentityPeConfig& cfg = {});

// Normalized-coefficient boundedness: (p+1)^{s+1}(q+1)^{s+1} c_pq(s) has a
// grid-stable max/min ratio under window refinement.
struct AsymptoticsConfig {
    int n = 2;
    std::vector<double> s_values{-2.0, -0.5, 0.0, 1.0};
    int grid_max = 64;             // windows [grid_max/4, grid_max/2], [grid_max/2, grid_max]
    double window_rel_change = 0.25;
};
SuiteResult asymptotics(const AsymptoticsConfig& cfg = {});

// Exact-arithmetic eigenvalue table, adjointness, commutation, Peter-Weyl
// orthogonality, and decomposition round-trips.  Zero tolerance.
struct EigenvaluesConfig {
    std::vector<int> ns{2, 3, 4};
    int pq_max = 6;
    int random_polys = 4;
    std::uint64_t seed = 20250801;
};
SuiteResult eigenvalues(const EigenvaluesConfig& cfg = {});

// Residual of the radial second-order ODE satisfied by r^{p+q} S_pq(r^2).
struct RadialOdeConfig {
    std::vector<int> ns{2, 3};
    int pq_max = 10;
    int num_points = 20;
    double tol = 1e-8;
};
SuiteResult radial_ode(const RadialOdeConfig& cfg = {});

// Spectral vs. symbolic tangential norms, and the four equivalent norms on
// random finite sums against the single-component ratio envelope.
struct NormEquivalenceConfig {
    std::vector<int> ns{2, 3};
    std::vector<double> s_values{-0.5, 0.0, 1.0};
    int comp_max = 8;
    int random_functions = 100;
    std::uint64_t seed = 20250802;
    double spectral_symbolic_tol = 1e-5;
    int truncation_K = 40;
    double envelope_slack = 1.01;
};
SuiteResult norm_equivalence(const NormEquivalenceConfig& cfg = {});

// Invariant mean-value property by seeded Monte Carlo.
struct MeanValueConfig {
    int triples = 20;
    long samples = 1000000;
    std::uint64_t seed = 20250803;
    double sigma_bound = 4.0;
};
SuiteResult mean_value(const MeanValueConfig& cfg = {});

// Sobolev-coefficient identities: closed forms at pq = 0, the normalization
// link to c_pq, growth-rate window stability, the integral sandwich with the
// proof constants, the I-ratio bounds, and integer-order Sobolev/Besov
// equivalence stability.
struct SobolevConfig {
    int n = 2;
    double s = 0.0;
    int grid_max = 64;
    double window_rel_change = 0.25;
    double sandwich_slack = 1e-6;
    double closed_form_tol = 1e-8;
    double link_tol = 1e-9;
};
SuiteResult sobolev(const SobolevConfig& cfg = {});

// The (1-r)^{-1} blow-up of the (n+1)-fold normal derivative and the
// divergence flags of c_{pq,n+1}.
struct BlowupConfig {
    int n = 2;
    std::vector<std::pair<int, int>> pqs{{1, 1}, {1, 2}, {2, 2}};
    double fit_rel_tol = 0.05;
    double fit_r = 1.0 - 1e-4;
};
SuiteResult blowup(const BlowupConfig& cfg = {});

SuiteResult run_suite(const std::string& name, int n_override, std::uint64_t seed_override);
std::vector<std::string> suite_names();

// Random harmonic bihomogeneous polynomial of bidegree (p, q) with small
// integer Gaussian-integer coefficients (harmonic projection of a random
// bihomogeneous polynomial).
BigradedPolynomial random_harmonic_component(int n, int p, int q, std::mt19937_64& rng);

}  // namespace mhb::verify
