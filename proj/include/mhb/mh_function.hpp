#pragma once

// Finite Peter-Weyl sums of solid harmonics: f = sum S_pq(|z|^2) h_pq(z, z-bar)
// with h_pq an exact harmonic bihomogeneous polynomial of bidegree (p, q),
// plus point evaluation, polynomial truncation with tail bounds, the symbolic
// invariant-Laplacian residual, fractional (I + box)^t powers, the Moebius
// involution of the ball, the Monte Carlo mean-value check, and the normal-
// derivative blow-up profile.

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mhb/polynomial.hpp"

namespace mhb {

struct MhComponent {
    int p = 0;
    int q = 0;
    BigradedPolynomial h;
};

class MhFunction {
public:
    // Validates every component: h harmonic (exactly), bihomogeneous of the
    // labelled bidegree, at most one component per (p, q).
    static MhFunction create(int n, std::vector<MhComponent> components,
                             double box_power = 0.0);

    int dim() const { return n_; }
    double box_power() const { return box_power_; }
    const std::vector<MhComponent>& components() const { return comps_; }

    // Value of the (0,0) component (equals f(0): higher components vanish at 0).
    std::complex<double> value_at_origin() const;

private:
    MhFunction(int n, std::vector<MhComponent> comps, double box_power)
        : n_(n), box_power_(box_power), comps_(std::move(comps)) {}
    int n_ = 1;
    double box_power_ = 0.0;
    std::vector<MhComponent> comps_;
};

// Eigenvalue of (I + box) on bidegree (p, q): 4pq + (2n-2)(p+q) + 1.
double box_eigenvalue(int n, int p, int q);

std::complex<double> evaluate(const MhFunction& f, std::span<const std::complex<double>> z);

// Each S_pq Taylor series truncated after K+1 terms; exact coefficients.
BigradedPolynomial truncate_to_polynomial(const MhFunction& f, int K);

// Bound on the sup-error of the truncation over |z| <= r0.
double truncation_tail_bound(const MhFunction& f, int K, double r0);

// max over sample points of |invariant Laplacian applied symbolically to the
// K-truncation|; decays like r0^{2K} for points with |z| <= r0.
double mharmonicity_residual(const MhFunction& f, int K,
                             std::span<const std::vector<std::complex<double>>> points);

MhFunction apply_box_power(const MhFunction& f, double t);

// Moebius involution phi_z(w) interchanging z and 0; phi_0(w) = -w.
std::vector<std::complex<double>> moebius(std::span<const std::complex<double>> z,
                                          std::span<const std::complex<double>> w);

struct MeanValueCheck {
    double residual = 0.0;
    double std_error = 0.0;
};

// |f(z) - mean over `samples` uniform sphere points zeta of f(phi_z(r zeta))|
// with its Monte Carlo standard error.  Deterministic for a fixed seed.
MeanValueCheck mean_value_residual(const MhFunction& f,
                                   std::span<const std::complex<double>> z, double r,
                                   long samples, std::uint64_t seed);

// N^{n+1} applied to the unnormalized radial profile r^{p+q} 2F1(p,q;p+q+n;r^2)
// along r_grid; (1-r) * value tends to 2^n Gamma(p+q+n)/(Gamma(p)Gamma(q)).
std::vector<std::pair<double, double>> blowup_profile(int n, int p, int q,
                                                      std::span<const double> r_grid);

}  // namespace mhb
