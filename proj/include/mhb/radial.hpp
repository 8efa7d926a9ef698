#pragma once

// Radial hypergeometric profiles S_pq(t) = (n)_p(n)_q/(n)_{p+q} 2F1(p,q;p+q+n;t),
// the solid-harmonic radial factor r^{p+q} S_pq(r^2), the k-fold derivatives
// (2t d/dt)^k applied to t^{(p+q)/2} S_pq(t), and the auxiliary integrals
//   I_pqs(n, k) = int_0^1 t^{p+q+n-1+k} (1-t)^s 2F1(p,q;p+q+n;t)^2 dt.

#include "mhb/errors.hpp"

namespace mhb {

struct RadialProfile {
    double n = 1.0;  // complex dimension; real values allowed for continuation checks
    int p = 0;
    int q = 0;
};

// S_pq(t) on [0,1]; S_pq(1) = 1 and S_pq(0) = (n)_p(n)_q/(n)_{p+q}.
double s_pq(const RadialProfile& prof, double t);

// r^{p+q} S_pq(r^2); nondecreasing on [0,1] with value 1 at r = 1.
double radial_factor(const RadialProfile& prof, double r);

// (2t d/dt)^k applied to t^{(p+q)/2} S_pq(t), t in (0,1).  The factor
// t^{(p+q)/2} is included; set normalized = false to drop the
// (n)_p(n)_q/(n)_{p+q} normalization (the bare 2F1 profile).
double radial_k_derivative(const RadialProfile& prof, int k, double t, bool normalized = true);

// Same quantity divided by t^{(p+q)/2}; this is the function integrated by the
// Sobolev coefficient machinery (its square carries weight t^{p+q}).
double radial_k_series(const RadialProfile& prof, int k, double t, bool normalized = true);

// I_pqs(n_eff, k).  Requires p+q+n_eff > 0, s > -1.
double i_pqs(double n_eff, int k, int p, int q, double s);

// Relative residual of (1-r^2)u'' + ((2n-1)/r - r)u' + (-(p+q)(p+q+2n-2)/r^2 + (p-q)^2)u
// at u(r) = r^{p+q} S_pq(r^2), measured against the largest of the three terms.
double radial_ode_residual(const RadialProfile& prof, double r);

}  // namespace mhb
