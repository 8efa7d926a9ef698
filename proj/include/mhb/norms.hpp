#pragma once

// The four equivalent norms on finite Peter-Weyl sums — weighted Bergman,
// iterated-tangential, box-smoothed, and smoothed Hardy — plus the weighted
// Sobolev quantity of order m.  All are diagonal in the (p, q) components;
// the tangential norm additionally has a fully symbolic evaluation path that
// applies the 2n^2 fields to the truncated polynomial and integrates with
// exact ball moments.

#include "mhb/mh_function.hpp"

namespace mhb {

// Squared sphere norm of the component's harmonic polynomial, including the
// (I+box)^{box_power} scaling of f.
double component_sphere_norm_sq(const MhFunction& f, const MhComponent& c);

// sum c_pq(s) ||h_pq||^2; valid on s > -n-1 through the coefficient routes.
double norm_bergman(const MhFunction& f, double s);

enum class TangentialMode { spectral, symbolic };

// sum over m-fold products of the 2n^2 tangential fields of the (s+m)-Bergman
// norms, plus |f(0)|^2.  Spectral mode uses the eigenvalue sum; symbolic mode
// differentiates the K-truncation and integrates with exact ball moments.
double norm_tangential(const MhFunction& f, double s, int m,
                       TangentialMode mode = TangentialMode::spectral, int K = 40);

// ||(I+box)^{t/2} f||^2_{s+t} in spectral form.
double norm_box_smoothed(const MhFunction& f, double s, double t);

// sum [4pq+(2n-2)(p+q)+1]^{-s-1} ||h_pq||^2 (the monotone r -> 1 limit).
double norm_hardy_smoothed(const MhFunction& f, double s);

// Sphere norm of the smoothed dilate at radius r; increases to the Hardy value.
double hardy_dilate_norm_sq(const MhFunction& f, double s, double r);

// Spectral Sobolev quantity sum_{l<=m} sum_{k<=l} [(p+q)(p+q+2n-2)]^{l-k}
// c_{pq,k}(s) ||h_pq||^2.  Returns +infinity when a divergent c_{pq,k} is hit.
double norm_sobolev(const MhFunction& f, double s, int m);

struct NormReport {
    double s = 0.0;
    int m = 1;
    double t = 1.0;
    int sobolev_order = 0;
    double bergman = 0.0;
    double tangential = 0.0;
    double box_smoothed = 0.0;
    double hardy = 0.0;
    double sobolev = 0.0;
};

NormReport norm_report(const MhFunction& f, double s, int m, double t, int sobolev_order);

}  // namespace mhb
