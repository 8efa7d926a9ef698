#pragma once

// Diagonal Bergman coefficients c_pq(s) by three independent routes:
//   - quadrature:      (s+1)_n/Gamma(n) int_0^1 t^{p+q+n-1}(1-t)^s S_pq(t)^2 dt,  s > -1
//   - double_integral: the closed double-integral form, valid on s > -n-1 (p,q >= 1)
//   - closed_p0:       the exact Gamma ratio for pq = 0
// plus the two-lattice series at non-integer dimension (cross-check route), the
// normalized quantity (p+1)^{s+1}(q+1)^{s+1} c_pq(s), and the Sobolev-weight
// coefficients c_{pq,k}(s) with divergence detection at k > n.

#include <string>

#include "mhb/errors.hpp"

namespace mhb {

enum class Route { quadrature, double_integral, closed_p0, series_noninteger, auto_route };

std::string route_name(Route r);
Route route_from_name(const std::string& name);

struct CoeffRequest {
    int n = 2;
    int p = 0;
    int q = 0;
    double s = 0.0;
    Route route = Route::auto_route;
    double rel_tol = 1e-10;
};

struct CoeffResult {
    double value = 0.0;
    double err_est = 0.0;
    Route route_used = Route::auto_route;
};

CoeffResult c_pq_quadrature(int n, int p, int q, double s, double rel_tol = 1e-10);
CoeffResult c_pq_double_integral(int n, int p, int q, double s, double rel_tol = 1e-10);
CoeffResult c_0q_closed(int n, int q, double s);

// Two-lattice sum at non-integer n_eff; kmax caps the lattice index.
double c_pq_series_noninteger(double n_eff, int p, int q, double s, long kmax = 2000000);

// Route dispatcher.  auto picks closed_p0 if pq = 0, quadrature if s > -1,
// double_integral otherwise.  Requests outside a route's domain throw.
CoeffResult c_pq(const CoeffRequest& req);

// (p+1)^{s+1} (q+1)^{s+1} c_pq(s) via the auto route.
double normalized_c(int n, int p, int q, double s);

struct CpqkResult {
    double value = 0.0;  // +infinity when divergent
    double err_est = 0.0;
    bool divergent = false;
};

// c_{pq,k}(s) = int_0^1 t^{n-1} (1-t)^s [(2t d/dt)^k (t^{(p+q)/2} S_pq(t))]^2 dt.
// For k > n and pq > 0 the integral may blow up near t = 1; divergence is
// detected from non-decaying dyadic tail increments and flagged.
CpqkResult c_pq_k(int n, int p, int q, int k, double s, double rel_tol = 1e-9);

}  // namespace mhb
