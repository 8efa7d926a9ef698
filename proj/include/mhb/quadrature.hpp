#pragma once

// Gauss-Jacobi quadrature on [0,1] for integrals of the form
//   int_0^1 t^beta_exp (1-t)^alpha_exp f(t) dt,   alpha_exp, beta_exp > -1,
// with the endpoint singularities absorbed into the weight.  Nodes and weights
// come from the Golub-Welsch eigenvalue method on the Jacobi recurrence; rules
// are cached and immutable.  Adaptive drivers double the order (16, 32, ...,
// 4096) until two successive refinements agree to the requested tolerance.

#include <functional>
#include <utility>
#include <vector>

#include "mhb/errors.hpp"

namespace mhb {

struct QuadratureRule {
    int order = 0;
    double alpha_exp = 0.0;  // exponent of (1 - t)
    double beta_exp = 0.0;   // exponent of t
    std::vector<double> nodes;
    std::vector<double> weights;
};

struct IntegralEstimate {
    double value = 0.0;
    double err_est = 0.0;
};

// Builds the order-point rule.  Throws DomainError for exponents <= -1.
QuadratureRule build_rule(int order, double alpha_exp, double beta_exp);

// Cached rule lookup (thread-safe); the reference stays valid for the process
// lifetime.
const QuadratureRule& cached_rule(int order, double alpha_exp, double beta_exp);

// Adaptive integration of f against t^beta (1-t)^alpha.  Throws
// ConvergenceError past the order cap 4096.
IntegralEstimate integrate(const std::function<double(double)>& f, double alpha_exp,
                           double beta_exp, double rel_tol = 1e-10);

// Tensor-product analogue on [0,1]^2; exps are (exponent of (1-x), exponent of x).
IntegralEstimate integrate_2d(const std::function<double(double, double)>& f,
                              std::pair<double, double> x_exps,
                              std::pair<double, double> y_exps, double rel_tol = 1e-10);

// Composite scheme for integrands whose only awkward behaviour sits at t = 1
// (an algebraic-logarithmic factor like (1-t)^k log(1-t) on top of the
// (1-t)^alpha weight, with f bounded at 1): an adaptive rule on [0, 15/16]
// plus dyadic slices toward t = 1, summed until the geometric tail is below
// tolerance.  Converges where a single global rule stalls (large beta_exp,
// alpha_exp near -1/2).
IntegralEstimate integrate_endpoint(const std::function<double(double)>& f,
                                    double alpha_exp, double beta_exp,
                                    double rel_tol = 1e-10);

// ln B(a, b); B(beta_exp + 1, alpha_exp + 1) is the total mass of the weight.
double log_beta(double a, double b);

}  // namespace mhb
