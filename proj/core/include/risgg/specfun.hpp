#pragma once

#include "risgg/meijer.hpp"

namespace risgg::specfun {

/// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double ln_gamma(double x);

/// Tail probability of the unit-variance generalized Gaussian law,
///   Q_alpha(x) = Gamma(1/alpha, (Lambda0 x)^alpha) / (2 Gamma(1/alpha)),
/// computed through the regularized upper incomplete gamma function.
double generalized_q(double alpha, double x);

/// Same quantity by adaptive quadrature of the density tail. Slower; kept as
/// an independent check on the incomplete-gamma path. Throws ConvergenceError
/// when the quadrature error estimate exceeds `tol` relative.
double generalized_q_quadrature(double alpha, double x, double tol = 1e-12);

/// Q_{l/k}(x) through G^{2,0}_{1,2}[(Lambda0 x)^alpha | 1; 0, 1/alpha] / (2 Gamma(1/alpha)).
/// Requires gcd(l, k) = 1.
double generalized_q_meijer(unsigned l, unsigned k, double x);

}  // namespace risgg::specfun
