#include "risgg/specfun.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "risgg/errors.hpp"
#include "risgg/ggn.hpp"

namespace risgg::specfun {

double ln_gamma(double x) {
  if (!std::isfinite(x) || x <= 0) throw DomainError("ln_gamma: argument must be finite and > 0");
  return boost::math::lgamma(x);
}

namespace {
void check_q_args(double alpha, double x) {
  if (!(alpha > 0) || !std::isfinite(alpha)) throw DomainError("generalized_q: alpha must be > 0");
  if (!(x >= 0)) throw DomainError("generalized_q: x must be >= 0");
}
}  // namespace

double generalized_q(double alpha, double x) {
  check_q_args(alpha, x);
  if (x == 0) return 0.5;
  if (std::isinf(x)) return 0.0;
  const double t = std::pow(lambda0(alpha) * x, alpha);
  return 0.5 * boost::math::gamma_q(1.0 / alpha, t);
}

double generalized_q_quadrature(double alpha, double x, double tol) {
  check_q_args(alpha, x);
  if (std::isinf(x)) return 0.0;
  const double l0 = lambda0(alpha);
  const double head = std::pow(l0 * x, alpha);
  // Integrate exp(head - (l0 (x + u))^alpha) over u >= 0 so the integrand is
  // O(1) near the lower limit, then restore the factor exp(-head).
  auto f = [&](double u) {
    const double e = head - std::pow(l0 * (x + u), alpha);
    return std::exp(e);
  };
  boost::math::quadrature::exp_sinh<double> integrator;
  double error = 0.0;
  double l1 = 0.0;
  const double integral = integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(),
                                               tol, &error, &l1);
  if (!(error <= tol * std::abs(integral))) {
    throw ConvergenceError("generalized_q_quadrature: error estimate " + std::to_string(error) +
                               " above tolerance",
                           std::numeric_limits<double>::quiet_NaN(), error);
  }
  const double log_norm = std::log(alpha * l0 / 2) - boost::math::lgamma(1.0 / alpha);
  return std::exp(log_norm - head + std::log(integral));
}

double generalized_q_meijer(unsigned l, unsigned k, double x) {
  if (l == 0 || k == 0 || std::gcd(l, k) != 1) {
    throw DomainError("generalized_q_meijer: l and k must be coprime positive integers");
  }
  const double alpha = static_cast<double>(l) / k;
  check_q_args(alpha, x);
  // G^{2,0}_{1,2}[z | 1; 0, 1/alpha] -> Gamma(1/alpha) as z -> 0.
  if (x == 0) return 0.5;
  const MeijerGSpec spec{2, 0, {1.0}, {0.0, 1.0 / alpha}};
  const double z = std::pow(lambda0(alpha) * x, alpha);
  const double g = meijer_g(spec, z, 1e-13);
  return g / (2.0 * std::tgamma(1.0 / alpha));
}

}  // namespace risgg::specfun
