#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "risgg/extended.hpp"

namespace risgg::specfun {

/// Orders and parameters of G^{m,n}_{p,q}[z | a_1..a_p ; b_1..b_q].
///
/// The first n entries of `a` feed Gamma(1 - a_i + s) in the Mellin-Barnes
/// integrand, the rest feed 1/Gamma(a_i - s). The first m entries of `b` feed
/// Gamma(b_j - s), the rest 1/Gamma(1 - b_j + s).
struct MeijerGSpec {
  unsigned m = 0;
  unsigned n = 0;
  std::vector<double> a;
  std::vector<double> b;

  std::size_t p() const noexcept { return a.size(); }
  std::size_t q() const noexcept { return b.size(); }

  /// Throws DomainError for inconsistent orders or non-finite parameters and
  /// PoleCollisionError when some a_i - b_j (i <= n, j <= m) is a positive integer.
  void validate() const;

  std::string to_string() const;
};

enum class MeijerPath {
  automatic,       ///< pick the cheapest path that is valid and well conditioned
  residue_series,  ///< Slater residue sum (right poles, or left poles via z -> 1/z)
  contour,         ///< Mellin-Barnes quadrature along a vertical line
};

/// Outcome of one evaluation, with enough detail to audit the path taken.
struct MeijerEvaluation {
  Extended value = 0;
  MeijerPath path = MeijerPath::automatic;
  bool inverted = false;   ///< the residue sum ran on G^{n,m}_{q,p}[1/z | 1-b; 1-a]
  double abscissa = 0.0;   ///< contour real part; NaN for the series path
  std::size_t work = 0;    ///< series terms summed or integrand evaluations
  double condition = 1.0;  ///< sum of |contributions| over |value|
};

/// Evaluates the Meijer G-function at real z > 0 to relative tolerance `tol`.
///
/// With `MeijerPath::automatic` the residue series is tried first when all
/// poles on the summed side are simple and the sum converges for this z (using
/// the z -> 1/z identity when the left-pole sum is the convergent one); if
/// poles coincide, the sum diverges, or cancellation would eat the tolerance,
/// the contour integral is used. Forcing a path throws when that path is not
/// applicable.
///
/// Parameters that cancel exactly (a_i = b_j across a numerator/denominator
/// pair) are removed before either path runs. Internal arithmetic is Extended.
MeijerEvaluation meijer_g_eval(const MeijerGSpec& spec, double z, double tol = 1e-12,
                               MeijerPath path = MeijerPath::automatic);

/// Double-precision convenience wrapper around meijer_g_eval.
double meijer_g(const MeijerGSpec& spec, double z, double tol = 1e-12);

}  // namespace risgg::specfun
