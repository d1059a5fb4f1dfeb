#pragma once

#include <array>
#include <string>

namespace risgg {

/// Moments of the composite gain Z (equivalently of sqrt(gamma) at unit average SNR).
///
/// `pi_poly[i]` holds exact coefficients c_0..c_4 with mu_{i+1} = sum_d c_d pi^d; the
/// fit re-evaluates them at 50 digits. A set built by hand with a zero polynomial is
/// fitted from the double values instead.
struct MomentSet {
  unsigned n_elements = 0;
  double mu1 = 0, mu2 = 0, mu3 = 0, mu4 = 0;
  std::array<std::array<double, 5>, 4> pi_poly{};

  double mu(int order) const;
  void validate() const;
};

/// Parameters of the moment-matched SNR density
///   f(gamma) = a1 a2 / (2 gamma) G^{2,0}_{1,2}[sqrt(gamma/gamma_bar)/a2 | a3+1; a5+1, a4+1].
struct PdfParams {
  double a1 = 0, a2 = 0, a3 = 0, a4 = 0, a5 = 0, a6 = 0, a7 = 0;
  std::array<double, 4> varphi{};
  unsigned n_elements = 0;

  std::string to_string() const;
};

/// Exact moments for N >= 1 reflecting elements.
MomentSet moments(unsigned n_elements);

/// Four-moment fit. Intermediate arithmetic runs at 50 significant digits.
/// Throws DegenerateFitError when the a7 radicand is negative or a2 <= 0; this
/// happens for N <= 3, where a4 and a5 would be complex.
PdfParams fit_pdf_params(const MomentSet& m);

/// Fitted SNR density at gamma >= 0 (0 at gamma = 0).
double snr_pdf(const PdfParams& p, double gamma, double gamma_bar);

/// Fitted SNR distribution function, a1 a2 G^{2,1}_{2,3}[x/a2 | 1, a3+1; a5+1, a4+1, 0]
/// with x = sqrt(gamma/gamma_bar).
double snr_cdf(const PdfParams& p, double gamma, double gamma_bar);

/// Density of X = sqrt(gamma/gamma_bar) under the fit: a1 a2 / x G^{2,0}_{1,2}[x/a2 | ...].
double fitted_gain_pdf(const PdfParams& p, double x);

/// E[X^r] under the fit, a2^r Gamma(a3+1) Gamma(a5+1+r) Gamma(a4+1+r) /
/// [Gamma(a5+1) Gamma(a4+1) Gamma(a3+1+r)].
double fitted_gain_moment(const PdfParams& p, double r);

}  // namespace risgg
