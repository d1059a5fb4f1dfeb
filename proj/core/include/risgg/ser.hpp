#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "risgg/meijer.hpp"
#include "risgg/snr_stats.hpp"

namespace risgg {

/// Modulation constants (A, B) of the SER approximation A Q_alpha(sqrt(B gamma)).
struct Modulation {
  enum class Kind { bpsk, qpsk, mpsk, rect_qam };

  Kind kind = Kind::bpsk;
  unsigned order = 2;  ///< M
  double A = 1.0;
  double B = 1.0;

  static Modulation bpsk();
  static Modulation qpsk();  ///< also 4-QAM
  static Modulation mpsk(unsigned m);
  static Modulation rect_qam(unsigned m);

  std::string name() const;
};

/// Noise shape alpha = l/k as a reduced fraction.
struct NoiseCase {
  enum class Kind { gamma_noise, laplacian, gaussian, general };

  Kind kind = Kind::gaussian;
  unsigned l = 2;
  unsigned k = 1;

  static NoiseCase gamma_noise() { return {Kind::gamma_noise, 1, 2}; }
  static NoiseCase laplacian() { return {Kind::laplacian, 1, 1}; }
  static NoiseCase gaussian() { return {Kind::gaussian, 2, 1}; }
  /// Throws DomainError unless gcd(l, k) = 1.
  static NoiseCase general(unsigned l, unsigned k);

  double alpha() const { return static_cast<double>(l) / k; }
  std::string name() const;
};

enum class SerMethod { closed_form, asymptotic, semi_analytic_mc, symbol_level_mc };

std::string to_string(SerMethod method);

struct SerEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
  SerMethod method = SerMethod::closed_form;
  /// Value before clamping to [0, 1]; differs from `value` only when `clamped`.
  double raw = 0.0;
  bool clamped = false;
  /// Symbol-level runs with no observed error: one-sided 95% upper bound on the SER.
  double upper_bound = 0.0;
};

/// A Q_alpha(sqrt(B gamma)), clamped to [0, 1].
double conditional_ser(const Modulation& mod, double alpha, double gamma);

/// Largest k + l accepted by the closed form.
inline constexpr unsigned kMaxOrderSum = 8;

/// Meijer G instance and argument of the generic closed form.
struct ClosedFormTerms {
  specfun::MeijerGSpec spec;
  double argument = 0.0;
  double log_prefactor = 0.0;
};

ClosedFormTerms closed_form_terms(const Modulation& mod, const NoiseCase& noise, const PdfParams& params,
                                  double gamma_bar);

/// Generic closed-form SER for alpha = l/k with k + l <= kMaxOrderSum.
SerEstimate ser_closed_form(const Modulation& mod, const NoiseCase& noise, const PdfParams& params,
                            double gamma_bar);

/// Hand-specialized forms for the gamma, Laplacian and Gaussian noise cases.
SerEstimate ser_special(const NoiseCase& noise, const Modulation& mod, const PdfParams& params,
                        double gamma_bar);

/// Leading high-SNR terms of the three special cases (two for gamma and
/// Laplacian noise, four for Gaussian noise). Throws PoleError when a gamma
/// factor sits on a pole.
SerEstimate ser_asymptotic(const NoiseCase& noise, const Modulation& mod, const PdfParams& params,
                           double gamma_bar);

/// min((a5 + 1)/2, (a4 + 1)/2); independent of the noise case.
double diversity_asymptotic(const PdfParams& params, const NoiseCase& noise);

/// Local slopes -d log P / d log gamma_bar of (gamma_bar, P) points with gamma_bar
/// linear and strictly increasing: centered differences inside, one-sided at the ends.
std::vector<std::pair<double, double>> diversity_empirical(const std::vector<std::pair<double, double>>& curve);

}  // namespace risgg
