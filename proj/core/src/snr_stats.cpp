#include "risgg/snr_stats.hpp"

#include <cmath>
#include <sstream>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "risgg/errors.hpp"
#include "risgg/meijer.hpp"

namespace risgg {
namespace {

using Wide = boost::multiprecision::cpp_bin_float_50;

double poly_value(const std::array<double, 5>& c) {
  const double pi = boost::math::constants::pi<double>();
  return c[0] + pi * (c[1] + pi * (c[2] + pi * (c[3] + pi * c[4])));
}

Wide poly_value_wide(const std::array<double, 5>& c) {
  const Wide pi = boost::math::constants::pi<Wide>();
  Wide out = 0, power = 1;
  for (double coeff : c) {
    out += Wide(coeff) * power;
    power *= pi;
  }
  return out;
}

bool is_zero(const std::array<double, 5>& c) {
  for (double x : c)
    if (x != 0) return false;
  return true;
}

}  // namespace

double MomentSet::mu(int order) const {
  switch (order) {
    case 0: return 1.0;
    case 1: return mu1;
    case 2: return mu2;
    case 3: return mu3;
    case 4: return mu4;
    default: throw DomainError("MomentSet::mu: order must be 0..4");
  }
}

void MomentSet::validate() const {
  if (!(mu1 > 0 && mu2 > 0 && mu3 > 0 && mu4 > 0)) throw DomainError("MomentSet: moments must be positive");
  if (mu2 < mu1 * mu1 * (1 - 1e-14)) throw DomainError("MomentSet: mu2 < mu1^2");
  if (mu4 * mu2 < mu3 * mu3 * (1 - 1e-14)) throw DomainError("MomentSet: mu4 mu2 < mu3^2");
}

MomentSet moments(unsigned n_elements) {
  if (n_elements < 1) throw DomainError("moments: need N >= 1");
  const double n = n_elements;
  MomentSet m;
  m.n_elements = n_elements;
  auto& c = m.pi_poly;
  c[0] = {0, n / 2, 0, 0, 0};
  c[1] = {4 * n, 0, n * (n - 1) / 4, 0, 0};
  if (n_elements >= 3) {
    c[2] = {0, n * (4.5 + 6 * (n - 1)), 0, n * (n - 1) * (n - 2) / 8, 0};
  } else if (n_elements == 2) {
    c[2] = {0, 21, 0, 0, 0};
  } else {
    c[2] = {0, 4.5, 0, 0, 0};
  }
  if (n_elements >= 4) {
    c[3] = {64 * n + 48 * n * (n - 1), 0, 9 * n * (n - 1) + 6 * n * (n - 1) * (n - 2), 0,
            n * (n - 1) * (n - 2) * (n - 3) / 16};
  } else if (n_elements == 3) {
    c[3] = {480, 0, 90, 0, 0};
  } else if (n_elements == 2) {
    c[3] = {224, 0, 18, 0, 0};
  } else {
    c[3] = {64, 0, 0, 0, 0};
  }
  m.mu1 = poly_value(c[0]);
  m.mu2 = poly_value(c[1]);
  m.mu3 = poly_value(c[2]);
  m.mu4 = poly_value(c[3]);
  return m;
}

std::string PdfParams::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << "N=" << n_elements << " a1=" << a1 << " a2=" << a2 << " a3=" << a3 << " a4=" << a4 << " a5=" << a5
     << " a6=" << a6 << " a7=" << a7;
  return os.str();
}

PdfParams fit_pdf_params(const MomentSet& m) {
  m.validate();
  std::array<Wide, 5> mu;
  mu[0] = 1;
  for (int i = 0; i < 4; ++i) {
    const auto& poly = m.pi_poly[i];
    const double given = m.mu(i + 1);
    const bool exact = !is_zero(poly) && std::abs(poly_value(poly) - given) <= 1e-13 * std::abs(given);
    mu[i + 1] = exact ? poly_value_wide(poly) : Wide(given);
  }
  std::array<Wide, 5> phi;
  for (int i = 1; i <= 4; ++i) phi[i] = mu[i] / mu[i - 1];

  const Wide a3 = (4 * phi[4] - 9 * phi[3] + 6 * phi[2] - mu[1]) / (-phi[4] + 3 * phi[3] - 3 * phi[2] + mu[1]);
  const Wide a2 = a3 / 2 * (phi[4] - 2 * phi[3] + phi[2]) + 2 * phi[4] - 3 * phi[3] + phi[2];
  std::ostringstream diag;
  diag.precision(12);
  if (!(a2 > 0)) {
    diag << "fit_pdf_params: a2 = " << a2 << " <= 0 (N=" << m.n_elements << ", a3 = " << a3 << ")";
    throw DegenerateFitError(diag.str());
  }
  const Wide t = (a3 * (phi[2] - mu[1]) + 2 * phi[2] - mu[1]) / a2;
  const Wide a6 = t - 3;
  const Wide radicand = (t - 1) * (t - 1) - 4 / a2 * mu[1] * (a3 + 1);
  if (radicand < 0) {
    diag << "fit_pdf_params: a7 radicand = " << radicand << " < 0 (N=" << m.n_elements << ", a2 = " << a2
         << ", a3 = " << a3 << ", a6 = " << a6 << ")";
    throw DegenerateFitError(diag.str());
  }
  const Wide a7 = sqrt(radicand);
  const Wide a4 = (a6 + a7) / 2;
  const Wide a5 = (a6 - a7) / 2;
  if (!(a3 > -1) || !(a5 > -1)) {
    diag << "fit_pdf_params: shape parameters out of range (a3 = " << a3 << ", a5 = " << a5 << ")";
    throw DegenerateFitError(diag.str());
  }
  const Wide log_a1 = boost::math::lgamma(a3 + 1) - log(a2) - boost::math::lgamma(a4 + 1) -
                      boost::math::lgamma(a5 + 1);

  PdfParams p;
  p.n_elements = m.n_elements;
  p.a1 = static_cast<double>(exp(log_a1));
  p.a2 = static_cast<double>(a2);
  p.a3 = static_cast<double>(a3);
  p.a4 = static_cast<double>(a4);
  p.a5 = static_cast<double>(a5);
  p.a6 = static_cast<double>(a6);
  p.a7 = static_cast<double>(a7);
  for (int i = 0; i < 4; ++i) p.varphi[i] = static_cast<double>(phi[i + 1]);
  return p;
}

double fitted_gain_pdf(const PdfParams& p, double x) {
  if (!(x >= 0)) throw DomainError("fitted_gain_pdf: x must be >= 0");
  if (x == 0) return 0.0;
  const specfun::MeijerGSpec spec{2, 0, {p.a3 + 1}, {p.a5 + 1, p.a4 + 1}};
  return p.a1 * p.a2 / x * specfun::meijer_g(spec, x / p.a2, 1e-11);
}

double snr_pdf(const PdfParams& p, double gamma, double gamma_bar) {
  if (!(gamma >= 0)) throw DomainError("snr_pdf: gamma must be >= 0");
  if (!(gamma_bar > 0)) throw DomainError("snr_pdf: gamma_bar must be > 0");
  if (gamma == 0) return 0.0;
  const double x = std::sqrt(gamma / gamma_bar);
  // d gamma = 2 x gamma_bar dx
  return fitted_gain_pdf(p, x) / (2.0 * x * gamma_bar);
}

double snr_cdf(const PdfParams& p, double gamma, double gamma_bar) {
  if (!(gamma >= 0)) throw DomainError("snr_cdf: gamma must be >= 0");
  if (!(gamma_bar > 0)) throw DomainError("snr_cdf: gamma_bar must be > 0");
  if (gamma == 0) return 0.0;
  const double x = std::sqrt(gamma / gamma_bar);
  const specfun::MeijerGSpec spec{2, 1, {1.0, p.a3 + 1}, {p.a5 + 1, p.a4 + 1, 0.0}};
  return p.a1 * p.a2 * specfun::meijer_g(spec, x / p.a2, 1e-11);
}

double fitted_gain_moment(const PdfParams& p, double r) {
  using boost::math::lgamma;
  const double lg = r * std::log(p.a2) + lgamma(p.a3 + 1) + lgamma(p.a5 + 1 + r) + lgamma(p.a4 + 1 + r) -
                    lgamma(p.a5 + 1) - lgamma(p.a4 + 1) - lgamma(p.a3 + 1 + r);
  return std::exp(lg);
}

}  // namespace risgg
