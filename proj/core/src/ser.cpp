#include "risgg/ser.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "risgg/errors.hpp"
#include "risgg/ggn.hpp"
#include "risgg/specfun.hpp"

namespace risgg {
namespace {

constexpr double kSerTol = 1e-10;

bool power_of_two_at_least_4(unsigned m) { return m >= 4 && (m & (m - 1)) == 0; }

void check_inputs(const PdfParams& params, double gamma_bar) {
  if (!(gamma_bar > 0) || !std::isfinite(gamma_bar)) throw DomainError("SER: gamma_bar must be finite and > 0");
  if (!(params.a2 > 0) || !(params.a1 > 0)) throw DomainError("SER: parameters are not from a successful fit");
}

SerEstimate finish(double raw, SerMethod method) {
  SerEstimate out;
  out.raw = raw;
  out.method = method;
  out.value = std::clamp(raw, 0.0, 1.0);
  out.clamped = !(out.value == raw);
  return out;
}

SerEstimate evaluate(const specfun::MeijerGSpec& spec, double z, double log_prefactor, SerMethod method) {
  const auto g = specfun::meijer_g_eval(spec, z, kSerTol);
  const Extended raw = exp(Extended(log_prefactor)) * g.value;
  return finish(static_cast<double>(raw), method);
}

// log|Gamma(x)| and its sign; PoleError at non-positive integers.
double signed_lgamma(double x, int& sign) {
  if (x <= 0 && x == std::floor(x)) {
    throw PoleError("asymptotic SER: Gamma(" + std::to_string(x) + ") is a pole");
  }
  int s = 1;
  const double lg = boost::math::lgamma(x, &s);
  sign *= s;
  return lg;
}

// Product of Gamma(num_i) / Gamma(den_j) times base^power, accumulated in logs.
double gamma_ratio_term(std::initializer_list<double> num, std::initializer_list<double> den, double log_base,
                        double power) {
  int sign = 1;
  double lg = power * log_base;
  for (double x : num) lg += signed_lgamma(x, sign);
  for (double x : den) lg -= signed_lgamma(x, sign);
  return sign * std::exp(lg);
}

}  // namespace

Modulation Modulation::bpsk() { return {Kind::bpsk, 2, 1.0, 1.0}; }
Modulation Modulation::qpsk() { return {Kind::qpsk, 4, 2.0, 2.0}; }

Modulation Modulation::mpsk(unsigned m) {
  if (!power_of_two_at_least_4(m)) throw DomainError("mpsk: M must be a power of two >= 4");
  const double s = std::sin(boost::math::constants::pi<double>() / m);
  return {Kind::mpsk, m, 2.0, 2.0 * s * s};
}

Modulation Modulation::rect_qam(unsigned m) {
  if (!power_of_two_at_least_4(m)) throw DomainError("rect_qam: M must be a power of two >= 4");
  const double r = std::sqrt(static_cast<double>(m));
  return {Kind::rect_qam, m, 4.0 * (r - 1.0) / r, 3.0 / (r - 1.0)};
}

std::string Modulation::name() const {
  switch (kind) {
    case Kind::bpsk: return "BPSK";
    case Kind::qpsk: return "QPSK";
    case Kind::mpsk: return std::to_string(order) + "-PSK";
    case Kind::rect_qam: return std::to_string(order) + "-QAM";
  }
  return "?";
}

NoiseCase NoiseCase::general(unsigned l, unsigned k) {
  if (l == 0 || k == 0 || std::gcd(l, k) != 1) throw DomainError("NoiseCase: l/k must be a reduced fraction");
  return {Kind::general, l, k};
}

std::string NoiseCase::name() const {
  switch (kind) {
    case Kind::gamma_noise: return "gamma";
    case Kind::laplacian: return "laplacian";
    case Kind::gaussian: return "gaussian";
    case Kind::general: return "general(" + std::to_string(l) + "/" + std::to_string(k) + ")";
  }
  return "?";
}

std::string to_string(SerMethod method) {
  switch (method) {
    case SerMethod::closed_form: return "closed_form";
    case SerMethod::asymptotic: return "asymptotic";
    case SerMethod::semi_analytic_mc: return "semi_analytic_mc";
    case SerMethod::symbol_level_mc: return "symbol_level_mc";
  }
  return "?";
}

double conditional_ser(const Modulation& mod, double alpha, double gamma) {
  if (!(gamma >= 0)) throw DomainError("conditional_ser: gamma must be >= 0");
  return std::clamp(mod.A * specfun::generalized_q(alpha, std::sqrt(mod.B * gamma)), 0.0, 1.0);
}

ClosedFormTerms closed_form_terms(const Modulation& mod, const NoiseCase& noise, const PdfParams& params,
                                  double gamma_bar) {
  check_inputs(params, gamma_bar);
  const unsigned l = noise.l, k = noise.k;
  if (l == 0 || k == 0 || std::gcd(l, k) != 1) throw DomainError("closed form: l/k must be a reduced fraction");
  if (l + k > kMaxOrderSum) {
    throw EngineOrderError("closed form: k + l = " + std::to_string(l + k) + " exceeds " +
                           std::to_string(kMaxOrderSum));
  }
  const double alpha = noise.alpha();
  const double dl = l, dk = k;
  const double pi = boost::math::constants::pi<double>();

  ClosedFormTerms t;
  auto& s = t.spec;
  s.m = 2 * k;
  s.n = 2 * l;
  for (unsigned i = 0; i < l; ++i) s.a.push_back((-params.a5 + i) / dl);
  for (unsigned i = 0; i < l; ++i) s.a.push_back((-params.a4 + i) / dl);
  for (unsigned i = 0; i < k; ++i) s.a.push_back((1.0 + i) / dk);
  for (unsigned i = 0; i < k; ++i) s.b.push_back(i / dk);
  for (unsigned i = 0; i < k; ++i) s.b.push_back((1.0 / alpha + i) / dk);
  for (unsigned i = 0; i < l; ++i) s.b.push_back((-params.a3 + i) / dl);

  // (l^l / k^k) Lambda0^l B^{l/2} a2^l gamma_bar^{l/2}
  const double log_z = dl * std::log(dl) - dk * std::log(dk) +
                       dl * (std::log(lambda0(alpha)) + std::log(params.a2)) +
                       0.5 * dl * (std::log(mod.B) + std::log(gamma_bar));
  t.argument = std::exp(log_z);
  t.log_prefactor = std::log(mod.A) + std::log(params.a1) + std::log(params.a2) +
                    (1.0 / alpha - 0.5) * std::log(dk) +
                    (params.a5 + params.a4 - params.a3 + 0.5) * std::log(dl) - std::log(2.0) -
                    boost::math::lgamma(1.0 / alpha) - 0.5 * (dl - 1 + dk - 1) * std::log(2 * pi);
  return t;
}

SerEstimate ser_closed_form(const Modulation& mod, const NoiseCase& noise, const PdfParams& params,
                            double gamma_bar) {
  const ClosedFormTerms t = closed_form_terms(mod, noise, params, gamma_bar);
  return evaluate(t.spec, t.argument, t.log_prefactor, SerMethod::closed_form);
}

SerEstimate ser_special(const NoiseCase& noise, const Modulation& mod, const PdfParams& params,
                        double gamma_bar) {
  check_inputs(params, gamma_bar);
  const double a3 = params.a3, a4 = params.a4, a5 = params.a5;
  const double pi = boost::math::constants::pi<double>();
  const double base = std::log(mod.A) + std::log(params.a1) + std::log(params.a2);
  switch (noise.kind) {
    case NoiseCase::Kind::gamma_noise: {
      const double zeta = params.a2 * std::sqrt(mod.B * gamma_bar * 120.0) / 4.0;
      const specfun::MeijerGSpec spec{4, 2, {-a5, -a4, 0.5, 1.0}, {0.0, 0.5, 1.0, 1.5, -a3}};
      return evaluate(spec, zeta, base - 0.5 * std::log(pi), SerMethod::closed_form);
    }
    case NoiseCase::Kind::laplacian: {
      const double lambda = params.a2 * std::sqrt(2.0 * mod.B * gamma_bar);
      const specfun::MeijerGSpec spec{2, 2, {-a5, -a4, 1.0}, {0.0, 1.0, -a3}};
      return evaluate(spec, lambda, base - std::log(2.0), SerMethod::closed_form);
    }
    case NoiseCase::Kind::gaussian: {
      const double eta = 2.0 * params.a2 * params.a2 * mod.B * gamma_bar;
      const specfun::MeijerGSpec spec{
          2, 4, {-a5 / 2, (1 - a5) / 2, -a4 / 2, (1 - a4) / 2, 1.0}, {0.0, 0.5, -a3 / 2, (1 - a3) / 2}};
      return evaluate(spec, eta, base + (a5 + a4 - a3 - 1) * std::log(2.0) - std::log(pi),
                      SerMethod::closed_form);
    }
    case NoiseCase::Kind::general:
      break;
  }
  throw DomainError("ser_special: only the gamma, Laplacian and Gaussian cases have special forms");
}

SerEstimate ser_asymptotic(const NoiseCase& noise, const Modulation& mod, const PdfParams& params,
                           double gamma_bar) {
  check_inputs(params, gamma_bar);
  const double a3 = params.a3, a4 = params.a4, a5 = params.a5;
  const double pi = boost::math::constants::pi<double>();
  const double pre = mod.A * params.a1 * params.a2;
  // Each case sums the residues at the two leading left poles, (x, y) = (a5, a4) and (a4, a5).
  const std::pair<double, double> pairs[2] = {{a5, a4}, {a4, a5}};
  double sum = 0.0;
  double factor = 0.0;
  switch (noise.kind) {
    case NoiseCase::Kind::gamma_noise: {
      const double log_zeta = std::log(params.a2 * std::sqrt(mod.B * gamma_bar * 120.0) / 4.0);
      for (auto [x, y] : pairs) sum += gamma_ratio_term({y - x, 1 + x, 2.5 + x}, {a3 - x}, log_zeta, -x - 1);
      factor = pre / std::sqrt(pi);
      break;
    }
    case NoiseCase::Kind::laplacian: {
      const double log_lambda = std::log(params.a2 * std::sqrt(2.0 * mod.B * gamma_bar));
      for (auto [x, y] : pairs) sum += gamma_ratio_term({y - x, 1 + x}, {a3 - x}, log_lambda, -x - 1);
      factor = pre / 2.0;
      break;
    }
    case NoiseCase::Kind::gaussian: {
      const double log_eta = std::log(2.0 * params.a2 * params.a2 * mod.B * gamma_bar);
      for (auto [x, y] : pairs) {
        sum += gamma_ratio_term({-0.5, (y - x) / 2, (y - x - 1) / 2, 1 + x / 2, (x + 3) / 2},
                                {(x + 4) / 2, (a3 - x) / 2, (a3 - x - 1) / 2}, log_eta, -x / 2 - 1);
        sum += gamma_ratio_term({0.5, (y - x + 1) / 2, (y - x) / 2, 1 + x / 2, (x + 1) / 2},
                                {(x + 3) / 2, (a3 - x) / 2, (a3 - x + 1) / 2}, log_eta, -x / 2 - 0.5);
      }
      factor = pre * std::exp2(a5 + a4 - a3 - 1) / pi;
      break;
    }
    case NoiseCase::Kind::general:
      throw DomainError("ser_asymptotic: only the gamma, Laplacian and Gaussian cases have expansions");
  }
  return finish(factor * sum, SerMethod::asymptotic);
}

double diversity_asymptotic(const PdfParams& params, const NoiseCase&) {
  return std::min((params.a5 + 1) / 2, (params.a4 + 1) / 2);
}

std::vector<std::pair<double, double>> diversity_empirical(const std::vector<std::pair<double, double>>& curve) {
  if (curve.size() < 2) throw DomainError("diversity_empirical: need at least two points");
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (!(curve[i].first > 0)) throw DomainError("diversity_empirical: gamma_bar must be > 0");
    if (!(curve[i].second > 0)) throw DomainError("diversity_empirical: SER must be > 0");
    if (i > 0 && !(curve[i].first > curve[i - 1].first)) {
      throw DomainError("diversity_empirical: gamma_bar must be strictly increasing");
    }
  }
  auto slope = [&](std::size_t i, std::size_t j) {
    return -(std::log(curve[j].second) - std::log(curve[i].second)) /
           (std::log(curve[j].first) - std::log(curve[i].first));
  };
  const std::size_t n = curve.size();
  std::vector<std::pair<double, double>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i == 0 ? 0 : i - 1;
    const std::size_t hi = i + 1 == n ? n - 1 : i + 1;
    out.emplace_back(curve[i].first, slope(lo, hi));
  }
  return out;
}

}  // namespace risgg
