#include "risgg/meijer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "risgg/errors.hpp"
#include "xcomplex.hpp"

namespace risgg::specfun {
namespace {

using detail::XComplex;

constexpr double kEqualTol = 1e-13;    // parameters treated as identical
constexpr double kIntegerTol = 1e-10;  // differences treated as integers
const Extended kExtEps = std::numeric_limits<Extended>::epsilon();

bool nearly_integer(double x) { return std::abs(x - std::round(x)) <= kIntegerTol; }

// Parameters split by role in the Mellin-Barnes integrand
//   prod Gamma(bm - s) prod Gamma(1 - an + s) / [prod Gamma(1 - bq + s) prod Gamma(ap - s)].
struct Reduced {
  std::vector<double> an, ap, bm, bq;

  std::size_t m() const { return bm.size(); }
  std::size_t n() const { return an.size(); }
  std::size_t p() const { return an.size() + ap.size(); }
  std::size_t q() const { return bm.size() + bq.size(); }

  Reduced inverted() const {
    auto flip = [](const std::vector<double>& v) {
      std::vector<double> out(v.size());
      std::transform(v.begin(), v.end(), out.begin(), [](double x) { return 1.0 - x; });
      return out;
    };
    return Reduced{flip(bm), flip(bq), flip(an), flip(ap)};
  }
};

bool same(double x, double y) { return std::abs(x - y) <= kEqualTol * std::max(1.0, std::abs(x)); }

void cancel_pairs(std::vector<double>& top, std::vector<double>& bottom) {
  for (auto it = top.begin(); it != top.end();) {
    auto match = std::find_if(bottom.begin(), bottom.end(), [&](double b) { return same(*it, b); });
    if (match != bottom.end()) {
      bottom.erase(match);
      it = top.erase(it);
    } else {
      ++it;
    }
  }
}

Reduced reduce(const MeijerGSpec& spec) {
  Reduced r;
  r.an.assign(spec.a.begin(), spec.a.begin() + spec.n);
  r.ap.assign(spec.a.begin() + spec.n, spec.a.end());
  r.bm.assign(spec.b.begin(), spec.b.begin() + spec.m);
  r.bq.assign(spec.b.begin() + spec.m, spec.b.end());
  // Gamma(b - s)/Gamma(a - s) = 1 and Gamma(1 - a + s)/Gamma(1 - b + s) = 1 when a == b.
  cancel_pairs(r.ap, r.bm);
  cancel_pairs(r.an, r.bq);
  return r;
}

bool simple_poles(const std::vector<double>& params) {
  for (std::size_t i = 0; i < params.size(); ++i)
    for (std::size_t j = i + 1; j < params.size(); ++j)
      if (nearly_integer(params[i] - params[j])) return false;
  return true;
}

// log|Gamma(x)| and its sign for real Extended x. Returns nullopt at poles.
struct SignedLog {
  Extended log_abs;
  int sign;
};

std::optional<SignedLog> signed_lgamma(const Extended& x) {
  if (x <= 0 && x == floor(x)) return std::nullopt;
  if (x > 0) return SignedLog{lgamma(x), 1};
  const Extended pi = boost::math::constants::pi<Extended>();
  Extended s = sin(pi * x);
  Extended lg = log(pi) - log(abs(s)) - lgamma(1 - x);
  return SignedLog{lg, s > 0 ? 1 : -1};
}

struct SeriesResult {
  Extended value;
  std::size_t terms;
  double condition;
};

// Slater's residue sum over the poles of Gamma(bm - s), valid when they are
// simple and the hypergeometric series converge at z.
std::optional<SeriesResult> residue_series(const Reduced& r, const Extended& z, double tol) {
  const std::size_t p = r.p();
  const int sign_z = ((p - r.m() - r.n()) % 2 == 0) ? 1 : -1;
  const Extended log_z = log(z);
  std::vector<Extended> all_a, all_b;
  for (double x : r.an) all_a.emplace_back(x);
  for (double x : r.ap) all_a.emplace_back(x);
  for (double x : r.bm) all_b.emplace_back(x);
  for (double x : r.bq) all_b.emplace_back(x);

  constexpr std::size_t kMaxTerms = 20000;
  Extended total = 0;
  Extended magnitude = 0;
  std::size_t terms = 0;
  for (std::size_t h = 0; h < r.m(); ++h) {
    const Extended bh = r.bm[h];
    Extended log_c = bh * log_z;
    int sign = 1;
    bool vanishes = false;
    auto accumulate = [&](const Extended& arg, bool numerator) {
      auto lg = signed_lgamma(arg);
      if (!lg) {
        if (numerator) throw PoleCollisionError("residue series: coincident poles");
        vanishes = true;
        return;
      }
      log_c += numerator ? lg->log_abs : -lg->log_abs;
      sign *= lg->sign;
    };
    for (std::size_t j = 0; j < r.m(); ++j)
      if (j != h) accumulate(Extended(r.bm[j]) - bh, true);
    for (double a : r.an) accumulate(1 + bh - a, true);
    for (double b : r.bq) accumulate(1 + bh - b, false);
    for (double a : r.ap) accumulate(Extended(a) - bh, false);
    if (vanishes) continue;

    Extended term = 1, sum = 1, biggest = 1;
    std::size_t k = 0;
    int small_run = 0;
    for (; k < kMaxTerms; ++k) {
      Extended num = sign_z * z;
      Extended den = 1;
      for (const auto& a : all_a) num *= 1 + bh - a + k;
      for (const auto& b : all_b) den *= 1 + bh - b + k;
      term *= num / den;
      sum += term;
      biggest = std::max(biggest, abs(term));
      if (term == 0) break;
      if (abs(term) <= kExtEps * abs(sum)) {
        if (++small_run >= 3) break;
      } else {
        small_run = 0;
      }
    }
    if (k == kMaxTerms) return std::nullopt;
    terms += k + 1;
    const Extended coeff = sign * exp(log_c);
    total += coeff * sum;
    magnitude += abs(coeff) * biggest;
  }
  double condition = 1.0;
  if (total != 0) {
    condition = static_cast<double>(magnitude / abs(total));
  } else if (magnitude != 0) {
    condition = std::numeric_limits<double>::infinity();
  }
  // Rounding in the largest term must stay well inside the requested tolerance.
  if (condition * static_cast<double>(kExtEps) * 100 > tol) return std::nullopt;
  return SeriesResult{total, terms, condition};
}

bool series_converges(const Reduced& r, double z) {
  if (r.p() < r.q()) return true;
  if (r.p() == r.q()) return z < 1.0;
  return false;
}

// Rough size of the largest series term; avoids summing hopeless series.
bool series_hopeless(const Reduced& r, double z) {
  if (r.p() >= r.q()) return false;
  const double kappa = static_cast<double>(r.q() - r.p());
  return kappa * std::pow(z, 1.0 / kappa) > 70.0;
}

// -- contour quadrature -------------------------------------------------------

double envelope_lgamma(double x) {
  // log|Gamma| without the oscillating |sin(pi x)| factor for x < 1/2.
  if (x >= 0.5) return boost::math::lgamma(x);
  return std::log(boost::math::constants::pi<double>()) - boost::math::lgamma(1.0 - x);
}

double log_integrand_envelope(const Reduced& r, double c, double log_z) {
  double h = c * log_z;
  for (double b : r.bm) h += boost::math::lgamma(b - c);
  for (double a : r.an) h += boost::math::lgamma(1.0 - a + c);
  for (double b : r.bq) h -= envelope_lgamma(1.0 - b + c);
  for (double a : r.ap) h -= envelope_lgamma(a - c);
  return h;
}

// Abscissa minimizing the real-axis size of the integrand within the pole-free
// strip (left, right); near z ~ 1 this is the middle of the strip.
double choose_abscissa(const Reduced& r, double left, double right, double log_z) {
  auto h = [&](double c) { return log_integrand_envelope(r, c, log_z); };
  double lo = left, hi = right;
  if (!std::isfinite(lo) && !std::isfinite(hi)) {
    lo = -1.0;
    hi = 1.0;
  }
  if (!std::isfinite(lo)) {
    double width = 4.0;
    while (width < 1e7 && h(hi - width) < h(hi - width / 2)) width *= 2;
    lo = hi - width;
  } else if (!std::isfinite(hi)) {
    double width = 4.0;
    while (width < 1e7 && h(lo + width) < h(lo + width / 2)) width *= 2;
    hi = lo + width;
  }
  const double span = hi - lo;
  const double guard = span * 1e-9;
  lo += guard;
  hi -= guard;

  constexpr int kGrid = 64;
  int best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kGrid; ++i) {
    double c = lo + (hi - lo) * i / kGrid;
    double v = h(c);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  double a = lo + (hi - lo) * std::max(best - 1, 0) / kGrid;
  double b = lo + (hi - lo) * std::min(best + 1, kGrid) / kGrid;
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - golden * (b - a), x2 = a + golden * (b - a);
  double f1 = h(x1), f2 = h(x2);
  for (int it = 0; it < 80 && (b - a) > 1e-12 * std::max(1.0, std::abs(a)); ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - golden * (b - a);
      f1 = h(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + golden * (b - a);
      f2 = h(x2);
    }
  }
  double c = 0.5 * (a + b);
  // Keep a minimum distance from finite poles so panels stay resolvable.
  const double margin = std::isfinite(left) && std::isfinite(right) ? 1e-4 * (right - left) : 1e-4;
  if (std::isfinite(left)) c = std::max(c, left + margin);
  if (std::isfinite(right)) c = std::min(c, right - margin);
  return c;
}

// Gauss-Legendre nodes on [-1, 1], computed once in Extended precision.
struct GaussLegendre {
  static constexpr int kOrder = 20;
  std::array<Extended, kOrder> node{};
  std::array<Extended, kOrder> weight{};

  GaussLegendre() {
    const Extended pi = boost::math::constants::pi<Extended>();
    for (int i = 0; i < kOrder; ++i) {
      Extended x = cos(pi * (i + Extended(0.75)) / (kOrder + Extended(0.5)));
      Extended dp = 0;
      for (int it = 0; it < 100; ++it) {
        Extended p0 = 1, p1 = x;
        for (int k = 2; k <= kOrder; ++k) {
          Extended pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = pk;
        }
        dp = kOrder * (x * p1 - p0) / (x * x - 1);
        Extended dx = p1 / dp;
        x -= dx;
        if (abs(dx) < 4 * kExtEps) break;
      }
      node[i] = x;
      weight[i] = 2 / ((1 - x * x) * dp * dp);
    }
  }
};

const GaussLegendre& gauss_legendre() {
  static const GaussLegendre rule;
  return rule;
}

class ContourIntegrand {
public:
  ContourIntegrand(const Reduced& r, double c, const Extended& log_z) : c_(c), log_z_(log_z) {
    for (double b : r.bm) bm_.emplace_back(b);
    for (double a : r.an) an_.emplace_back(a);
    for (double b : r.bq) bq_.emplace_back(b);
    for (double a : r.ap) ap_.emplace_back(a);
  }

  // Re[Phi(c + iy) z^{c + iy}] / pi; the integrand is conjugate-symmetric in y.
  Extended operator()(const Extended& y) {
    ++evaluations_;
    using detail::xlgamma;
    XComplex log_phi{c_ * log_z_, y * log_z_};
    for (const auto& b : bm_) log_phi = log_phi + xlgamma(XComplex{b - c_, -y});
    for (const auto& a : an_) log_phi = log_phi + xlgamma(XComplex{1 - a + c_, y});
    for (const auto& b : bq_) log_phi = log_phi - xlgamma(XComplex{1 - b + c_, y});
    for (const auto& a : ap_) log_phi = log_phi - xlgamma(XComplex{a - c_, -y});
    return exp(log_phi.re) * cos(log_phi.im) / boost::math::constants::pi<Extended>();
  }

  std::size_t evaluations() const { return evaluations_; }

private:
  Extended c_;
  Extended log_z_;
  std::vector<Extended> bm_, an_, bq_, ap_;
  std::size_t evaluations_ = 0;
};

struct PanelSum {
  Extended value = 0;
  Extended abs_value = 0;
};

PanelSum gauss_panel(ContourIntegrand& f, const Extended& lo, const Extended& hi) {
  const auto& gl = gauss_legendre();
  const Extended mid = (lo + hi) / 2, half = (hi - lo) / 2;
  PanelSum out;
  for (int i = 0; i < GaussLegendre::kOrder; ++i) {
    Extended v = f(mid + half * gl.node[i]);
    out.value += gl.weight[i] * v;
    out.abs_value += gl.weight[i] * abs(v);
  }
  out.value *= half;
  out.abs_value *= half;
  return out;
}

// Recursive bisection until the panel estimate and the sum of its halves agree
// to `rel` relative to the panel's absolute mass.
PanelSum adaptive_panel(ContourIntegrand& f, const Extended& lo, const Extended& hi,
                        const PanelSum& whole, const Extended& atol, int depth) {
  const Extended mid = (lo + hi) / 2;
  PanelSum left = gauss_panel(f, lo, mid);
  PanelSum right = gauss_panel(f, mid, hi);
  PanelSum both{left.value + right.value, left.abs_value + right.abs_value};
  if (abs(both.value - whole.value) <= atol || depth >= 40) return both;
  PanelSum l = adaptive_panel(f, lo, mid, left, atol / 2, depth + 1);
  PanelSum r = adaptive_panel(f, mid, hi, right, atol / 2, depth + 1);
  return {l.value + r.value, l.abs_value + r.abs_value};
}

struct ContourResult {
  Extended value;
  std::size_t evaluations;
  double abscissa;
  double condition;
};

ContourResult contour_integral(const Reduced& r, double z, double tol) {
  const double delta = static_cast<double>(r.m() + r.n()) - 0.5 * static_cast<double>(r.p() + r.q());
  if (delta <= 0) {
    throw ConvergenceError("contour: integrand does not decay along a vertical line (m+n <= (p+q)/2)",
                           std::numeric_limits<double>::quiet_NaN(), 0.0);
  }
  double left = -std::numeric_limits<double>::infinity();
  double right = std::numeric_limits<double>::infinity();
  for (double a : r.an) left = std::max(left, a - 1.0);
  for (double b : r.bm) right = std::min(right, b);
  if (!(left < right)) {
    throw PoleCollisionError("contour: no vertical line separates the two pole families");
  }
  const double log_zd = std::log(z);
  const double c = choose_abscissa(r, left, right, log_zd);
  const double pole_gap = std::min(c - left, right - c);

  // Oscillation rate of z^{iy}, plus a bound on the Gamma phases.
  const double rate = std::abs(log_zd) + 1.0;
  const double max_width = std::max(0.5, 10.0 / rate);
  double first_width = std::min(max_width, std::isfinite(pole_gap) ? std::max(pole_gap, 1e-3) : max_width);

  auto run = [&](double panel_rel) -> ContourResult {
    ContourIntegrand f(r, c, Extended(log_zd));
    Extended sum = 0, abs_sum = 0;
    Extended y = 0;
    double width = first_width;
    int quiet_panels = 0;
    constexpr double kMaxHeight = 1e5;
    while (true) {
      const Extended hi = y + width;
      PanelSum coarse = gauss_panel(f, y, hi);
      Extended atol = Extended(panel_rel) * std::max(coarse.abs_value, abs(sum) * Extended(width));
      PanelSum panel = adaptive_panel(f, y, hi, coarse, atol, 0);
      sum += panel.value;
      abs_sum += panel.abs_value;
      y = hi;
      // Truncate once the tail mass is far below the tolerance.
      if (panel.abs_value <= Extended(tol / 20) * abs(sum) && y > 1) {
        if (++quiet_panels >= 2) break;
      } else {
        quiet_panels = 0;
      }
      if (static_cast<double>(y) > kMaxHeight) {
        throw ConvergenceError("contour: truncation height reached before the tail decayed", c,
                               static_cast<double>(y));
      }
      width = std::min(width * 1.5, max_width);
    }
    double condition = sum != 0 ? static_cast<double>(abs_sum / abs(sum))
                                : std::numeric_limits<double>::infinity();
    return {sum, f.evaluations(), c, condition};
  };

  ContourResult out = run(tol / 50);
  if (out.condition > 5.0 && std::isfinite(out.condition)) {
    ContourResult again = run(tol / (50 * out.condition));
    again.evaluations += out.evaluations;
    out = again;
  }
  if (!std::isfinite(out.condition) || out.condition * static_cast<double>(kExtEps) * 100 > tol) {
    throw ConvergenceError("contour: cancellation exceeds working precision", c,
                           static_cast<double>(out.condition));
  }
  return out;
}

}  // namespace

void MeijerGSpec::validate() const {
  if (m > q() || n > p()) throw DomainError("meijer_g: orders must satisfy 0 <= m <= q, 0 <= n <= p");
  if (p() + q() < 1) throw DomainError("meijer_g: p + q must be at least 1");
  for (double x : a)
    if (!std::isfinite(x)) throw DomainError("meijer_g: non-finite upper parameter");
  for (double x : b)
    if (!std::isfinite(x)) throw DomainError("meijer_g: non-finite lower parameter");
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < m; ++j) {
      const double d = a[i] - b[j];
      if (d > 0.5 && nearly_integer(d)) {
        throw PoleCollisionError("meijer_g: a_" + std::to_string(i + 1) + " - b_" + std::to_string(j + 1) +
                                 " is a positive integer; " + to_string());
      }
    }
  }
}

std::string MeijerGSpec::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << "G^{" << m << "," << n << "}_{" << p() << "," << q() << "}[a=(";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? ", " : "") << a[i];
  os << "); b=(";
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? ", " : "") << b[i];
  os << ")]";
  return os.str();
}

MeijerEvaluation meijer_g_eval(const MeijerGSpec& spec, double z, double tol, MeijerPath path) {
  spec.validate();
  if (!(z > 0) || !std::isfinite(z)) throw DomainError("meijer_g: argument must be finite and > 0");
  if (!(tol > 0)) throw DomainError("meijer_g: tolerance must be > 0");
  tol = std::max(tol, 1e-30);

  const Reduced direct = reduce(spec);
  const Reduced flipped = direct.inverted();

  auto try_series = [&](bool allow_inverted, bool forced) -> std::optional<MeijerEvaluation> {
    struct Candidate {
      const Reduced* r;
      double arg;
      bool inverted;
    };
    std::vector<Candidate> candidates;
    // Prefer the side whose series converges geometrically fastest.
    const bool prefer_inverse = direct.p() > direct.q() || (direct.p() == direct.q() && z > 1.0);
    if (!prefer_inverse) candidates.push_back({&direct, z, false});
    if (allow_inverted) candidates.push_back({&flipped, 1.0 / z, true});
    if (prefer_inverse) candidates.push_back({&direct, z, false});
    for (const auto& cand : candidates) {
      if (!series_converges(*cand.r, cand.arg) || !simple_poles(cand.r->bm)) continue;
      // Slow p == q series near the unit circle go to the contour instead.
      if (!forced && cand.r->p() == cand.r->q() && cand.arg > 0.7) continue;
      if (!forced && series_hopeless(*cand.r, cand.arg)) continue;
      auto s = residue_series(*cand.r, Extended(cand.arg), tol);
      if (!s) continue;
      MeijerEvaluation out;
      out.value = s->value;
      out.path = MeijerPath::residue_series;
      out.inverted = cand.inverted;
      out.abscissa = std::numeric_limits<double>::quiet_NaN();
      out.work = s->terms;
      out.condition = s->condition;
      return out;
    }
    return std::nullopt;
  };

  auto contour = [&]() {
    ContourResult c = contour_integral(direct, z, tol);
    MeijerEvaluation out;
    out.value = c.value;
    out.path = MeijerPath::contour;
    out.abscissa = c.abscissa;
    out.work = c.evaluations;
    out.condition = c.condition;
    return out;
  };

  switch (path) {
    case MeijerPath::residue_series: {
      auto s = try_series(true, true);
      if (!s) {
        throw ConvergenceError("meijer_g: residue series not applicable or ill-conditioned for " +
                                   spec.to_string(),
                               std::numeric_limits<double>::quiet_NaN(), 0.0);
      }
      return *s;
    }
    case MeijerPath::contour:
      return contour();
    case MeijerPath::automatic:
      break;
  }
  if (auto s = try_series(true, false)) return *s;
  return contour();
}

double meijer_g(const MeijerGSpec& spec, double z, double tol) {
  return static_cast<double>(meijer_g_eval(spec, z, tol).value);
}

}  // namespace risgg::specfun
