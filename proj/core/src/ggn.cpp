#include "risgg/ggn.hpp"

#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

#include "risgg/errors.hpp"
#include "risgg/rng.hpp"

namespace risgg {

void GgnModel::validate() const {
  if (!(alpha > 0) || !std::isfinite(alpha)) throw DomainError("GgnModel: alpha must be > 0");
  if (!(n0 > 0) || !std::isfinite(n0)) throw DomainError("GgnModel: n0 must be > 0");
}

double GgnModel::sigma() const { return std::sqrt(n0 / 2.0); }

double GgnModel::lambda() const { return lambda0(alpha) / sigma(); }

double lambda0(double alpha) {
  if (!(alpha > 0) || !std::isfinite(alpha)) throw DomainError("lambda0: alpha must be > 0");
  // Ratio via lgamma: Gamma(1/alpha) overflows for alpha below ~0.006.
  return std::exp(0.5 * (boost::math::lgamma(3.0 / alpha) - boost::math::lgamma(1.0 / alpha)));
}

double ggn_pdf(const GgnModel& model, double n) {
  model.validate();
  const double lam = model.lambda();
  const double a = model.alpha;
  const double log_norm = std::log(a * lam / 2.0) - boost::math::lgamma(1.0 / a);
  return std::exp(log_norm - std::pow(lam * std::abs(n), a));
}

GgnSampler::GgnSampler(const GgnModel& model)
    : shape_((model.validate(), 1.0 / model.alpha), 1.0),
      inv_alpha_(1.0 / model.alpha),
      inv_lambda_(1.0 / model.lambda()) {}

double GgnSampler::operator()(Philox4x32& rng) {
  const double magnitude = std::pow(shape_(rng), inv_alpha_) * inv_lambda_;
  return (rng() & 1u) ? magnitude : -magnitude;
}

std::vector<double> ggn_sample(const GgnModel& model, std::uint64_t seed, std::size_t count) {
  model.validate();
  Philox4x32 rng(seed);
  GgnSampler draw(model);
  std::vector<double> out(count);
  for (auto& v : out) v = draw(rng);
  return out;
}

}  // namespace risgg
