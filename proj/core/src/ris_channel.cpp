#include "risgg/ris_channel.hpp"

#include <cmath>

#include "risgg/errors.hpp"
#include "risgg/rng.hpp"

namespace risgg {

void RisLink::validate() const {
  if (n_elements < 1) throw DomainError("RisLink: need at least one element");
  if (!(d1 > 0) || !(d2 > 0) || !std::isfinite(d1) || !std::isfinite(d2)) {
    throw DomainError("RisLink: distances must be finite and > 0");
  }
  if (!std::isfinite(rho)) throw DomainError("RisLink: path-loss exponent must be finite");
  if (!(transmit_snr > 0) || !std::isfinite(transmit_snr)) {
    throw DomainError("RisLink: transmit SNR must be finite and > 0");
  }
}

double avg_snr(const RisLink& link) {
  link.validate();
  return link.transmit_snr / (std::pow(link.d1, link.rho) * std::pow(link.d2, link.rho));
}

double instantaneous_snr(const RisLink& link, double z) {
  if (!(z >= 0)) throw DomainError("instantaneous_snr: gain must be >= 0");
  return z * z * avg_snr(link);
}

double draw_composite_gain(unsigned n_elements, Philox4x32& rng) {
  // Rayleigh envelope with unit variance per dimension: sqrt(-2 ln U).
  double z = 0.0;
  for (unsigned i = 0; i < n_elements; ++i) {
    const double h = std::sqrt(-2.0 * std::log(rng.uniform_open()));
    const double g = std::sqrt(-2.0 * std::log(rng.uniform_open()));
    z += h * g;
  }
  return z;
}

std::vector<double> sample_composite_gain(unsigned n_elements, std::uint64_t seed, std::size_t count) {
  if (n_elements < 1) throw DomainError("sample_composite_gain: need at least one element");
  Philox4x32 rng(seed);
  std::vector<double> out(count);
  for (auto& z : out) z = draw_composite_gain(n_elements, rng);
  return out;
}

}  // namespace risgg
