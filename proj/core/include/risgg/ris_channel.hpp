#pragma once

#include <cstdint>
#include <vector>

namespace risgg {

class Philox4x32;

/// Source -> RIS -> destination link with N reflecting elements and optimal
/// phase alignment. transmit_snr is 2 Ps / N0 on a linear scale.
struct RisLink {
  unsigned n_elements = 1;
  double d1 = 1.0;
  double d2 = 1.0;
  double rho = 2.7;
  double transmit_snr = 1.0;

  void validate() const;
};

/// transmit_snr / (d1^rho d2^rho).
double avg_snr(const RisLink& link);

/// gamma = z^2 avg_snr(link).
double instantaneous_snr(const RisLink& link, double z);

/// Draws of Z = sum_i |h_i| |g_i| with h_i, g_i circular complex Gaussian of
/// unit variance per real dimension (E|h|^2 = 2).
std::vector<double> sample_composite_gain(unsigned n_elements, std::uint64_t seed, std::size_t count);

/// One draw of Z from an existing stream.
double draw_composite_gain(unsigned n_elements, Philox4x32& rng);

}  // namespace risgg
