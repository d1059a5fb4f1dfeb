#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "risgg/ris_channel.hpp"
#include "risgg/ser.hpp"

namespace risgg {

/// Work is split into ceil(trials / batch_size) batches. Batch i draws from the
/// Philox stream (seed, i) and partial results are merged in batch order, so
/// the outcome does not depend on `threads`.
struct McConfig {
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  std::uint64_t batch_size = 1u << 15;
  unsigned threads = 1;

  void validate() const;
  std::uint64_t batches() const { return (trials + batch_size - 1) / batch_size; }
};

/// Mean of A Q_alpha(sqrt(B gamma)) over exact channel draws gamma = Z^2 avg_snr(link).
SerEstimate ser_semi_analytic(const RisLink& link, const Modulation& mod, double alpha, const McConfig& cfg);

/// Same estimator on a grid, reusing each channel draw for every (alpha, gamma_bar)
/// pair. Result is indexed [alpha][gamma_bar].
std::vector<std::vector<SerEstimate>> ser_semi_analytic_grid(unsigned n_elements, const Modulation& mod,
                                                             const std::vector<double>& alphas,
                                                             const std::vector<double>& gamma_bars,
                                                             const McConfig& cfg);

/// End-to-end symbol simulation for BPSK or QPSK with per-dimension threshold
/// detection. The per-dimension half distance is sqrt(B gamma) noise standard
/// deviations, matching the (A, B) constants. With no observed errors `value`
/// is 0 and `upper_bound` (also copied to std_error) is the 95% one-sided bound.
SerEstimate ser_symbol_level(const RisLink& link, const Modulation& mod, double alpha, const McConfig& cfg);

struct MomentEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
};

/// Sample moment E[Z^order], order in 1..4.
MomentEstimate moment_estimate(unsigned n_elements, int order, const McConfig& cfg);

/// All four sample moments from one set of draws.
std::array<MomentEstimate, 4> moment_estimates(unsigned n_elements, const McConfig& cfg);

}  // namespace risgg
