#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace risgg {

class Philox4x32;

/// Zero-mean generalized Gaussian noise with shape alpha and variance n0/2.
struct GgnModel {
  double alpha = 2.0;
  double n0 = 2.0;

  void validate() const;
  /// Standard deviation sqrt(n0/2).
  double sigma() const;
  /// Lambda = Lambda0(alpha) / sigma, the scale inside exp(-Lambda^alpha |n|^alpha).
  double lambda() const;
};

/// sqrt(Gamma(3/alpha) / Gamma(1/alpha)); makes the density unit-variance at Lambda = Lambda0.
double lambda0(double alpha);

double ggn_pdf(const GgnModel& model, double n);

/// `count` i.i.d. draws using the gamma transform |n| = G^{1/alpha} / Lambda,
/// G ~ Gamma(1/alpha, 1), with an independent fair sign.
std::vector<double> ggn_sample(const GgnModel& model, std::uint64_t seed, std::size_t count);

/// Reusable sampler with the model constants precomputed. Holds distribution
/// state (the gamma sampler caches normals), so use one instance per stream.
class GgnSampler {
public:
  explicit GgnSampler(const GgnModel& model);
  double operator()(Philox4x32& rng);

private:
  std::gamma_distribution<double> shape_;
  double inv_alpha_;
  double inv_lambda_;
};

namespace presets {
inline GgnModel gamma_noise(double n0 = 2.0) { return {0.5, n0}; }
inline GgnModel laplacian(double n0 = 2.0) { return {1.0, n0}; }
inline GgnModel gaussian(double n0 = 2.0) { return {2.0, n0}; }
}  // namespace presets

}  // namespace risgg
