#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "risgg/ser.hpp"

namespace risgg::tools {

/// Bad or inconsistent configuration (exit status 2).
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Experiment { ser_curve, diversity, distance_sweep, validate };

std::string to_string(Experiment e);
Experiment parse_experiment(const std::string& name);

struct ExperimentConfig {
  Experiment experiment = Experiment::ser_curve;
  std::string modulation = "qpsk";
  std::vector<std::string> noise_cases{"gamma", "laplacian", "gaussian"};
  std::vector<unsigned> n_elements{5, 10};
  std::vector<double> snr_db;  ///< average SNR grid (ser_curve, diversity)
  std::vector<double> d1;      ///< S -> RIS distance grid (distance_sweep)
  double d_total = 5.0;
  double rho = 2.7;
  double transmit_snr_db = 20.0;
  std::uint64_t trials = 1'000'000;  ///< 0 disables the Monte Carlo columns
  std::uint64_t seed = 1;
  std::uint64_t batch_size = 1u << 15;
  unsigned threads = 1;
  bool power_law_self_test = false;  ///< diversity: replace SER by an exact power law
  double mu3_fault = 1.0;            ///< validate: factor applied to mu3 before the moment check
  std::string output;

  /// Throws ConfigError when a grid is empty or not strictly increasing, or
  /// a d1 value falls outside (0, d_total).
  void validate() const;

  Modulation parsed_modulation() const;
  std::vector<NoiseCase> parsed_noise_cases() const;

  /// The effective configuration as "key = value" lines, used for output headers.
  std::vector<std::pair<std::string, std::string>> entries() const;
};

/// Default grids and settings for one experiment.
ExperimentConfig default_config(Experiment e);

/// Applies "key = value" lines (# comments, blank lines allowed) on top of `base`.
/// Lists are comma separated; grids also accept start:step:stop.
ExperimentConfig parse_config(const std::string& text, ExperimentConfig base);

/// Reads a config file; the experiment key, if present, must match `e`.
ExperimentConfig load_config(const std::string& path, Experiment e);

NoiseCase parse_noise_case(const std::string& name);
Modulation parse_modulation(const std::string& name);

}  // namespace risgg::tools
