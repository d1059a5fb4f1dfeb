#pragma once

#include <ostream>

#include "config.hpp"

namespace risgg::tools {

/// SER versus average SNR: closed form, asymptote and semi-analytic Monte Carlo
/// per (N, noise case, snr_db).
void run_ser_curve(const ExperimentConfig& cfg, std::ostream& out, std::ostream& log);

/// Local log-log slope of the closed-form SER against the (a5 + 1)/2 reference.
void run_diversity(const ExperimentConfig& cfg, std::ostream& out, std::ostream& log);

/// SER versus RIS position d1 with d2 = d_total - d1 at fixed transmit SNR.
void run_distance_sweep(const ExperimentConfig& cfg, std::ostream& out, std::ostream& log);

double db_to_linear(double db);

}  // namespace risgg::tools
