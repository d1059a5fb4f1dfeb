#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace risgg::tools {

struct ValidationOptions {
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  std::uint64_t batch_size = 1u << 15;
  unsigned threads = 1;
  /// Multiplies the closed-form mu3 before the moment check (fault injection).
  double mu3_fault = 1.0;
};

struct CheckResult {
  int id = 0;
  std::string title;
  bool pass = false;
  /// Measured values, one per line; deterministic for a given seed.
  std::vector<std::string> details;
  double seconds = 0.0;
};

inline constexpr int kCriteria = 10;

/// Runs acceptance criterion `id` (1..10).
CheckResult run_check(int id, const ValidationOptions& opt);

/// Runs the listed criteria in order, reporting each as it finishes.
std::vector<CheckResult> run_checks(const std::vector<int>& ids, const ValidationOptions& opt,
                                    const std::function<void(const CheckResult&)>& on_done = {});

/// Report text without timings, so equal inputs give byte-identical reports.
std::string format_report(const std::vector<CheckResult>& results, const ValidationOptions& opt);

/// "[PASS] 3  moment formulas vs Monte Carlo (12.3 s)".
std::string summary_line(const CheckResult& r);

}  // namespace risgg::tools
