// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
//
//   risgg_acceptance [--criterion N]... [--trials T] [--threads K] [--seed S]
//
// Exits 0 when every selected criterion passes, 1 otherwise.

#include <iostream>

#include <CLI11.hpp>

#include "validation.hpp"

int main(int argc, char** argv) {
  using namespace risgg::tools;
  CLI::App app{"acceptance checks"};
  std::vector<int> ids;
  ValidationOptions opt;
  bool verbose = false;
  app.add_option("--criterion", ids, "criteria to run (default: all)")->check(CLI::Range(1, kCriteria));
  app.add_option("--trials", opt.trials, "Monte Carlo trials")->check(CLI::Range(1000ull, 1'000'000'000ull));
  app.add_option("--threads", opt.threads)->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed);
  app.add_flag("--verbose", verbose, "print measured values under each line");
  CLI11_PARSE(app, argc, argv);
  if (ids.empty())
    for (int i = 1; i <= kCriteria; ++i) ids.push_back(i);

  bool all = true;
  run_checks(ids, opt, [&](const CheckResult& r) {
    std::cout << summary_line(r) << '\n';
    // Failures always show their measurements.
    if (verbose || !r.pass)
      for (const auto& d : r.details) std::cout << "    " << d << '\n';
    std::cout.flush();
    all = all && r.pass;
  });
  return all ? 0 : 1;
}
