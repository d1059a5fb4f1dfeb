// risgg: SER curves, diversity slopes, distance sweeps and the validation suite.
//
// Exit status: 0 success, 1 a validation criterion failed, 2 configuration or
// I/O problem, 3 numerical engine error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "config.hpp"
#include "experiments.hpp"
#include "risgg/errors.hpp"
#include "validation.hpp"

namespace {

using namespace risgg::tools;

struct Overrides {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed, trials;
  std::optional<unsigned> threads;
  std::vector<int> criteria;
};

void add_common(CLI::App* sub, Overrides& o) {
  sub->add_option("--config", o.config, "key = value configuration file");
  sub->add_option("--out", o.out, "output file (default: stdout)");
  sub->add_option("--seed", o.seed, "random seed");
  sub->add_option("--trials", o.trials, "Monte Carlo trials (0 disables Monte Carlo where allowed)");
  sub->add_option("--threads", o.threads, "worker threads; results do not depend on it")->check(CLI::PositiveNumber);
}

ExperimentConfig resolve(Experiment e, const Overrides& o) {
  ExperimentConfig cfg = o.config.empty() ? default_config(e) : load_config(o.config, e);
  if (o.seed) cfg.seed = *o.seed;
  if (o.trials) cfg.trials = *o.trials;
  if (o.threads) cfg.threads = *o.threads;
  if (!o.out.empty()) cfg.output = o.out;
  cfg.validate();
  return cfg;
}

// Writes to cfg.output, or stdout when it is empty.
void emit(const ExperimentConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw ConfigError("cannot open output file '" + cfg.output + "'");
  f << text;
  if (!f.flush()) throw ConfigError("write failed for '" + cfg.output + "'");
}

int run_experiment(Experiment e, const Overrides& o) {
  const ExperimentConfig cfg = resolve(e, o);
  std::ostringstream table;
  switch (e) {
    case Experiment::ser_curve: run_ser_curve(cfg, table, std::cerr); break;
    case Experiment::diversity: run_diversity(cfg, table, std::cerr); break;
    case Experiment::distance_sweep: run_distance_sweep(cfg, table, std::cerr); break;
    case Experiment::validate: break;
  }
  emit(cfg, table.str());
  return 0;
}

int run_validate(const Overrides& o) {
  const ExperimentConfig cfg = resolve(Experiment::validate, o);
  ValidationOptions opt;
  opt.trials = cfg.trials;
  opt.seed = cfg.seed;
  opt.batch_size = cfg.batch_size;
  opt.threads = cfg.threads;
  opt.mu3_fault = cfg.mu3_fault;

  std::vector<int> ids = o.criteria;
  if (ids.empty())
    for (int i = 1; i <= kCriteria; ++i) ids.push_back(i);
  const auto results = run_checks(ids, opt, [](const CheckResult& r) { std::cerr << summary_line(r) << std::endl; });
  emit(cfg, format_report(results, opt));
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  return all ? 0 : 1;
}

bool is_engine_error(const std::exception& e) {
  return dynamic_cast<const risgg::ConvergenceError*>(&e) || dynamic_cast<const risgg::PoleCollisionError*>(&e) ||
         dynamic_cast<const risgg::DegenerateFitError*>(&e) || dynamic_cast<const risgg::EngineOrderError*>(&e) ||
         dynamic_cast<const risgg::PoleError*>(&e) || dynamic_cast<const risgg::DomainError*>(&e);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SER analysis of RIS-assisted links under generalized Gaussian noise"};
  app.require_subcommand(1);
  Overrides o;
  auto* ser = app.add_subcommand("ser-curve", "SER versus average SNR");
  auto* div = app.add_subcommand("diversity", "local log-log slope of SER");
  auto* dist = app.add_subcommand("distance-sweep", "SER versus RIS position");
  auto* val = app.add_subcommand("validate", "run the acceptance checks");
  for (auto* s : {ser, div, dist, val}) add_common(s, o);
  val->add_option("--criterion", o.criteria, "run only these criteria (1..10)")->check(CLI::Range(1, kCriteria));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*ser) return run_experiment(Experiment::ser_curve, o);
    if (*div) return run_experiment(Experiment::diversity, o);
    if (*dist) return run_experiment(Experiment::distance_sweep, o);
    return run_validate(o);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    const bool engine = is_engine_error(e);
    std::cerr << (engine ? "engine error: " : "error: ") << e.what() << '\n';
    return engine ? 3 : 2;
  }
}
