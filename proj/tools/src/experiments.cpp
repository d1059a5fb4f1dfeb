#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "format.hpp"
#include "risgg/errors.hpp"
#include "risgg/montecarlo.hpp"

namespace risgg::tools {
namespace {

const double kNaN = std::numeric_limits<double>::quiet_NaN();

McConfig mc_config(const ExperimentConfig& cfg) {
  McConfig mc;
  mc.trials = cfg.trials;
  mc.seed = cfg.seed;
  mc.batch_size = cfg.batch_size;
  mc.threads = cfg.threads;
  return mc;
}

std::vector<double> alphas_of(const std::vector<NoiseCase>& cases) {
  std::vector<double> out;
  for (const auto& c : cases) out.push_back(c.alpha());
  return out;
}

bool has_expansion(const NoiseCase& c) { return c.kind != NoiseCase::Kind::general; }

}  // namespace

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

void run_ser_curve(const ExperimentConfig& cfg, std::ostream& out, std::ostream& log) {
  cfg.validate();
  const Modulation mod = cfg.parsed_modulation();
  const auto cases = cfg.parsed_noise_cases();
  std::vector<double> gamma_bars;
  for (double db : cfg.snr_db) gamma_bars.push_back(db_to_linear(db));

  TableWriter table(out, cfg.entries(),
                    {"n_elements", "noise", "alpha", "snr_db", "gamma_bar", "closed_form", "clamped", "asymptotic",
                     "mc_value", "mc_std_error", "mc_trials", "seed"});
  for (unsigned n : cfg.n_elements) {
    const PdfParams params = fit_pdf_params(moments(n));
    log << "N=" << n << ": " << params.to_string() << '\n';
    std::vector<std::vector<SerEstimate>> mc;
    if (cfg.trials > 0) mc = ser_semi_analytic_grid(n, mod, alphas_of(cases), gamma_bars, mc_config(cfg));
    for (std::size_t c = 0; c < cases.size(); ++c) {
      for (std::size_t j = 0; j < gamma_bars.size(); ++j) {
        const SerEstimate cf = ser_closed_form(mod, cases[c], params, gamma_bars[j]);
        double asym = kNaN;
        if (has_expansion(cases[c])) {
          try {
            asym = ser_asymptotic(cases[c], mod, params, gamma_bars[j]).raw;
          } catch (const PoleError& e) {
            log << "asymptote skipped: " << e.what() << '\n';
          }
        }
        const bool with_mc = !mc.empty();
        table.row({std::to_string(n), cases[c].name(), fmt(cases[c].alpha()), fmt(cfg.snr_db[j]), fmt(gamma_bars[j]),
                   fmt(cf.value), cf.clamped ? "1" : "0", fmt(asym), with_mc ? fmt(mc[c][j].value) : "nan",
                   with_mc ? fmt(mc[c][j].std_error) : "nan", with_mc ? std::to_string(mc[c][j].trials) : "0",
                   std::to_string(cfg.seed)});
      }
    }
  }
}

void run_diversity(const ExperimentConfig& cfg, std::ostream& out, std::ostream& log) {
  cfg.validate();
  const Modulation mod = cfg.parsed_modulation();
  const auto cases = cfg.parsed_noise_cases();
  std::vector<double> gamma_bars;
  for (double db : cfg.snr_db) gamma_bars.push_back(db_to_linear(db));

  TableWriter table(out, cfg.entries(),
                    {"n_elements", "noise", "alpha", "snr_db", "gamma_bar", "method", "ser", "slope", "reference"});
  // Per N: spread of the slopes across noise cases at the first and last grid points.
  std::vector<std::string> summary;
  for (unsigned n : cfg.n_elements) {
    const PdfParams params = fit_pdf_params(moments(n));
    std::vector<double> first, last;
    for (const auto& nc : cases) {
      const double reference = diversity_asymptotic(params, nc);
      std::vector<std::pair<double, double>> curve;
      for (double g : gamma_bars) {
        const double ser = cfg.power_law_self_test ? std::pow(g, -reference)
                                                   : ser_closed_form(mod, nc, params, g).value;
        curve.emplace_back(g, ser);
      }
      const auto slopes = diversity_empirical(curve);
      for (std::size_t j = 0; j < curve.size(); ++j) {
        table.row({std::to_string(n), nc.name(), fmt(nc.alpha()), fmt(cfg.snr_db[j]), fmt(gamma_bars[j]),
                   cfg.power_law_self_test ? "power_law" : "closed_form", fmt(curve[j].second),
                   fmt(slopes[j].second), fmt(reference)});
      }
      first.push_back(slopes.front().second);
      last.push_back(slopes.back().second);
    }
    auto spread = [](const std::vector<double>& v) {
      const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
      double mean = 0;
      for (double x : v) mean += x;
      mean /= static_cast<double>(v.size());
      return (*hi - *lo) / mean;
    };
    summary.push_back("N=" + std::to_string(n) + " relative slope spread across noise cases: " +
                      fmt(cfg.snr_db.front()) + " dB " + fmt(spread(first)) + ", " + fmt(cfg.snr_db.back()) +
                      " dB " + fmt(spread(last)));
  }
  for (const auto& s : summary) {
    out << "# summary: " << s << '\n';
    log << s << '\n';
  }
}

void run_distance_sweep(const ExperimentConfig& cfg, std::ostream& out, std::ostream& log) {
  cfg.validate();
  const Modulation mod = cfg.parsed_modulation();
  const auto cases = cfg.parsed_noise_cases();
  const double transmit = db_to_linear(cfg.transmit_snr_db);
  std::vector<double> gamma_bars;
  for (double d : cfg.d1) gamma_bars.push_back(avg_snr(RisLink{1, d, cfg.d_total - d, cfg.rho, transmit}));

  TableWriter table(out, cfg.entries(),
                    {"n_elements", "noise", "alpha", "d1", "d2", "gamma_bar", "closed_form", "clamped", "mc_value",
                     "mc_std_error", "mc_trials", "seed"});
  for (unsigned n : cfg.n_elements) {
    const PdfParams params = fit_pdf_params(moments(n));
    std::vector<std::vector<SerEstimate>> mc;
    if (cfg.trials > 0) mc = ser_semi_analytic_grid(n, mod, alphas_of(cases), gamma_bars, mc_config(cfg));
    for (std::size_t c = 0; c < cases.size(); ++c) {
      std::size_t worst = 0;
      double worst_ser = -1;
      for (std::size_t j = 0; j < cfg.d1.size(); ++j) {
        const SerEstimate cf = ser_closed_form(mod, cases[c], params, gamma_bars[j]);
        if (cf.value > worst_ser) {
          worst_ser = cf.value;
          worst = j;
        }
        const bool with_mc = !mc.empty();
        table.row({std::to_string(n), cases[c].name(), fmt(cases[c].alpha()), fmt(cfg.d1[j]),
                   fmt(cfg.d_total - cfg.d1[j]), fmt(gamma_bars[j]), fmt(cf.value), cf.clamped ? "1" : "0",
                   with_mc ? fmt(mc[c][j].value) : "nan", with_mc ? fmt(mc[c][j].std_error) : "nan",
                   with_mc ? std::to_string(mc[c][j].trials) : "0", std::to_string(cfg.seed)});
      }
      log << "N=" << n << " " << cases[c].name() << ": worst d1 = " << fmt(cfg.d1[worst]) << '\n';
    }
  }
}

}  // namespace risgg::tools
