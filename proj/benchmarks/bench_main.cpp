#include <benchmark/benchmark.h>

#include "risgg/meijer.hpp"
#include "risgg/montecarlo.hpp"
#include "risgg/ser.hpp"
#include "risgg/snr_stats.hpp"
#include "risgg/specfun.hpp"

using namespace risgg;

namespace {

void BM_GeneralizedQ(benchmark::State& st) {
  double x = 0.1;
  for (auto _ : st) {
    benchmark::DoNotOptimize(specfun::generalized_q(0.5, x));
    x = x < 5 ? x + 0.01 : 0.1;
  }
}
BENCHMARK(BM_GeneralizedQ);

void BM_GeneralizedQMeijer(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(specfun::generalized_q_meijer(1, 2, 2.0));
}
BENCHMARK(BM_GeneralizedQMeijer);

void BM_MeijerSeries(benchmark::State& st) {
  const specfun::MeijerGSpec s{2, 1, {0.25, 0.5}, {0.0, 0.75, -0.3}};
  for (auto _ : st)
    benchmark::DoNotOptimize(specfun::meijer_g_eval(s, 1.0, 1e-12, specfun::MeijerPath::residue_series).value);
}
BENCHMARK(BM_MeijerSeries);

void BM_MeijerContour(benchmark::State& st) {
  const specfun::MeijerGSpec s{2, 1, {0.25, 0.5}, {0.0, 0.75, -0.3}};
  for (auto _ : st)
    benchmark::DoNotOptimize(specfun::meijer_g_eval(s, 1.0, 1e-12, specfun::MeijerPath::contour).value);
}
BENCHMARK(BM_MeijerContour)->Unit(benchmark::kMillisecond);

void BM_FitParams(benchmark::State& st) {
  const MomentSet m = moments(static_cast<unsigned>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(fit_pdf_params(m).a1);
}
BENCHMARK(BM_FitParams)->Arg(5)->Arg(50);

// Closed-form SER, QPSK, N = 5; argument is the SNR in dB.
void BM_SerClosedForm(benchmark::State& st, NoiseCase nc) {
  const PdfParams p = fit_pdf_params(moments(5));
  const double g = std::pow(10.0, static_cast<double>(st.range(0)) / 10.0);
  for (auto _ : st) benchmark::DoNotOptimize(ser_closed_form(Modulation::qpsk(), nc, p, g).value);
}
BENCHMARK_CAPTURE(BM_SerClosedForm, gamma, NoiseCase::gamma_noise())->Arg(0)->Arg(30)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_SerClosedForm, laplacian, NoiseCase::laplacian())->Arg(0)->Arg(30)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_SerClosedForm, gaussian, NoiseCase::gaussian())->Arg(0)->Arg(30)->Unit(benchmark::kMicrosecond);

void BM_MonteCarloGrid(benchmark::State& st) {
  McConfig cfg{100000, 1, 1u << 14, static_cast<unsigned>(st.range(0))};
  const std::vector<double> alphas{0.5, 1.0, 2.0};
  std::vector<double> gbars;
  for (int d = 0; d <= 20; ++d) gbars.push_back(std::pow(10.0, d / 10.0));
  for (auto _ : st)
    benchmark::DoNotOptimize(ser_semi_analytic_grid(5, Modulation::qpsk(), alphas, gbars, cfg).front().front().value);
  st.SetItemsProcessed(static_cast<int64_t>(st.iterations() * cfg.trials));
}
BENCHMARK(BM_MonteCarloGrid)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
