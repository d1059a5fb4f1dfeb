#include "risgg/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include <boost/math/special_functions/gamma.hpp>

#include "risgg/errors.hpp"
#include "risgg/ggn.hpp"
#include "risgg/rng.hpp"

namespace risgg {
namespace {

// Running mean and centered second moment (Welford), mergeable with Chan's rule.
struct Stats {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }

  void merge(const Stats& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double total = static_cast<double>(n + o.n);
    const double d = o.mean - mean;
    mean += d * static_cast<double>(o.n) / total;
    m2 += o.m2 + d * d * static_cast<double>(n) * static_cast<double>(o.n) / total;
    n += o.n;
  }

  double std_error() const {
    if (n < 2) return 0.0;
    return std::sqrt(m2 / static_cast<double>(n - 1) / static_cast<double>(n));
  }
};

std::uint64_t batch_trials(const McConfig& cfg, std::uint64_t b) {
  return std::min(cfg.batch_size, cfg.trials - b * cfg.batch_size);
}

// Runs body(batch) for every batch on up to cfg.threads workers. Each body
// writes only its own slot, so scheduling cannot affect the result.
void for_each_batch(const McConfig& cfg, const std::function<void(std::uint64_t)>& body) {
  const std::uint64_t nb = cfg.batches();
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, cfg.threads), nb));
  if (workers <= 1) {
    for (std::uint64_t b = 0; b < nb; ++b) body(b);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (std::uint64_t b = next++; b < nb; b = next++) body(b);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = nb;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// Q_alpha(x) with the normalization hoisted out of the inner loop.
struct FastQ {
  double alpha;
  double inv_alpha;
  double lambda0;

  explicit FastQ(double a) : alpha(a), inv_alpha(1.0 / a), lambda0(risgg::lambda0(a)) {}

  double operator()(double x) const {
    if (x <= 0) return 0.5;
    return 0.5 * boost::math::gamma_q(inv_alpha, std::pow(lambda0 * x, alpha));
  }
};

SerEstimate to_estimate(const Stats& s, SerMethod method) {
  SerEstimate out;
  out.method = method;
  out.raw = s.mean;
  out.value = std::clamp(s.mean, 0.0, 1.0);
  out.clamped = out.value != s.mean;
  out.std_error = s.std_error();
  out.trials = s.n;
  return out;
}

}  // namespace

void McConfig::validate() const {
  if (trials < 1) throw DomainError("McConfig: trials must be >= 1");
  if (batch_size < 1) throw DomainError("McConfig: batch_size must be >= 1");
}

std::vector<std::vector<SerEstimate>> ser_semi_analytic_grid(unsigned n_elements, const Modulation& mod,
                                                             const std::vector<double>& alphas,
                                                             const std::vector<double>& gamma_bars,
                                                             const McConfig& cfg) {
  cfg.validate();
  if (n_elements < 1) throw DomainError("ser_semi_analytic: need at least one element");
  for (double g : gamma_bars)
    if (!(g >= 0) || !std::isfinite(g)) throw DomainError("ser_semi_analytic: gamma_bar must be finite and >= 0");
  std::vector<FastQ> qs;
  for (double a : alphas) qs.emplace_back(a);
  const std::size_t na = alphas.size(), ng = gamma_bars.size();

  std::vector<std::vector<Stats>> per_batch(cfg.batches(), std::vector<Stats>(na * ng));
  for_each_batch(cfg, [&](std::uint64_t b) {
    Philox4x32 rng(cfg.seed, b);
    auto& acc = per_batch[b];
    const std::uint64_t count = batch_trials(cfg, b);
    for (std::uint64_t t = 0; t < count; ++t) {
      const double z = draw_composite_gain(n_elements, rng);
      for (std::size_t j = 0; j < ng; ++j) {
        const double x = z * std::sqrt(mod.B * gamma_bars[j]);
        for (std::size_t i = 0; i < na; ++i) acc[i * ng + j].add(std::min(1.0, mod.A * qs[i](x)));
      }
    }
  });

  std::vector<std::vector<SerEstimate>> out(na, std::vector<SerEstimate>(ng));
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < ng; ++j) {
      Stats total;
      for (const auto& batch : per_batch) total.merge(batch[i * ng + j]);
      out[i][j] = to_estimate(total, SerMethod::semi_analytic_mc);
    }
  }
  return out;
}

SerEstimate ser_semi_analytic(const RisLink& link, const Modulation& mod, double alpha, const McConfig& cfg) {
  return ser_semi_analytic_grid(link.n_elements, mod, {alpha}, {avg_snr(link)}, cfg)[0][0];
}

SerEstimate ser_symbol_level(const RisLink& link, const Modulation& mod, double alpha, const McConfig& cfg) {
  cfg.validate();
  unsigned dims = 0;
  if (mod.kind == Modulation::Kind::bpsk) dims = 1;
  if (mod.kind == Modulation::Kind::qpsk) dims = 2;
  if (dims == 0) throw DomainError("ser_symbol_level: only BPSK and QPSK are supported");
  const double scale = std::sqrt(mod.B * avg_snr(link));
  // Unit-variance noise per dimension; distances are in noise standard deviations.
  const GgnModel noise{alpha, 2.0};
  noise.validate();

  std::vector<std::uint64_t> errors(cfg.batches(), 0);
  for_each_batch(cfg, [&](std::uint64_t b) {
    Philox4x32 rng(cfg.seed, b);
    GgnSampler draw(noise);
    std::uint64_t count = 0;
    const std::uint64_t trials = batch_trials(cfg, b);
    for (std::uint64_t t = 0; t < trials; ++t) {
      const double d = scale * draw_composite_gain(link.n_elements, rng);
      // By symmetry the transmitted point sits at +d on every dimension.
      bool wrong = false;
      for (unsigned k = 0; k < dims; ++k) wrong |= (d + draw(rng) < 0.0);
      count += wrong;
    }
    errors[b] = count;
  });

  std::uint64_t total = 0;
  for (auto e : errors) total += e;
  const double n = static_cast<double>(cfg.trials);
  const double p = static_cast<double>(total) / n;
  SerEstimate out;
  out.method = SerMethod::symbol_level_mc;
  out.trials = cfg.trials;
  out.value = p;
  out.raw = p;
  out.std_error = std::sqrt(p * (1 - p) / n);
  if (total == 0) {
    out.upper_bound = 1.0 - std::pow(0.05, 1.0 / n);
    out.std_error = out.upper_bound;
  } else {
    out.upper_bound = p + 1.6448536269514722 * out.std_error;
  }
  return out;
}

std::array<MomentEstimate, 4> moment_estimates(unsigned n_elements, const McConfig& cfg) {
  cfg.validate();
  if (n_elements < 1) throw DomainError("moment_estimate: need at least one element");
  std::vector<std::array<Stats, 4>> per_batch(cfg.batches());
  for_each_batch(cfg, [&](std::uint64_t b) {
    Philox4x32 rng(cfg.seed, b);
    auto& acc = per_batch[b];
    const std::uint64_t count = batch_trials(cfg, b);
    for (std::uint64_t t = 0; t < count; ++t) {
      const double z = draw_composite_gain(n_elements, rng);
      double power = z;
      for (auto& s : acc) {
        s.add(power);
        power *= z;
      }
    }
  });
  std::array<MomentEstimate, 4> out;
  for (int r = 0; r < 4; ++r) {
    Stats total;
    for (const auto& batch : per_batch) total.merge(batch[r]);
    out[r] = {total.mean, total.std_error(), total.n};
  }
  return out;
}

MomentEstimate moment_estimate(unsigned n_elements, int order, const McConfig& cfg) {
  if (order < 1 || order > 4) throw DomainError("moment_estimate: order must be 1..4");
  return moment_estimates(n_elements, cfg)[order - 1];
}

}  // namespace risgg
