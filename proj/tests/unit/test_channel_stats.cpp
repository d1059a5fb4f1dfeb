#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "risgg/errors.hpp"
#include "risgg/ris_channel.hpp"
#include "risgg/snr_stats.hpp"
#include "risgg/specfun.hpp"

using namespace risgg;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_SUITE("ris_channel") {
  TEST_CASE("average SNR follows the product path loss") {
    const RisLink link{8, 2.0, 3.0, 2.7, 100.0};
    CHECK(avg_snr(link) == doctest::Approx(100.0 / std::pow(6.0, 2.7)).epsilon(1e-14));
    CHECK(instantaneous_snr(link, 2.0) == doctest::Approx(4 * avg_snr(link)).epsilon(1e-14));
    CHECK_THROWS_AS((RisLink{0, 1, 1, 2, 1}.validate()), DomainError);
    CHECK_THROWS_AS((RisLink{1, -1, 1, 2, 1}.validate()), DomainError);
    CHECK_THROWS_AS(instantaneous_snr(link, -1.0), DomainError);
  }

  TEST_CASE("composite gain sample moments match the exact moments") {
    const std::size_t n = 400000;
    for (unsigned elements : {1u, 3u, 6u}) {
      const auto z = sample_composite_gain(elements, 11, n);
      CHECK(z == sample_composite_gain(elements, 11, n));
      const MomentSet m = moments(elements);
      for (int order = 1; order <= 2; ++order) {
        double s = 0, s2 = 0;
        for (double v : z) {
          const double p = std::pow(v, order);
          s += p;
          s2 += p * p;
        }
        const double mean = s / n, se = std::sqrt((s2 / n - mean * mean) / n);
        CAPTURE(elements);
        CAPTURE(order);
        CHECK(std::abs(mean - m.mu(order)) < 4 * se);
      }
    }
  }
}

TEST_SUITE("snr_stats") {
  TEST_CASE("moments of the small-N branches") {
    const double pi = M_PI;
    const MomentSet one = moments(1);
    CHECK(one.mu1 == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(one.mu2 == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(one.mu3 == doctest::Approx(9 * pi / 2).epsilon(1e-15));
    CHECK(one.mu4 == doctest::Approx(64.0).epsilon(1e-15));
    const MomentSet two = moments(2);
    CHECK(two.mu3 == doctest::Approx(21 * pi).epsilon(1e-15));
    CHECK(two.mu4 == doctest::Approx(224 + 18 * pi * pi).epsilon(1e-15));
    CHECK(moments(3).mu4 == doctest::Approx(480 + 90 * pi * pi).epsilon(1e-15));
    CHECK(moments(7).mu1 == doctest::Approx(7 * pi / 2).epsilon(1e-15));
    CHECK_THROWS_AS(moments(0), DomainError);
    for (unsigned n = 1; n <= 60; ++n) CHECK_NOTHROW(moments(n).validate());
  }

  TEST_CASE("fit parameters against frozen values") {
    for (const auto& f : oracle::kFits) {
      const PdfParams p = fit_pdf_params(moments(f.n));
      CAPTURE(f.n);
      CHECK(rel(p.a1, f.a1) < 1e-11);
      CHECK(rel(p.a2, f.a2) < 1e-12);
      CHECK(rel(p.a3, f.a3) < 1e-12);
      CHECK(rel(p.a4, f.a4) < 1e-12);
      CHECK(rel(p.a5, f.a5) < 1e-12);
    }
  }

  TEST_CASE("fit invariants") {
    for (unsigned n : {4u, 5u, 8u, 10u, 20u, 50u}) {
      const MomentSet m = moments(n);
      const PdfParams p = fit_pdf_params(m);
      CAPTURE(n);
      CHECK(p.a5 <= p.a4);
      CHECK(p.a2 > 0);
      // Unit mass: a1 a2 Gamma(a4+1) Gamma(a5+1) = Gamma(a3+1)
      const double lhs = std::log(p.a1 * p.a2) + specfun::ln_gamma(p.a4 + 1) + specfun::ln_gamma(p.a5 + 1);
      CHECK(lhs == doctest::Approx(specfun::ln_gamma(p.a3 + 1)).epsilon(1e-12));
      for (int r = 1; r <= 4; ++r) CHECK(rel(fitted_gain_moment(p, r), m.mu(r)) < 1e-10);
    }
  }

  TEST_CASE("the fit is degenerate for N <= 3") {
    for (unsigned n : {1u, 2u, 3u}) CHECK_THROWS_AS(fit_pdf_params(moments(n)), DegenerateFitError);
  }

  TEST_CASE("distribution function against frozen values") {
    for (const auto& c : oracle::kCdf) {
      const PdfParams p = fit_pdf_params(moments(c.n));
      CAPTURE(c.n);
      CAPTURE(c.x);
      // gamma / gamma_bar = x^2
      CHECK(rel(snr_cdf(p, c.x * c.x * 3.0, 3.0), c.value) < 1e-9);
    }
  }

  TEST_CASE("density and distribution are consistent") {
    const PdfParams p = fit_pdf_params(moments(5));
    CHECK(snr_pdf(p, 0.0, 1.0) == 0.0);
    CHECK(snr_cdf(p, 0.0, 1.0) == 0.0);
    // dF/dgamma = f(gamma) by a centered difference
    const double g = 50.0, h = 1e-3;
    const double slope = (snr_cdf(p, g + h, 1.0) - snr_cdf(p, g - h, 1.0)) / (2 * h);
    CHECK(rel(slope, snr_pdf(p, g, 1.0)) < 1e-6);
    // X density and gamma density are related by the change of variables gamma = x^2
    CHECK(rel(fitted_gain_pdf(p, 7.0), 2 * 7.0 * snr_pdf(p, 49.0, 1.0)) < 1e-12);
    CHECK_THROWS_AS(snr_pdf(p, -1.0, 1.0), DomainError);
    CHECK_THROWS_AS(snr_cdf(p, 1.0, 0.0), DomainError);
  }
}
