#include <doctest.h>

#include <cmath>

#include <boost/math/special_functions/bessel.hpp>

#include "oracles.hpp"
#include "risgg/errors.hpp"
#include "risgg/meijer.hpp"
#include "risgg/specfun.hpp"

using namespace risgg;
using namespace risgg::specfun;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_SUITE("specfun") {
  TEST_CASE("ln_gamma matches known values and rejects the poles") {
    CHECK(ln_gamma(1.0) == doctest::Approx(0.0));
    CHECK(ln_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-15));
    CHECK(ln_gamma(10.0) == doctest::Approx(std::log(362880.0)).epsilon(1e-15));
    CHECK_THROWS_AS(ln_gamma(0.0), DomainError);
    CHECK_THROWS_AS(ln_gamma(-1.5), DomainError);
  }

  TEST_CASE("generalized Q against frozen values") {
    for (const auto& q : oracle::kQ) {
      CAPTURE(q.alpha);
      CAPTURE(q.x);
      CHECK(rel(generalized_q(q.alpha, q.x), q.value) < 1e-13);
      CHECK(rel(generalized_q_quadrature(q.alpha, q.x), q.value) < 1e-10);
    }
  }

  TEST_CASE("generalized Q reduces to the Laplacian and Gaussian tails") {
    for (double x = 0; x <= 6; x += 0.5) {
      CHECK(rel(generalized_q(1.0, x), 0.5 * std::exp(-std::sqrt(2.0) * x)) < 1e-13);
      CHECK(rel(generalized_q(2.0, x), 0.5 * std::erfc(x / std::sqrt(2.0))) < 1e-13);
    }
    CHECK(generalized_q(0.5, 0.0) == 0.5);
  }

  TEST_CASE("Meijer form of Q agrees with the incomplete gamma path") {
    const std::pair<unsigned, unsigned> lk[] = {{1, 2}, {1, 1}, {2, 1}, {1, 3}, {3, 2}};
    for (auto [l, k] : lk) {
      const double alpha = static_cast<double>(l) / k;
      for (double x : {0.0, 0.1, 1.0, 2.5, 5.0}) {
        CAPTURE(alpha);
        CAPTURE(x);
        CHECK(rel(generalized_q_meijer(l, k, x), generalized_q(alpha, x)) < 1e-10);
      }
    }
    CHECK_THROWS_AS(generalized_q_meijer(2, 4, 1.0), DomainError);
  }

  TEST_CASE("generalized Q input checks") {
    CHECK_THROWS_AS(generalized_q(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(generalized_q(1.0, -0.1), DomainError);
  }
}

TEST_SUITE("meijer") {
  TEST_CASE("elementary reductions at z = 0.1, 1, 10") {
    for (double z : oracle::kZ) {
      CAPTURE(z);
      // G^{1,0}_{0,1}[z | ; 0] = exp(-z)
      CHECK(rel(meijer_g({1, 0, {}, {0.0}}, z), std::exp(-z)) < 1e-12);
      // G^{1,1}_{1,1}[z | 0; 0] = 1/(1+z)
      CHECK(rel(meijer_g({1, 1, {0.0}, {0.0}}, z), 1.0 / (1.0 + z)) < 1e-12);
      // G^{1,2}_{2,2}[z | 1, 1; 1, 0] = ln(1+z)
      CHECK(rel(meijer_g({1, 2, {1.0, 1.0}, {1.0, 0.0}}, z), std::log1p(z)) < 1e-12);
      // G^{2,0}_{0,2}[z | ; a, b] = 2 z^{(a+b)/2} K_{a-b}(2 sqrt z)
      const double a = 0.7, b = 0.2;
      const double k = 2 * std::pow(z, (a + b) / 2) * boost::math::cyl_bessel_k(a - b, 2 * std::sqrt(z));
      CHECK(rel(meijer_g({2, 0, {}, {a, b}}, z), k) < 1e-12);
    }
  }

  TEST_CASE("generic instances against frozen values") {
    for (std::size_t i = 0; i < oracle::kZ.size(); ++i) {
      const double z = oracle::kZ[i];
      CAPTURE(z);
      CHECK(rel(meijer_g({2, 1, {0.25, 0.5}, {0.0, 0.75, -0.3}}, z), oracle::kMeijerA[i]) < 1e-11);
      CHECK(rel(meijer_g({2, 2, {-4.5, -3.2, 1.0}, {0.0, 0.5, -1.7}}, z), oracle::kMeijerB[i]) < 1e-10);
      CHECK(rel(meijer_g({2, 0, {1.0}, {0.0, 2.0}}, z), oracle::kMeijerC[i]) < 1e-11);
    }
  }

  TEST_CASE("residue series and contour agree") {
    const MeijerGSpec specs[] = {
        {2, 1, {0.25, 0.5}, {0.0, 0.75, -0.3}},
        {2, 0, {1.0}, {0.0, 0.5}},
        {1, 1, {0.0}, {0.0}},
        {2, 0, {}, {0.7, 0.2}},
    };
    for (const auto& s : specs) {
      for (double z : {0.1, 0.5, 2.0}) {
        CAPTURE(s.to_string());
        CAPTURE(z);
        const auto series = meijer_g_eval(s, z, 1e-12, MeijerPath::residue_series);
        const auto contour = meijer_g_eval(s, z, 1e-12, MeijerPath::contour);
        CHECK(series.path == MeijerPath::residue_series);
        CHECK(contour.path == MeijerPath::contour);
        CHECK(rel(static_cast<double>(series.value), static_cast<double>(contour.value)) < 1e-8);
      }
    }
  }

  TEST_CASE("large argument uses a stable path") {
    // Gamma(2, z) = (1 + z) exp(-z)
    for (double z : {30.0, 60.0}) {
      const double expect = (1 + z) * std::exp(-z);
      CHECK(rel(meijer_g({2, 0, {1.0}, {0.0, 2.0}}, z), expect) < 1e-10);
    }
  }

  TEST_CASE("cancelling parameter pairs are removed") {
    // In G^{1,2}_{2,2}[z | 0, 0.4; 0, 0.4] the factors Gamma(0.6 + s) and
    // 1/Gamma(0.6 + s) cancel, leaving G^{1,1}_{1,1}[z | 0; 0] = 1/(1+z).
    const auto e = meijer_g_eval({1, 2, {0.0, 0.4}, {0.0, 0.4}}, 0.5);
    CHECK(rel(static_cast<double>(e.value), 1.0 / 1.5) < 1e-12);
  }

  TEST_CASE("invalid specifications are rejected") {
    CHECK_THROWS_AS(meijer_g({3, 0, {}, {0.0, 1.0}}, 1.0), DomainError);
    CHECK_THROWS_AS(meijer_g({0, 0, {}, {}}, 1.0), DomainError);
    CHECK_THROWS_AS(meijer_g({1, 0, {}, {0.0}}, -1.0), DomainError);
    // a_1 - b_1 = 1 puts a left pole on a right pole.
    CHECK_THROWS_AS(meijer_g({1, 1, {1.0}, {0.0}}, 1.0), PoleCollisionError);
    // m + n = (p + q)/2: the Mellin-Barnes integrand does not decay, so a forced contour fails.
    CHECK_THROWS_AS(meijer_g_eval({1, 0, {0.5}, {0.0}}, 2.0, 1e-12, MeijerPath::contour), ConvergenceError);
  }
}
