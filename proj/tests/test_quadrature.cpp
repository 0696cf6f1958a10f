#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "bergman/domains.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/series.hpp"

using namespace bergman;

TEST_CASE("gauss_legendre_01 integrates low-degree polynomials exactly") {
  std::vector<double> x, w;
  gauss_legendre_01(8, x, w);
  CHECK(std::accumulate(w.begin(), w.end(), 0.0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  double m1 = 0.0, m5 = 0.0;
  for (int i = 0; i < 8; ++i) {
    m1 += w[i] * x[i];
    m5 += w[i] * std::pow(x[i], 5);
  }
  CHECK(m1 == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(m5 == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(*std::min_element(x.begin(), x.end()) > 0.0);
  CHECK(*std::max_element(x.begin(), x.end()) < 1.0);
}

TEST_CASE("disk rule basics") {
  const auto rule = DiskQuadrature::build(16, 32);
  CHECK(rule.weight_sum() == doctest::Approx(kPi).epsilon(1e-13));
  for (double w : rule.weights()) CHECK(w > 0.0);

  const Complex one =
      integrate_disk(rule, [](Complex) { return Complex{1.0, 0.0}; });
  CHECK(one.real() == doctest::Approx(kPi).epsilon(1e-13));

  // 2 pi int r^3 dr = pi/2
  const Complex zz = integrate_disk(
      rule, [](Complex z) -> Complex { return std::norm(z); });
  CHECK(zz.real() == doctest::Approx(kPi / 2.0).epsilon(1e-13));

  const Complex z1 = integrate_disk(rule, [](Complex z) { return z; });
  CHECK(std::abs(z1) < 1e-13);

  // net angular frequency != 0
  const Complex z2 = integrate_disk(
      rule, [](Complex z) { return z * z * std::conj(z); });
  CHECK(std::abs(z2) < 1e-13);

  // mean-value property: iint 1/(z-2) = pi * (1/(0-2))
  const Complex mv = integrate_disk(
      rule, [](Complex z) -> Complex { return 1.0 / (z - 2.0); });
  CHECK(std::abs(mv - Complex{-kPi / 2.0, 0.0}) < 1e-12);
}

TEST_CASE("monomial moments are exact inside the rule's reach") {
  const int nr = 16, na = 40;
  const auto rule = DiskQuadrature::build(nr, na);
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; b <= 8; ++b) {
      const Complex v = integrate_disk(rule, [&](Complex z) {
        Complex p{1.0, 0.0};
        for (int i = 0; i < a; ++i) p *= z;
        for (int i = 0; i < b; ++i) p *= std::conj(z);
        return p;
      });
      const Complex expected =
          a == b ? Complex{kPi / (a + 1.0), 0.0} : Complex{0.0, 0.0};
      CHECK(std::abs(v - expected) < 1e-13);
    }
  }
}

TEST_CASE("refinement convergence on a catalog integrand") {
  const auto phi = ConformalMap::make(
      MapKind::interior, {{0.0, 0.0}, {1.0, 0.0}, {0.3, 0.0}});
  auto area = [&](const DiskQuadrature& rule) {
    return integrate_disk(rule, [&](Complex w) -> Complex {
             return std::norm(phi.derivative(w));
           })
        .real();
  };
  const double coarse = area(DiskQuadrature::build(64, 128));
  const double fine = area(DiskQuadrature::build(128, 256));
  CHECK(std::abs(coarse - fine) <= 1e-10 * std::abs(fine));
}

TEST_CASE("fixed-order compensated reduction is permutation-stable") {
  const auto rule = DiskQuadrature::build(24, 48);
  auto f = [](Complex z) -> Complex {
    return std::exp(z) / (2.0 + z);
  };
  const Complex reference = integrate_disk(rule, f);

  std::vector<std::size_t> order(rule.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(23);
  std::shuffle(order.begin(), order.end(), rng);
  CompensatedComplexSum permuted;
  for (std::size_t i : order)
    permuted.add(rule.weights()[i] * f(rule.nodes()[i]));
  CHECK(std::abs(permuted.value() - reference) < 1e-14);
}

TEST_CASE("non-finite integrand values are rejected with the node named") {
  const auto rule = DiskQuadrature::build(4, 8);
  const Complex bad = rule.nodes()[5];
  CHECK_THROWS_AS(integrate_disk(rule,
                                 [&](Complex z) -> Complex {
                                   return 1.0 / (z - bad);
                                 }),
                  std::domain_error);
}

TEST_CASE("bergman_norm_on_domain") {
  const auto rule = DiskQuadrature::build(64, 128);
  const auto disk =
      ConformalMap::make(MapKind::interior, {{0.0, 0.0}, {1.0, 0.0}});

  CHECK(bergman_norm_on_domain([](Complex) { return Complex{1.0, 0.0}; }, disk,
                               rule) ==
        doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));

  // z^k against the coefficient-norm route
  for (std::size_t k = 0; k <= 6; ++k) {
    std::vector<Complex> c(k + 1, Complex{0.0, 0.0});
    c[k] = {1.0, 0.0};
    const CoefficientSeries g(c);
    const double quad = bergman_norm_on_domain(
        [&](Complex z) { return g.evaluate(z); }, disk, rule);
    CHECK(std::abs(quad - b2_disk_norm(g)) <= 1e-12 * b2_disk_norm(g));
  }

  // constant density over phi(D) recovers the mapped area
  const auto phi = ConformalMap::make(
      MapKind::interior, {{0.0, 0.0}, {1.0, 0.0}, {0.3, 0.0}});
  const double n = bergman_norm_on_domain(
      [](Complex) { return Complex{1.0, 0.0}; }, phi, rule);
  CHECK(n == doctest::Approx(std::sqrt(1.18 * kPi)).epsilon(1e-12));
  CHECK(n * n == doctest::Approx(phi.mapped_area()).epsilon(1e-12));
}

TEST_CASE("rule construction rejects degenerate sizes") {
  CHECK_THROWS_AS(DiskQuadrature::build(0, 8), std::invalid_argument);
  CHECK_THROWS_AS(DiskQuadrature::build(4, 1), std::invalid_argument);
}
