#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "bergman/domains.hpp"
#include "bergman/quadrature.hpp"

using namespace bergman;

namespace {

ConformalMap quad_map() {
  return ConformalMap::make(MapKind::interior,
                            {{0.0, 0.0}, {1.0, 0.0}, {0.3, 0.0}});
}

ConformalMap cubic_map() {
  return ConformalMap::make(MapKind::interior,
                            {{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, {0.25, 0.0}});
}

std::vector<Complex> circle(int m, double r = 1.0) {
  std::vector<Complex> pts(m);
  for (int j = 0; j < m; ++j) pts[j] = std::polar(r, 2.0 * kPi * j / m);
  return pts;
}

}  // namespace

TEST_CASE("make_map admits and rejects by the coefficient criterion") {
  const auto id =
      ConformalMap::make(MapKind::interior, {{0.0, 0.0}, {1.0, 0.0}});
  CHECK(id.margin() == doctest::Approx(1.0));

  const auto q = quad_map();
  CHECK(q.margin() == doctest::Approx(0.4).epsilon(1e-14));

  CHECK_THROWS_AS(ConformalMap::make(MapKind::interior,
                                     {{0.0, 0.0}, {1.0, 0.0}, {0.6, 0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ConformalMap::make(MapKind::interior, {}),
                  std::invalid_argument);

  const auto ext =
      ConformalMap::make(MapKind::exterior, {{0.0, 0.0}, {0.2, 0.0}});
  CHECK(ext.margin() == doctest::Approx(0.8).epsilon(1e-14));
  CHECK_THROWS_AS(ConformalMap::make(MapKind::exterior,
                                     {{0.0, 0.0}, {0.5, 0.0}, {0.3, 0.0}}),
                  std::invalid_argument);
}

TEST_CASE("admitted maps are injective on sampled point pairs") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (const auto& phi : {quad_map(), cubic_map()}) {
    for (int rep = 0; rep < 10000; ++rep) {
      const Complex p =
          std::polar(std::sqrt(unif(rng)), 2.0 * kPi * unif(rng));
      const Complex q =
          std::polar(std::sqrt(unif(rng)), 2.0 * kPi * unif(rng));
      if (p == q) continue;
      const double image_dist = std::abs(phi.evaluate(p) - phi.evaluate(q));
      CHECK(image_dist > 0.0);
      // the criterion slack lower-bounds the distortion
      CHECK(image_dist >= 0.5 * phi.margin() * std::abs(p - q));
    }
  }
}

TEST_CASE("exhaust schedules and admissibility") {
  const auto id =
      ConformalMap::make(MapKind::interior, {{0.0, 0.0}, {1.0, 0.0}});
  const ExhaustionSequence ex(id, 3, 0.2);
  CHECK(ex.radius(1) == doctest::Approx(1.2));
  CHECK(ex.radius(2) == doctest::Approx(1.1));
  CHECK(ex.radius(3) == doctest::Approx(1.05));
  CHECK_THROWS_AS(ex.radius(0), std::out_of_range);
  CHECK_THROWS_AS(ex.radius(4), std::out_of_range);

  // quad map: 0.6 * 1.4 = 0.84 < 1 admissible, 0.6 * 1.7 = 1.02 not
  CHECK_NOTHROW(ExhaustionSequence(quad_map(), 8, 0.4));
  CHECK_THROWS_AS(ExhaustionSequence(quad_map(), 8, 0.7),
                  std::invalid_argument);

  const ExhaustionSequence qex(quad_map(), 8, 0.4);
  for (int n = 1; n <= 8; ++n) CHECK(qex.level_map(n).margin() > 0.0);
}

TEST_CASE("level curves nest strictly") {
  const ExhaustionSequence ex(quad_map(), 6, 0.4);
  for (int n = 1; n < 6; ++n) {
    const auto outer = ex.level_boundary(n, 512);
    const auto inner = ex.level_boundary(n + 1, 64);
    for (const Complex& p : inner) CHECK(winding_number(outer, p) == 1);
  }
}

TEST_CASE("boundary_points") {
  const auto id =
      ConformalMap::make(MapKind::interior, {{0.0, 0.0}, {1.0, 0.0}});
  const auto pts = id.boundary_points(1.0, 4);
  REQUIRE(pts.size() == 4);
  CHECK(std::abs(pts[0] - Complex{1.0, 0.0}) < 1e-15);
  CHECK(std::abs(pts[1] - Complex{0.0, 1.0}) < 1e-15);
  CHECK(std::abs(pts[2] - Complex{-1.0, 0.0}) < 1e-15);
  CHECK(std::abs(pts[3] - Complex{0.0, -1.0}) < 1e-15);

  CHECK(std::abs(quad_map().boundary_points(1.0, 8)[0] - Complex{1.3, 0.0}) <
        1e-15);
  const auto ext =
      ConformalMap::make(MapKind::exterior, {{0.0, 0.0}, {0.2, 0.0}});
  CHECK(std::abs(ext.boundary_points(1.0, 8)[0] - Complex{1.2, 0.0}) < 1e-15);

  CHECK_THROWS_AS(quad_map().boundary_points(2.0, 8), std::invalid_argument);
  CHECK_THROWS_AS(ext.boundary_points(0.9, 8), std::invalid_argument);
}

TEST_CASE("quasicircle constant of the unit circle is 1") {
  // chord-equals-arc-diameter oracle: every arc spanning at most half the
  // circle has diameter equal to its endpoint chord
  const double m = quasicircle_constant(circle(512));
  CHECK(std::abs(m - 1.0) <= 1e-3);
}

TEST_CASE("quasicircle constant of the quad boundary is finite and stable") {
  const auto b512 = quad_map().boundary_points(1.0, 512);
  const auto b1024 = quad_map().boundary_points(1.0, 1024);
  const double m512 = quasicircle_constant(b512);
  const double m1024 = quasicircle_constant(b1024);
  CHECK(m512 > 1.0);
  CHECK(m512 < 3.0);
  CHECK(std::abs(m512 - m1024) <= 0.02 * m512);
}

TEST_CASE("quasicircle constant rejects degenerate input") {
  CHECK_THROWS_AS(quasicircle_constant(std::vector<Complex>{
                      {0.0, 0.0}, {1.0, 0.0}}),
                  std::invalid_argument);
  std::vector<Complex> dup = circle(16);
  dup[5] = dup[4];
  CHECK_THROWS_AS(quasicircle_constant(dup), std::invalid_argument);
}

TEST_CASE("quasicircle constant is similarity invariant") {
  const auto base = quad_map().boundary_points(1.0, 256);
  const Complex a = std::polar(1.7, 0.3);
  const Complex b{2.0, -1.0};
  std::vector<Complex> moved(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) moved[i] = a * base[i] + b;
  CHECK(quasicircle_constant(base) ==
        doctest::Approx(quasicircle_constant(moved)).epsilon(1e-12));
}

TEST_CASE("mapped_area") {
  const auto id =
      ConformalMap::make(MapKind::interior, {{0.0, 0.0}, {1.0, 0.0}});
  CHECK(id.mapped_area() == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(ConformalMap::make(MapKind::interior, {{0.0, 0.0}, {2.0, 0.0}})
            .mapped_area() == doctest::Approx(4.0 * kPi).epsilon(1e-15));

  const auto q = quad_map();
  CHECK(q.mapped_area() == doctest::Approx(1.18 * kPi).epsilon(1e-14));
  // quadrature oracle iint |phi'|^2
  const auto rule = DiskQuadrature::build(32, 64);
  const double oracle = integrate_disk(rule, [&](Complex w) -> Complex {
                          return std::norm(q.derivative(w));
                        }).real();
  CHECK(q.mapped_area() == doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("winding_number classifies interior and exterior points") {
  const auto curve = quad_map().boundary_points(1.0, 512);
  CHECK(winding_number(curve, {0.0, 0.0}) == 1);
  CHECK(winding_number(curve, {0.5, 0.1}) == 1);
  CHECK(winding_number(curve, {2.0, 0.0}) == 0);
  CHECK(winding_number(curve, {-1.0, 0.0}) == 0);
}

TEST_CASE("exterior map inversion") {
  const auto psi =
      ConformalMap::make(MapKind::exterior, {{0.1, -0.05}, {0.2, 0.0}});
  for (int j = 0; j < 8; ++j) {
    const Complex zeta = psi.evaluate(std::polar(1.7, 2.0 * kPi * j / 8.0));
    const Complex w = psi.invert_exterior(zeta);
    CHECK(std::abs(psi.evaluate(w) - zeta) < 1e-12);
    CHECK(std::abs(w) > 1.0);
  }
  // a point inside the image of the unit circle has no exterior preimage
  CHECK_THROWS_AS(psi.invert_exterior({0.1, -0.05}), std::domain_error);
}

TEST_CASE("scaled level maps match pointwise evaluation") {
  const auto q = quad_map();
  const auto q12 = q.scaled(1.2);
  for (int j = 0; j < 8; ++j) {
    const Complex w = std::polar(0.7, 2.0 * kPi * j / 8.0);
    CHECK(std::abs(q12.evaluate(w) - q.evaluate(1.2 * w)) < 1e-14);
  }
  CHECK_THROWS_AS(q.scaled(2.0), std::invalid_argument);
}
