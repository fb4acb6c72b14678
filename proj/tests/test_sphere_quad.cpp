#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "mono/rng.hpp"
#include "mono/sphere.hpp"

using namespace mono;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("sphere_quad") {

TEST_CASE("gauss-legendre 3-point rule") {
  std::vector<double> x, w;
  gauss_legendre(3, x, w);
  REQUIRE(x.size() == 3);
  CHECK(x[0] == doctest::Approx(-std::sqrt(0.6)).epsilon(1e-15));
  CHECK(x[1] == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  CHECK(x[2] == doctest::Approx(std::sqrt(0.6)).epsilon(1e-15));
  CHECK(w[0] == doctest::Approx(5.0 / 9.0).epsilon(1e-15));
  CHECK(w[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-15));
  CHECK(w[2] == doctest::Approx(5.0 / 9.0).epsilon(1e-15));
}

TEST_CASE("gauss-legendre integrates polynomials exactly") {
  std::vector<double> x, w;
  gauss_legendre(5, x, w);
  // integral of t^8 over [-1,1] = 2/9, exact for degree <= 9.
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += w[i] * std::pow(x[i], 8);
  CHECK(acc == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("product rule shape and weight sum") {
  const QuadratureRule rule = product_rule(2);
  CHECK(rule.degree == 4);
  CHECK(rule.size() == 3u * 6u);
  CHECK(rule.nodes.size() == rule.size());
  CHECK(rule.points.size() == rule.size());
  double sum = 0.0;
  for (double w : rule.weights) sum += w;
  CHECK(sum == doctest::Approx(4.0 * kPi).epsilon(1e-14));
}

TEST_CASE("product rule integrates monomials exactly") {
  const QuadratureRule rule = product_rule(3);
  const auto integral = [&](int a, int b, int c) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const Vec3& p = rule.points[i];
      acc += rule.weights[i] * std::pow(p[0], a) * std::pow(p[1], b) *
             std::pow(p[2], c);
    }
    return acc;
  };
  CHECK(integral(0, 0, 0) == doctest::Approx(4 * kPi).epsilon(1e-14));
  CHECK(integral(1, 0, 0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
  CHECK(integral(2, 0, 0) == doctest::Approx(4 * kPi / 3).epsilon(1e-14));
  CHECK(integral(1, 1, 0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
  CHECK(integral(2, 2, 0) == doctest::Approx(4 * kPi / 15).epsilon(1e-13));
  CHECK(integral(4, 0, 2) == doctest::Approx(4 * kPi * 3.0 / 105.0)
                                 .epsilon(1e-13));
  CHECK(integral(2, 2, 2) == doctest::Approx(4 * kPi / 105).epsilon(1e-13));
}

TEST_CASE("sphere point round trips") {
  SplitMix64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const Vec3 x = rng.unit_vector();
    const SpherePoint p = SpherePoint::from_unit(x);
    CHECK(p.theta >= 0.0);
    CHECK(p.theta < 2 * kPi + 1e-15);
    CHECK(p.phi >= 0.0);
    CHECK(p.phi <= kPi);
    const Vec3 back = p.cart();
    CHECK(norm(sub(back, x)) < 1e-12);
    const Multivector3 om = p.omega();
    CHECK(std::fabs(om.c[1] - x[0]) < 1e-12);
    CHECK(std::fabs(om.norm_squared() - 1.0) < 1e-12);
  }
}

TEST_CASE("integrate and inner on simple fields") {
  const QuadratureRule rule = product_rule(2);
  const SphereFunction one = [](const SpherePoint&) { return kOne; };
  const SphereFunction x1 = [](const SpherePoint& p) {
    return Multivector3::scalar(p.cart()[0]);
  };
  CHECK(integrate(one, rule).scalar_part() ==
        doctest::Approx(4 * kPi).epsilon(1e-14));
  CHECK(integrate(x1, rule).scalar_part() ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
  CHECK(inner(x1, x1, rule).scalar_part() ==
        doctest::Approx(4 * kPi / 3).epsilon(1e-13));
  // <e1 x1, e1 x1> = conj(e1) e1 x1^2 = x1^2.
  const SphereFunction vx1 = [](const SpherePoint& p) {
    return kE1 * p.cart()[0];
  };
  CHECK(inner(vx1, vx1, rule).scalar_part() ==
        doctest::Approx(4 * kPi / 3).epsilon(1e-13));
}

TEST_CASE("tangent projection") {
  SplitMix64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const Vec3 x = rng.unit_vector();
    const Vec3 v = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                    rng.uniform(-1.0, 1.0)};
    const Vec3 p = tangent_project(x, v);
    CHECK(std::fabs(dot(p, x)) < 1e-14);
    CHECK(norm(sub(add(p, scale(x, dot(v, x))), v)) < 1e-14);
  }
}

TEST_CASE("geodesic step walks great circles") {
  const Vec3 x = {1.0, 0.0, 0.0};
  const Vec3 w = {0.0, 1.0, 0.0};
  const Vec3 quarter = geodesic_step(x, w, kPi / 2);
  CHECK(norm(sub(quarter, Vec3{0.0, 1.0, 0.0})) < 1e-15);
  const Vec3 eighth = geodesic_step(x, w, kPi / 4);
  CHECK(eighth[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(eighth[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(std::fabs(norm(quarter) - 1.0) < 1e-15);

  CHECK_THROWS_AS(geodesic_step(Vec3{2.0, 0.0, 0.0}, w, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(geodesic_step(x, Vec3{0.1, 1.0, 0.0}, 0.1),
                  std::invalid_argument);
}

}  // TEST_SUITE
