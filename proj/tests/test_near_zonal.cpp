#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "mono/monogenics.hpp"
#include "mono/near_zonal.hpp"
#include "mono/rng.hpp"

using namespace mono;

namespace {

constexpr double kPi = std::numbers::pi;

// Reference ensemble for the degree-2 near-zonal basis (printed to 4
// decimals in the reference computation; renormalized here).
std::vector<Vec3> reference_points() {
  std::vector<Vec3> pts = {{0.4407, -0.1155, 0.8902},
                           {-0.3322, -0.7521, 0.5692},
                           {0.5407, -0.2516, -0.8027}};
  for (Vec3& p : pts) p = normalized(p);
  return pts;
}

}  // namespace

TEST_SUITE("near_zonal") {

TEST_CASE("construction from the reference ensemble") {
  const NearZonalBasis basis = build_near_zonal(2, reference_points());
  REQUIRE(basis.eta.size() == 3);

  // Gram entries come straight from the kernel.
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const EvenElement direct = EvenElement::from(
          kernel_K(3, 2, basis.eta[static_cast<std::size_t>(i)],
                   basis.eta[static_cast<std::size_t>(j)]));
      CHECK((basis.gram(static_cast<std::size_t>(i),
                        static_cast<std::size_t>(j)) -
             direct)
                .max_abs() < 1e-14);
    }
  }
  CHECK(max_abs(basis.gram - adjoint(basis.gram)) < 1e-14);

  // Frozen coefficient values: diagonal scalars and the (1,0) entry.
  const double diag[] = {0.912250225708867, 0.9122502293796309,
                         0.9122502280373053};
  for (int t = 0; t < 3; ++t) {
    const EvenElement att = basis.coefficients(static_cast<std::size_t>(t),
                                               static_cast<std::size_t>(t));
    CHECK(att.s == doctest::Approx(diag[t]).epsilon(1e-9));
    CHECK(std::fabs(att.e12) < 1e-9);
    CHECK(std::fabs(att.e13) < 1e-9);
    CHECK(std::fabs(att.e23) < 1e-9);
  }
  const EvenElement a10 = basis.coefficients(1, 0);
  CHECK(a10.s == doctest::Approx(0.193368705914823).epsilon(1e-9));
  CHECK(a10.e12 == doctest::Approx(-0.15988066413291763).epsilon(1e-9));
  CHECK(a10.e13 == doctest::Approx(0.236249853659659).epsilon(1e-9));
  CHECK(a10.e23 == doctest::Approx(0.2610328104899223).epsilon(1e-9));

  // A* G A = I and A self-adjoint.
  CHECK(max_abs(adjoint(basis.coefficients) * basis.gram *
                    basis.coefficients -
                EvenMatrix::identity(3)) < 1e-12);
  CHECK(max_abs(basis.coefficients - adjoint(basis.coefficients)) < 1e-12);
}

TEST_CASE("basis functions are orthonormal under the mean measure") {
  const NearZonalBasis basis = build_near_zonal(2, reference_points());
  const QuadratureRule rule = product_rule(2 * 2 + 2);
  for (int s = 0; s < 3; ++s) {
    for (int t = 0; t < 3; ++t) {
      Multivector3 acc;
      for (std::size_t i = 0; i < rule.size(); ++i) {
        acc += rule.weights[i] *
               (conj(basis.eval(s, rule.points[i])) *
                basis.eval(t, rule.points[i]));
      }
      acc *= 1.0 / (4 * kPi);
      if (s == t) acc.c[0] -= 1.0;
      CHECK(acc.max_abs() < 1e-10);
    }
  }
}

TEST_CASE("zonality metrics, frozen values") {
  const NearZonalBasis basis = build_near_zonal(2, reference_points());

  // Row-quadratic-form deviation (the figure reported with optimized
  // ensembles, about 0.8417 for this example).
  CHECK(zonality_deviation(basis, 0) ==
        doctest::Approx(0.8417524472072853).epsilon(1e-9));
  CHECK(zonality_deviation(basis, 1) ==
        doctest::Approx(0.8416835549763282).epsilon(1e-9));
  CHECK(zonality_deviation(basis, 2) ==
        doctest::Approx(0.8416361016894353).epsilon(1e-9));

  // Column form: the true L^2 distance of Z_t from its zonal term.
  CHECK(zonality_l2(basis, 0) ==
        doctest::Approx(0.6199126013081689).epsilon(1e-9));
  CHECK(zonality_l2(basis, 1) ==
        doctest::Approx(0.6199126132842796).epsilon(1e-9));
  CHECK(zonality_l2(basis, 2) ==
        doctest::Approx(0.6199126089048557).epsilon(1e-9));

  // Quadrature cross-check of the column form.
  for (int t = 0; t < 3; ++t) {
    CHECK(zonality_l2_quadrature(basis, t) ==
          doctest::Approx(zonality_l2(basis, t)).epsilon(1e-10));
  }
}

TEST_CASE("zonal term plus residual reconstructs Z") {
  const NearZonalBasis basis = build_near_zonal(2, reference_points());
  SplitMix64 rng(111);
  for (int t = 0; t < 3; ++t) {
    double l2 = 0.0;
    const QuadratureRule rule = product_rule(6);
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const Multivector3 diff =
          basis.eval(t, rule.points[i]) - basis.zonal_term(t, rule.points[i]);
      l2 += rule.weights[i] * diff.norm_squared();
    }
    l2 /= 4 * kPi;
    CHECK(l2 == doctest::Approx(zonality_l2(basis, t)).epsilon(1e-9));
  }
}

TEST_CASE("random ensembles stay orthonormal") {
  SplitMix64 rng(113);
  for (int k = 1; k <= 4; ++k) {
    const NearZonalBasis basis =
        build_near_zonal(k, rng.sphere_points(static_cast<std::size_t>(k) + 1));
    CHECK(max_abs(adjoint(basis.coefficients) * basis.gram *
                      basis.coefficients -
                  EvenMatrix::identity(static_cast<std::size_t>(k) + 1)) <
          1e-11);
    CHECK(min_gram_eigenvalue(basis.gram) > 0.0);
  }
}

TEST_CASE("input validation") {
  SplitMix64 rng(117);
  CHECK_THROWS_AS(build_near_zonal(2, rng.sphere_points(4)),
                  std::invalid_argument);
  const std::vector<Vec3> degenerate(3, Vec3{0.0, 0.0, 1.0});
  CHECK_THROWS_AS(build_near_zonal(2, degenerate), SingularGramError);
  const NearZonalBasis basis = build_near_zonal(2, reference_points());
  CHECK_THROWS_AS(zonality_deviation(basis, 3), std::out_of_range);
  CHECK_THROWS_AS(zonality_l2(basis, -1), std::out_of_range);
}

}  // TEST_SUITE
