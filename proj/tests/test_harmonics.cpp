#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "mono/harmonics.hpp"
#include "mono/orthopoly.hpp"
#include "mono/qlinalg.hpp"
#include "mono/rng.hpp"

using namespace mono;

namespace {

constexpr double kPi = std::numbers::pi;

// Example ensemble of 5 points for the degree-2 zonal harmonic basis
// (printed to 4 decimals in the reference computation; renormalized here).
std::vector<Vec3> reference_harmonic_points() {
  std::vector<Vec3> pts = {{-0.9578, 0.1971, 0.2092},
                           {0.5136, -0.7161, 0.4726},
                           {0.2730, -0.7662, -0.5817},
                           {-0.6364, -0.2018, -0.7445},
                           {0.2471, 0.1207, -0.9614}};
  for (Vec3& p : pts) p = normalized(p);
  return pts;
}

}  // namespace

TEST_SUITE("harmonics") {

TEST_CASE("normalization constants") {
  CHECK(harmonic_norm_constant(2, 0) ==
        doctest::Approx(std::sqrt(5.0 / (4 * kPi))).epsilon(1e-15));
  CHECK(harmonic_norm_constant(2, 0) ==
        doctest::Approx(0.6307831305050401).epsilon(1e-15));
  CHECK(harmonic_norm_constant(2, 1) ==
        doctest::Approx(0.5462742152960396).epsilon(1e-15));
  CHECK(harmonic_norm_constant(3, 3) ==
        doctest::Approx(0.5900435899266435).epsilon(1e-15));
}

TEST_CASE("frozen point evaluations") {
  CHECK(eval_H(2, 0, {0.7, 1.1}) ==
        doctest::Approx(-0.12071665015977058).epsilon(1e-13));
  CHECK(eval_H(2, 3, {0.7, 1.1}) ==
        doctest::Approx(0.42756554987090073).epsilon(1e-13));
  CHECK(eval_H(3, 5, {2.1, 0.6}) ==
        doctest::Approx(0.0017859660525579813).epsilon(1e-11));
  CHECK(eval_H(4, 8, {5.0, 2.4}) ==
        doctest::Approx(0.05316362491178481).epsilon(1e-13));
}

TEST_CASE("homogeneous scaling in r") {
  const SpherePoint p{1.9, 0.8};
  const double base = eval_H(3, 2, p);
  CHECK(eval_H(3, 2, p, 2.0) == doctest::Approx(8.0 * base).epsilon(1e-14));
}

TEST_CASE("orthonormality at degree 3") {
  const int k = 3;
  const QuadratureRule rule = product_rule(k + 2);
  for (int a = 0; a <= 2 * k; ++a) {
    for (int b = a; b <= 2 * k; ++b) {
      double acc = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i) {
        acc += rule.weights[i] * eval_H(k, a, rule.nodes[i]) *
               eval_H(k, b, rule.nodes[i]);
      }
      CHECK(std::fabs(acc - (a == b ? 1.0 : 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("different degrees are orthogonal") {
  const QuadratureRule rule = product_rule(7);
  for (int n2 = 0; n2 <= 4; ++n2) {
    for (int n3 = 0; n3 <= 6; ++n3) {
      double acc = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i) {
        acc += rule.weights[i] * eval_H(2, n2, rule.nodes[i]) *
               eval_H(3, n3, rule.nodes[i]);
      }
      CHECK(std::fabs(acc) < 1e-12);
    }
  }
}

TEST_CASE("polynomial extension is harmonic and matches eval_H") {
  SplitMix64 rng(101);
  for (int k = 1; k <= 4; ++k) {
    for (int n = 0; n <= 2 * k; ++n) {
      const PolyField p = harmonic_to_poly(k, n);
      CHECK(p.is_homogeneous(k));
      CHECK(laplacian(p).max_abs_coeff() < 1e-12);
      for (int t = 0; t < 5; ++t) {
        const SpherePoint pt{rng.uniform(0.0, 2 * kPi),
                             rng.uniform(0.2, kPi - 0.2)};
        CHECK(std::fabs(p.eval(pt.cart()).scalar_part() - eval_H(k, n, pt)) <
              1e-12);
      }
    }
  }
}

TEST_CASE("zonal kernel closed form and validation") {
  const Vec3 x = normalized(Vec3{0.3, -0.5, 0.8});
  const Vec3 y = normalized(Vec3{-0.6, 0.1, 0.7});
  const double t = dot(x, y);
  for (int k = 0; k <= 5; ++k) {
    CHECK(kernel_R(3, k, x, y) ==
          doctest::Approx((2 * k + 1) * legendre(k, t)).epsilon(1e-13));
  }
  CHECK(kernel_R(3, 2, x, x) == doctest::Approx(5.0).epsilon(1e-13));
  CHECK_THROWS_AS(kernel_R(2, 1, x, y), std::domain_error);
}

TEST_CASE("kernel reproduces degree-2 harmonics") {
  const int k = 2;
  const QuadratureRule rule = product_rule(k + 2);
  const SpherePoint x{0.9, 1.3};
  for (int n = 0; n <= 2 * k; ++n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      acc += rule.weights[i] * kernel_R(3, k, x.cart(), rule.points[i]) *
             eval_H(k, n, rule.nodes[i]);
    }
    acc /= 4 * kPi;
    CHECK(std::fabs(acc - eval_H(k, n, x)) < 1e-12);
  }
}

TEST_CASE("zonal basis from the reference ensemble") {
  const std::vector<Vec3> pts = reference_harmonic_points();
  const ZonalHarmonicBasis basis = zonal_harmonic_basis(2, pts);

  // Frozen Gram eigenvalues of (2k+1) P_k(<eta_i, eta_j>).
  const RealSymEig eig = real_sym_eig(basis.gram);
  const double expected[] = {1.8514636116213006, 4.831013575644867,
                             4.831418257215978, 6.7425398510576695,
                             6.743564704460179};
  REQUIRE(eig.eigenvalues.size() == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(eig.eigenvalues[i] == doctest::Approx(expected[i]).epsilon(1e-10));
  }

  // A = G^{-1/2}: diagonally dominant with diagonal near 0.4830.
  const double diag[] = {0.4829974029601068, 0.48301456416949,
                         0.48300557517424436, 0.48300902085364894,
                         0.4830112292394555};
  for (int i = 0; i < 5; ++i) {
    CHECK(basis.coefficients(i, i) ==
          doctest::Approx(diag[i]).epsilon(1e-10));
    for (int j = 0; j < 5; ++j) {
      if (j != i) {
        CHECK(std::fabs(basis.coefficients(i, j)) <
              0.25 * basis.coefficients(i, i));
      }
    }
  }

  // A G A = I.
  const RealMatrix aga = basis.coefficients * basis.gram * basis.coefficients;
  CHECK(max_abs(aga - RealMatrix::identity(5)) < 1e-12);

  // The basis functions are orthonormal under the mean measure.
  const QuadratureRule rule = product_rule(4);
  for (int s = 0; s < 5; ++s) {
    for (int t = s; t < 5; ++t) {
      double acc = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i) {
        acc += rule.weights[i] * basis.eval(s, rule.points[i]) *
               basis.eval(t, rule.points[i]);
      }
      acc /= 4 * kPi;
      CHECK(std::fabs(acc - (s == t ? 1.0 : 0.0)) < 1e-10);
    }
  }
}

TEST_CASE("zonal basis input validation") {
  std::vector<Vec3> four(4, Vec3{0.0, 0.0, 1.0});
  CHECK_THROWS_AS(zonal_harmonic_basis(2, four), std::invalid_argument);
  // Five copies of one point: rank-1 Gram.
  std::vector<Vec3> degenerate(5, Vec3{0.0, 0.0, 1.0});
  CHECK_THROWS_AS(zonal_harmonic_basis(2, degenerate), SingularGramError);
}

}  // TEST_SUITE
