#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "mono/qlinalg.hpp"
#include "mono/rng.hpp"

using namespace mono;

namespace {

Quaternion random_quaternion(SplitMix64& rng) {
  return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
          rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
}

QuatMatrix random_quat_matrix(SplitMix64& rng, std::size_t n) {
  QuatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_quaternion(rng);
  }
  return m;
}

}  // namespace

TEST_SUITE("qlinalg") {

TEST_CASE("identity matrices for every scalar type") {
  CHECK(max_abs(RealMatrix::identity(3) - RealMatrix::identity(3)) == 0.0);
  const EvenMatrix ie = EvenMatrix::identity(2);
  CHECK(ie(0, 0).s == 1.0);
  CHECK(ie(0, 1).max_abs() == 0.0);
  const QuatMatrix iq = QuatMatrix::identity(2);
  CHECK(iq(1, 1).w == 1.0);
  const ComplexMatrix ic = ComplexMatrix::identity(2);
  CHECK(ic(0, 0) == std::complex<double>(1.0, 0.0));
}

TEST_CASE("dimension mismatch throws") {
  RealMatrix a(2, 3), b(2, 3);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  RealMatrix c(3, 2);
  CHECK_NOTHROW(a * c);
  CHECK_THROWS_AS(a - c, std::invalid_argument);
}

TEST_CASE("chi block layout on a 1x1 matrix") {
  QuatMatrix q(1, 1);
  q(0, 0) = {1.0, 2.0, 3.0, 4.0};  // w + x i + y j + z k
  const ComplexMatrix c = chi(q);
  REQUIRE(c.rows() == 2);
  // q = q1 + q2 j with q1 = w + z i, q2 = y - x i.
  CHECK(c(0, 0) == std::complex<double>(1.0, 4.0));
  CHECK(c(0, 1) == std::complex<double>(3.0, -2.0));
  CHECK(c(1, 0) == -std::conj(c(0, 1)));
  CHECK(c(1, 1) == std::conj(c(0, 0)));
  CHECK(is_chi_structured(c));
  const QuatMatrix back = chi_inv(c);
  CHECK(max_abs(back - q) == 0.0);
}

TEST_CASE("chi is an algebra homomorphism") {
  SplitMix64 rng(61);
  const std::size_t n = 3;
  CHECK(max_abs(chi(QuatMatrix::identity(n)) -
                ComplexMatrix::identity(2 * n)) == 0.0);
  for (int t = 0; t < 10; ++t) {
    const QuatMatrix a = random_quat_matrix(rng, n);
    const QuatMatrix b = random_quat_matrix(rng, n);
    CHECK(max_abs(chi(a * b) - chi(a) * chi(b)) < 1e-13);
    CHECK(max_abs(chi(adjoint(a)) - adjoint(chi(a))) < 1e-15);
  }
}

TEST_CASE("chi_inv validates the block structure") {
  ComplexMatrix c(2, 2);
  c(0, 0) = {1.0, 0.0};
  c(0, 1) = {0.5, 0.5};
  c(1, 0) = {0.0, 0.0};  // should be -conj(c01)
  c(1, 1) = {1.0, 0.0};
  CHECK_FALSE(is_chi_structured(c));
  CHECK_THROWS_AS(chi_inv(c), StructureError);
  CHECK_THROWS_AS(chi_inv(ComplexMatrix(3, 3)), StructureError);  // odd size
}

TEST_CASE("tau round trip on matrices") {
  SplitMix64 rng(67);
  EvenMatrix g(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      g(i, j) = EvenElement(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                            rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    }
  }
  CHECK(max_abs(tau_inv(tau(g)) - g) == 0.0);
  CHECK(max_abs(tau(adjoint(g)) - adjoint(tau(g))) == 0.0);
}

TEST_CASE("hermitian eigensolver on a frozen 2x2") {
  // C = [[2, i], [-i, 2]] has eigenvalues 1 and 3.
  ComplexMatrix c(2, 2);
  c(0, 0) = 2.0;
  c(0, 1) = {0.0, 1.0};
  c(1, 0) = {0.0, -1.0};
  c(1, 1) = 2.0;
  const HermitianEig eig = hermitian_eig(c);
  REQUIRE(eig.eigenvalues.size() == 2);
  CHECK(eig.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(eig.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-14));
  // Residual C V = V diag(l) and orthonormal columns.
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 2; ++i) {
      std::complex<double> acc = 0.0;
      for (int l = 0; l < 2; ++l) acc += c(i, l) * eig.vectors(l, j);
      CHECK(std::abs(acc - eig.vectors(i, j) * eig.eigenvalues[j]) < 1e-14);
    }
  }
  CHECK(max_abs(adjoint(eig.vectors) * eig.vectors -
                ComplexMatrix::identity(2)) < 1e-14);
}

TEST_CASE("eigensolver handles random Hermitian matrices") {
  SplitMix64 rng(71);
  const std::size_t n = 6;
  ComplexMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    c(i, i) = rng.uniform(-2.0, 2.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      c(i, j) = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
      c(j, i) = std::conj(c(i, j));
    }
  }
  const HermitianEig eig = hermitian_eig(c);
  for (std::size_t j = 1; j < n; ++j) {
    CHECK(eig.eigenvalues[j] >= eig.eigenvalues[j - 1]);
  }
  ComplexMatrix vl(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      vl(i, j) = eig.vectors(i, j) * eig.eigenvalues[j];
    }
  }
  CHECK(max_abs(c * eig.vectors - vl) < 1e-12);
}

TEST_CASE("inverse square root") {
  SplitMix64 rng(73);
  const std::size_t n = 4;
  ComplexMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b(i, j) = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    }
  }
  ComplexMatrix m = adjoint(b) * b;
  for (std::size_t i = 0; i < n; ++i) m(i, i) += 1.0;
  const ComplexMatrix r = hermitian_inv_sqrt(m);
  CHECK(max_abs(r * m * r - ComplexMatrix::identity(n)) < 1e-12);
  CHECK(max_abs(r - adjoint(r)) < 1e-12);  // function of a Hermitian matrix
}

TEST_CASE("inverse square root rejects singular input") {
  ComplexMatrix m(2, 2);
  m(0, 0) = 1.0;  // second eigenvalue is 0
  CHECK_THROWS_AS(hermitian_inv_sqrt(m), SingularGramError);
}

TEST_CASE("real symmetric inverse square root, frozen 2x2") {
  RealMatrix g(2, 2);
  g(0, 0) = 2.0;
  g(0, 1) = 1.0;
  g(1, 0) = 1.0;
  g(1, 1) = 2.0;
  const RealMatrix r = real_sym_inv_sqrt(g);
  CHECK(r(0, 0) == doctest::Approx(0.7886751345948129).epsilon(1e-14));
  CHECK(r(0, 1) == doctest::Approx(-0.21132486540518708).epsilon(1e-13));
  CHECK(r(1, 0) == doctest::Approx(r(0, 1)).epsilon(1e-14));
  CHECK(max_abs(r * g * r - RealMatrix::identity(2)) < 1e-14);

  const RealSymEig eig = real_sym_eig(g);
  CHECK(eig.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(eig.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("complex inverse via Gauss-Jordan") {
  SplitMix64 rng(79);
  const std::size_t n = 4;
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    }
    a(i, i) += 4.0;
  }
  const ComplexMatrix inv = complex_inverse(a);
  CHECK(max_abs(a * inv - ComplexMatrix::identity(n)) < 1e-12);
  CHECK(max_abs(inv * a - ComplexMatrix::identity(n)) < 1e-12);
}

TEST_CASE("coefficient matrix orthonormalizes an even Gram") {
  SplitMix64 rng(83);
  const std::size_t n = 3;
  EvenMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b(i, j) = EvenElement(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                            rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    }
  }
  EvenMatrix g = adjoint(b) * b;
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) += EvenElement::identity() * 0.5;
  }
  const EvenMatrix a = coefficient_matrix(g);
  CHECK(max_abs(adjoint(a) * g * a - EvenMatrix::identity(n)) < 1e-12);
  CHECK(max_abs(a - adjoint(a)) < 1e-12);  // matrix function of G
  CHECK(min_gram_eigenvalue(g) > 0.0);
}

TEST_CASE("coefficient matrix rejects singular Gram") {
  EvenMatrix g(2, 2);  // all zero
  CHECK_THROWS_AS(coefficient_matrix(g), SingularGramError);
}

}  // TEST_SUITE
