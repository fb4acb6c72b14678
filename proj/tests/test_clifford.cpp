#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "mono/clifford.hpp"
#include "mono/rng.hpp"

using namespace mono;

TEST_SUITE("clifford") {

TEST_CASE("generator products") {
  CHECK((kE1 * kE1).c[0] == -1.0);
  CHECK((kE2 * kE2).c[0] == -1.0);
  CHECK((kE3 * kE3).c[0] == -1.0);
  CHECK((kE1 * kE2).c[4] == 1.0);   // e1 e2 = e12
  CHECK((kE2 * kE1).c[4] == -1.0);  // anticommute
  CHECK((kE1 * kE3).c[5] == 1.0);
  CHECK((kE2 * kE3).c[6] == 1.0);
  // Pseudoscalar squares to +1 in this signature.
  CHECK((kE123 * kE123).c[0] == 1.0);
  // A bivector product that historically flips sign in buggy tables:
  // e13 e12 = -e23.
  CHECK((kE13 * kE12).c[6] == -1.0);
  CHECK((kE12 * kE13).c[6] == 1.0);
}

TEST_CASE("pseudoscalar is central") {
  SplitMix64 rng(11);
  for (int t = 0; t < 20; ++t) {
    Multivector3 a;
    for (int i = 0; i < kBladeCount; ++i) a.c[i] = rng.uniform(-1.0, 1.0);
    CHECK((kE123 * a - a * kE123).max_abs() == doctest::Approx(0.0));
  }
}

TEST_CASE("vector squares to minus its length") {
  SplitMix64 rng(17);
  for (int t = 0; t < 20; ++t) {
    const Multivector3 x = Multivector3::vector(
        rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    Multivector3 sq = x * x;
    CHECK(std::fabs(sq.c[0] + x.norm_squared()) < 1e-14);
    sq.c[0] = 0.0;
    CHECK(sq.max_abs() < 1e-14);
  }
}

TEST_CASE("associativity and distributivity") {
  SplitMix64 rng(23);
  for (int t = 0; t < 50; ++t) {
    Multivector3 a, b, c;
    for (int i = 0; i < kBladeCount; ++i) {
      a.c[i] = rng.uniform(-1.0, 1.0);
      b.c[i] = rng.uniform(-1.0, 1.0);
      c.c[i] = rng.uniform(-1.0, 1.0);
    }
    CHECK(((a * b) * c - a * (b * c)).max_abs() < 1e-13);
    CHECK((a * (b + c) - (a * b + a * c)).max_abs() < 1e-13);
  }
}

TEST_CASE("conjugation signs per grade") {
  CHECK(conj(kOne).c[0] == 1.0);
  CHECK(conj(kE1).c[1] == -1.0);
  CHECK(conj(kE12).c[4] == -1.0);
  CHECK(conj(kE123).c[7] == 1.0);
}

TEST_CASE("conjugation reverses products") {
  SplitMix64 rng(29);
  for (int t = 0; t < 30; ++t) {
    Multivector3 a, b;
    for (int i = 0; i < kBladeCount; ++i) {
      a.c[i] = rng.uniform(-1.0, 1.0);
      b.c[i] = rng.uniform(-1.0, 1.0);
    }
    CHECK((conj(a * b) - conj(b) * conj(a)).max_abs() < 1e-13);
    CHECK((conj(conj(a)) - a).max_abs() == 0.0);
  }
}

TEST_CASE("grade projection") {
  Multivector3 a;
  for (int i = 0; i < kBladeCount; ++i) a.c[i] = i + 1.0;
  Multivector3 sum;
  for (int g = 0; g <= 3; ++g) sum += grade(a, g);
  CHECK((sum - a).max_abs() == 0.0);
  CHECK(grade(a, 1).c[0] == 0.0);
  CHECK(grade(a, 1).c[2] == 3.0);
  CHECK_THROWS_AS(grade(a, 4), std::out_of_range);
  CHECK_THROWS_AS(grade(a, -1), std::out_of_range);
}

TEST_CASE("exp_bivector rotation form") {
  const double th = 0.83;
  const Multivector3 e = exp_bivector(kE12 * th);
  CHECK(e.c[0] == doctest::Approx(std::cos(th)).epsilon(1e-15));
  CHECK(e.c[4] == doctest::Approx(std::sin(th)).epsilon(1e-15));
  CHECK(e.c[5] == 0.0);

  // Inverse and unit norm.
  SplitMix64 rng(31);
  for (int t = 0; t < 20; ++t) {
    Multivector3 bv;
    bv.c[4] = rng.uniform(-2.0, 2.0);
    bv.c[5] = rng.uniform(-2.0, 2.0);
    bv.c[6] = rng.uniform(-2.0, 2.0);
    Multivector3 p = exp_bivector(bv) * exp_bivector(-bv);
    p.c[0] -= 1.0;
    CHECK(p.max_abs() < 1e-14);
    CHECK(std::fabs(exp_bivector(bv).norm_squared() - 1.0) < 1e-14);
  }
}

TEST_CASE("exp_bivector small-angle series") {
  Multivector3 bv = kE13 * 1e-9;
  const Multivector3 e = exp_bivector(bv);
  CHECK(e.c[0] == doctest::Approx(1.0).epsilon(1e-16));
  CHECK(e.c[5] == doctest::Approx(1e-9).epsilon(1e-12));
}

TEST_CASE("exp_bivector rejects non-bivectors") {
  CHECK_THROWS_AS(exp_bivector(kE1), std::invalid_argument);
  CHECK_THROWS_AS(exp_bivector(kOne * 0.5 + kE12), std::invalid_argument);
}

TEST_CASE("even subalgebra Hamilton relations") {
  const EvenElement i(0, 1, 0, 0);  // e12
  const EvenElement j(0, 0, 1, 0);  // e13
  const EvenElement k(0, 0, 0, 1);  // e23
  CHECK((i * i + EvenElement::identity()).max_abs() == 0.0);
  CHECK((j * j + EvenElement::identity()).max_abs() == 0.0);
  CHECK((k * k + EvenElement::identity()).max_abs() == 0.0);
  CHECK((i * j - k).max_abs() == 0.0);
  CHECK((j * k - i).max_abs() == 0.0);
  CHECK((k * i - j).max_abs() == 0.0);
  CHECK((j * i + k).max_abs() == 0.0);
}

TEST_CASE("even product agrees with the full algebra") {
  SplitMix64 rng(37);
  for (int t = 0; t < 30; ++t) {
    const EvenElement a(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                        rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    const EvenElement b(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                        rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    const Multivector3 full = a.to_multivector() * b.to_multivector();
    CHECK(((a * b).to_multivector() - full).max_abs() < 1e-14);
    CHECK((conj(a).to_multivector() - conj(a.to_multivector())).max_abs() ==
          0.0);
  }
}

TEST_CASE("EvenElement::from validates odd parts") {
  const Multivector3 even = kOne * 0.3 + kE12 * 0.5 - kE23 * 0.1;
  const EvenElement e = EvenElement::from(even);
  CHECK(e.s == 0.3);
  CHECK(e.e12 == 0.5);
  CHECK(e.e23 == -0.1);
  CHECK((e.to_multivector() - even).max_abs() == 0.0);
  CHECK_THROWS_AS(EvenElement::from(even + kE1 * 1e-3),
                  std::invalid_argument);
  CHECK_NOTHROW(EvenElement::from(even + kE1 * 1e-12));
}

TEST_CASE("quaternion Hamilton product") {
  const Quaternion qi(0, 1, 0, 0), qj(0, 0, 1, 0), qk(0, 0, 0, 1);
  CHECK((qi * qj - qk).max_abs() == 0.0);
  CHECK((qj * qk - qi).max_abs() == 0.0);
  CHECK((qk * qi - qj).max_abs() == 0.0);
  CHECK((qi * qi + Quaternion::identity()).max_abs() == 0.0);
}

TEST_CASE("tau is an isomorphism onto the quaternions") {
  // Basis mapping: w = s, x = -e23, y = e13, z = e12.
  CHECK((tau(EvenElement(1, 0, 0, 0)) - Quaternion(1, 0, 0, 0)).max_abs() ==
        0.0);
  CHECK((tau(EvenElement(0, 1, 0, 0)) - Quaternion(0, 0, 0, 1)).max_abs() ==
        0.0);
  CHECK((tau(EvenElement(0, 0, 1, 0)) - Quaternion(0, 0, 1, 0)).max_abs() ==
        0.0);
  CHECK((tau(EvenElement(0, 0, 0, 1)) - Quaternion(0, -1, 0, 0)).max_abs() ==
        0.0);

  SplitMix64 rng(41);
  for (int t = 0; t < 50; ++t) {
    const EvenElement a(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                        rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    const EvenElement b(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                        rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    CHECK((tau(a * b) - tau(a) * tau(b)).max_abs() < 1e-14);
    CHECK((tau(conj(a)) - conj(tau(a))).max_abs() == 0.0);
    CHECK(tau(a).norm() == doctest::Approx(a.norm()).epsilon(1e-15));
    CHECK((tau_inv(tau(a)) - a).max_abs() == 0.0);
  }
}

}  // TEST_SUITE
