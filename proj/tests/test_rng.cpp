#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "mono/rng.hpp"
#include "mono/sphere.hpp"

using namespace mono;

TEST_SUITE("rng") {

TEST_CASE("canonical splitmix64 outputs for seed 0") {
  CHECK(splitmix64_at(0, 0) == UINT64_C(0xe220a8397b1dcdaf));
  CHECK(splitmix64_at(0, 1) == UINT64_C(0x6e789e6aa1b965f4));
  CHECK(splitmix64_at(0, 2) == UINT64_C(0x06c45d188009454f));
}

TEST_CASE("counter-based outputs are position-independent") {
  SplitMix64 a(42);
  a.next();
  a.next();
  CHECK(a.next() == splitmix64_at(42, 2));
}

TEST_CASE("streams are reproducible and distinct") {
  SplitMix64 s0 = SplitMix64::stream(7, 0);
  SplitMix64 s0b = SplitMix64::stream(7, 0);
  SplitMix64 s1 = SplitMix64::stream(7, 1);
  const std::uint64_t a = s0.next();
  CHECK(a == s0b.next());
  CHECK(a != s1.next());
  CHECK(a == splitmix64_at(splitmix64_at(7, 0), 0));
}

TEST_CASE("uniform01 range and determinism") {
  SplitMix64 rng(9);
  SplitMix64 rng2(9);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(u == rng2.uniform01());
  }
}

TEST_CASE("uniform interval") {
  SplitMix64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const double u = rng.uniform(-2.5, 1.5);
    CHECK(u >= -2.5);
    CHECK(u < 1.5);
  }
}

TEST_CASE("normal moments") {
  SplitMix64 rng(2718);
  const int n = 20000;
  double mean = 0.0, var = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    mean += x;
    var += x * x;
  }
  mean /= n;
  var = var / n - mean * mean;
  CHECK(std::fabs(mean) < 0.02);
  CHECK(std::fabs(var - 1.0) < 0.05);
}

TEST_CASE("unit vectors live on the sphere") {
  SplitMix64 rng(31);
  double zsum = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const Vec3 v = rng.unit_vector();
    CHECK(std::fabs(norm(v) - 1.0) < 1e-14);
    zsum += v[2];
  }
  CHECK(std::fabs(zsum / 2000.0) < 0.05);  // symmetric in z
}

TEST_CASE("sphere_points returns the requested count") {
  SplitMix64 rng(37);
  const std::vector<Vec3> pts = rng.sphere_points(7);
  CHECK(pts.size() == 7);
  for (const Vec3& p : pts) CHECK(std::fabs(norm(p) - 1.0) < 1e-14);
}

}  // TEST_SUITE
