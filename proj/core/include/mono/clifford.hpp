#pragma once

// Real Clifford algebra R_3 with negative-definite signature (e_j^2 = -1),
// its even subalgebra, and a quaternion model of the even subalgebra used by
// the matrix factorizations in qlinalg.
//
// Blade coefficient order is fixed once and for all as
//   index:  0    1    2    3    4     5     6     7
//   blade:  1    e1   e2   e3   e12   e13   e23   e123
// Products are evaluated through a compile-time 8x8 sign/index table derived
// from the anticommutation rules, so the arithmetic is branch-free and can be
// tested directly against the algebra axioms.

#include <array>
#include <bit>
#include <cstdint>
#include <iosfwd>

namespace mono {

inline constexpr int kBladeCount = 8;

// Bitmask per blade index: bit j set <=> generator e_{j+1} present.
inline constexpr std::array<unsigned, kBladeCount> kBladeMask = {
    0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};

// Grade (number of generators) per blade index.
inline constexpr std::array<int, kBladeCount> kBladeGrade = {0, 1, 1, 1,
                                                             2, 2, 2, 3};

// Display names per blade index, in coefficient order.
inline constexpr std::array<const char*, kBladeCount> kBladeName = {
    "s", "e1", "e2", "e3", "e12", "e13", "e23", "e123"};

namespace detail {

// Number of generator transpositions needed to sort the concatenation of
// blades `a` and `b` into canonical ascending order.
constexpr int reorder_swaps(unsigned a, unsigned b) {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return swaps;
}

struct BladeProduct {
  std::int8_t sign;
  std::uint8_t index;
};

struct ProductTable {
  std::array<std::array<BladeProduct, kBladeCount>, kBladeCount> entry{};
};

constexpr ProductTable make_product_table() {
  std::array<int, kBladeCount> index_of_mask{};
  for (int i = 0; i < kBladeCount; ++i) index_of_mask[kBladeMask[i]] = i;

  ProductTable table{};
  for (int i = 0; i < kBladeCount; ++i) {
    for (int j = 0; j < kBladeCount; ++j) {
      const unsigned a = kBladeMask[i];
      const unsigned b = kBladeMask[j];
      // Transposition parity plus one factor of -1 per repeated generator
      // (each generator squares to -1).
      const int parity = reorder_swaps(a, b) + std::popcount(a & b);
      table.entry[i][j] = {static_cast<std::int8_t>((parity & 1) ? -1 : 1),
                           static_cast<std::uint8_t>(index_of_mask[a ^ b])};
    }
  }
  return table;
}

inline constexpr ProductTable kProductTable = make_product_table();

}  // namespace detail

// General element of R_3; the universal value type of the library.
struct Multivector3 {
  std::array<double, kBladeCount> c{};

  constexpr Multivector3() = default;

  static constexpr Multivector3 scalar(double s) {
    Multivector3 m;
    m.c[0] = s;
    return m;
  }

  static constexpr Multivector3 vector(double x1, double x2, double x3) {
    Multivector3 m;
    m.c[1] = x1;
    m.c[2] = x2;
    m.c[3] = x3;
    return m;
  }

  // Unit blade by coefficient index (0..7), optionally scaled.
  static constexpr Multivector3 blade(int index, double value = 1.0) {
    Multivector3 m;
    m.c[static_cast<std::size_t>(index)] = value;
    return m;
  }

  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  double scalar_part() const { return c[0]; }

  Multivector3& operator+=(const Multivector3& o) {
    for (int i = 0; i < kBladeCount; ++i) c[i] += o.c[i];
    return *this;
  }
  Multivector3& operator-=(const Multivector3& o) {
    for (int i = 0; i < kBladeCount; ++i) c[i] -= o.c[i];
    return *this;
  }
  Multivector3& operator*=(double s) {
    for (double& v : c) v *= s;
    return *this;
  }

  friend Multivector3 operator+(Multivector3 a, const Multivector3& b) {
    return a += b;
  }
  friend Multivector3 operator-(Multivector3 a, const Multivector3& b) {
    return a -= b;
  }
  friend Multivector3 operator-(const Multivector3& a) {
    Multivector3 m;
    for (int i = 0; i < kBladeCount; ++i) m.c[i] = -a.c[i];
    return m;
  }
  friend Multivector3 operator*(Multivector3 a, double s) { return a *= s; }
  friend Multivector3 operator*(double s, Multivector3 a) { return a *= s; }

  // Clifford product through the precomputed blade table.
  friend Multivector3 operator*(const Multivector3& a, const Multivector3& b) {
    Multivector3 out;
    for (int i = 0; i < kBladeCount; ++i) {
      const double ai = a.c[i];
      if (ai == 0.0) continue;
      for (int j = 0; j < kBladeCount; ++j) {
        const double bj = b.c[j];
        if (bj == 0.0) continue;
        const auto p = detail::kProductTable.entry[i][j];
        out.c[p.index] += p.sign * ai * bj;
      }
    }
    return out;
  }

  // |a|^2 = [conj(a) a]_0 = sum of squared coefficients.
  double norm_squared() const {
    double s = 0.0;
    for (double v : c) s += v * v;
    return s;
  }
  double norm() const;

  // Largest absolute coefficient; handy for tolerance checks.
  double max_abs() const;
};

// Hermitian conjugation: the real-linear anti-automorphism with
// conj(e_j) = -e_j.  Per blade it multiplies grade g by (-1)^{g(g+1)/2}.
Multivector3 conj(const Multivector3& a);

// Grade projection [a]_k for k in 0..3.  Throws std::out_of_range otherwise.
Multivector3 grade(const Multivector3& a, int k);

// Exponential of a bivector B with B^2 = -s^2 <= 0:
//   exp(B) = cos(s) + B sin(s)/s        (limit 1 as s -> 0).
// Throws std::invalid_argument if B has non-bivector components or if B^2 is
// not a scalar, both at absolute tolerance 1e-12.
Multivector3 exp_bivector(const Multivector3& B);

// Convenience blades.
inline constexpr Multivector3 kOne = Multivector3::blade(0);
inline constexpr Multivector3 kE1 = Multivector3::blade(1);
inline constexpr Multivector3 kE2 = Multivector3::blade(2);
inline constexpr Multivector3 kE3 = Multivector3::blade(3);
inline constexpr Multivector3 kE12 = Multivector3::blade(4);
inline constexpr Multivector3 kE13 = Multivector3::blade(5);
inline constexpr Multivector3 kE23 = Multivector3::blade(6);
inline constexpr Multivector3 kE123 = Multivector3::blade(7);

// ---------------------------------------------------------------------------
// Even subalgebra R_3^+ = span{1, e12, e13, e23}.

struct EvenElement {
  double s = 0.0;
  double e12 = 0.0;
  double e13 = 0.0;
  double e23 = 0.0;

  constexpr EvenElement() = default;
  constexpr EvenElement(double s_, double e12_, double e13_, double e23_)
      : s(s_), e12(e12_), e13(e13_), e23(e23_) {}

  static constexpr EvenElement identity() { return {1.0, 0.0, 0.0, 0.0}; }

  // Extract the even part of a general element.  Throws
  // std::invalid_argument if any odd-grade coefficient exceeds `tol`.
  static EvenElement from(const Multivector3& m, double tol = 1e-9);

  Multivector3 to_multivector() const;

  double norm_squared() const {
    return s * s + e12 * e12 + e13 * e13 + e23 * e23;
  }
  double norm() const;
  double max_abs() const;

  EvenElement& operator+=(const EvenElement& o) {
    s += o.s;
    e12 += o.e12;
    e13 += o.e13;
    e23 += o.e23;
    return *this;
  }
  EvenElement& operator-=(const EvenElement& o) {
    s -= o.s;
    e12 -= o.e12;
    e13 -= o.e13;
    e23 -= o.e23;
    return *this;
  }
  EvenElement& operator*=(double f) {
    s *= f;
    e12 *= f;
    e13 *= f;
    e23 *= f;
    return *this;
  }

  friend EvenElement operator+(EvenElement a, const EvenElement& b) {
    return a += b;
  }
  friend EvenElement operator-(EvenElement a, const EvenElement& b) {
    return a -= b;
  }
  friend EvenElement operator-(const EvenElement& a) {
    return {-a.s, -a.e12, -a.e13, -a.e23};
  }
  friend EvenElement operator*(EvenElement a, double f) { return a *= f; }
  friend EvenElement operator*(double f, EvenElement a) { return a *= f; }

  // The pairs (e12, e13, e23) multiply exactly like the quaternion units
  // (i, j, k); the product below is the Hamilton product in that model.
  friend EvenElement operator*(const EvenElement& a, const EvenElement& b);
};

EvenElement conj(const EvenElement& a);

// ---------------------------------------------------------------------------
// Quaternions, realized on the basis (1, e1, e2, e12) of R_2, so that
// (x, y, z) multiply like (i, j, k).

struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion identity() { return {1.0, 0.0, 0.0, 0.0}; }

  double norm_squared() const { return w * w + x * x + y * y + z * z; }
  double norm() const;
  double max_abs() const;

  Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Quaternion operator*(const Quaternion& a, double f) {
    return {a.w * f, a.x * f, a.y * f, a.z * f};
  }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
};

Quaternion conj(const Quaternion& q);

// Algebra isomorphism R_3^+ -> H:
//   tau(s + a e12 + b e13 + c e23) = s + z e12 + b e2 - c e1,
// i.e. w = s, x = -e23, y = e13, z = e12.  It is linear, multiplicative and
// conjugation-preserving; tau_inv is its inverse.
Quaternion tau(const EvenElement& a);
EvenElement tau_inv(const Quaternion& q);

}  // namespace mono
