#pragma once

// Exact polynomial fields R^3 -> R_3: finite sums  sum_m x^m A_m  with
// multi-index m = (a, b, c) and Clifford coefficients A_m.  These give an
// algebraic (quadrature-free) representation of harmonics and monogenics,
// used as an independent oracle against the closed-form spherical
// evaluators, and make differential operators exact.

#include <compare>
#include <map>

#include "mono/clifford.hpp"
#include "mono/sphere.hpp"

namespace mono {

struct Monomial {
  int a = 0;  // exponent of x1
  int b = 0;  // exponent of x2
  int c = 0;  // exponent of x3

  int degree() const { return a + b + c; }
  auto operator<=>(const Monomial&) const = default;
};

class PolyField {
 public:
  using TermMap = std::map<Monomial, Multivector3>;

  PolyField() = default;

  static PolyField constant(const Multivector3& m);
  // The coordinate function x_axis (axis in 1..3) as a scalar-valued field.
  static PolyField coordinate(int axis);
  // x1 e1 + x2 e2 + x3 e3, the identity embedding as a vector field.
  static PolyField identity_vector();

  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  // Accumulate coefficient onto a monomial (erases terms that cancel to 0).
  void add_term(const Monomial& m, const Multivector3& coeff);

  PolyField& operator+=(const PolyField& o);
  PolyField& operator-=(const PolyField& o);
  friend PolyField operator+(PolyField a, const PolyField& b) { return a += b; }
  friend PolyField operator-(PolyField a, const PolyField& b) { return a -= b; }
  friend PolyField operator*(PolyField a, double s);
  friend PolyField operator*(double s, PolyField a) { return a * s; }

  // Coefficient-wise Clifford multiplication by a constant.
  PolyField left_mul(const Multivector3& m) const;   // A_m -> m * A_m
  PolyField right_mul(const Multivector3& m) const;  // A_m -> A_m * m

  // Multiply by the monomial x^s (shift all exponents).
  PolyField shift(const Monomial& s) const;

  // Full product: Clifford-multiply coefficients, add exponents.
  friend PolyField operator*(const PolyField& a, const PolyField& b);

  // Partial derivative with respect to x_axis (axis in 1..3).
  PolyField diff(int axis) const;

  Multivector3 eval(const Vec3& x) const;

  // Largest total degree among terms with a nonzero coefficient; -1 if zero.
  int degree() const;

  // True when every term has total degree exactly k (the zero field is
  // homogeneous of every degree).
  bool is_homogeneous(int k) const;

  // Largest absolute coefficient over all terms and blades.
  double max_abs_coeff() const;

 private:
  TermMap terms_;
};

// Laplacian sum_i d^2/dx_i^2, term by term.
PolyField laplacian(const PolyField& p);

// Euler operator  sum_i x_i d/dx_i ; equals k * p iff p is homogeneous of
// degree k.
PolyField euler(const PolyField& p);

}  // namespace mono
