#pragma once

// Near-zonal orthonormal bases of degree-k spherical monogenics.  From an
// ensemble eta_0..eta_k of unit points, form the kernel Gram
//   G_ij = K_k(eta_i, eta_j)   (even-subalgebra entries),
// factor A = tau^{-1} chi^{-1} (chi tau G)^{-1/2}, and set
//   Z_t(x) = sum_j K_k(x, eta_j) a_{jt}    (coefficients on the right).
// Then {Z_t} is orthonormal in L^2(S^2) under the mean measure, and when the
// ensemble minimizes the off-diagonal kernel energy each Z_t stays close to
// the pure zonal kernel K_k(., eta_t) a_tt.

#include <vector>

#include "mono/qlinalg.hpp"
#include "mono/sphere.hpp"

namespace mono {

struct NearZonalBasis {
  int k = 0;
  std::vector<Vec3> eta;    // k+1 unit points
  EvenMatrix gram;          // G_ij = K_k(eta_i, eta_j), self-adjoint
  EvenMatrix coefficients;  // A with A* G A = I

  // Z_t evaluated at x (scalar + bivector valued).
  Multivector3 eval(int t, const Vec3& x) const;
  // The zonal part K_k(x, eta_t) a_tt alone.
  Multivector3 zonal_term(int t, const Vec3& x) const;
};

// Requires exactly k+1 points (throws std::invalid_argument otherwise; inputs
// are normalized).  Throws SingularGramError when the kernel Gram is not
// invertible above `floor`.
NearZonalBasis build_near_zonal(int k, const std::vector<Vec3>& points,
                                double floor = 1e-10);

// How far Z_t is from zonal, in the quadratic form the Gram factorization
// exposes: <b, G b>_0 with b the t-th ROW of A, its t-th entry zeroed.  This
// is the figure printed alongside the optimized ensembles (about 0.84 for
// the reference degree-2 example).
double zonality_deviation(const NearZonalBasis& basis, int t);

// The true L^2(S^2, mean) distance ||Z_t - K_k(., eta_t) a_tt||^2, which is
// <b, G b>_0 with b the t-th COLUMN of A, its t-th entry zeroed.  The two
// readings differ because quaternion conjugation reverses products: A is
// self-adjoint, so row b equals the conjugate of column b, but the quadratic
// form is not invariant under that swap.
double zonality_l2(const NearZonalBasis& basis, int t);

// Direct quadrature evaluation of zonality_l2 (mean measure); agrees with
// the algebraic value to quadrature accuracy.  quad_deg <= 0 selects the
// default 2k+2.
double zonality_l2_quadrature(const NearZonalBasis& basis, int t,
                              int quad_deg = 0);

}  // namespace mono
