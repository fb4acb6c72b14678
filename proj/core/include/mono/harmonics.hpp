#pragma once

// Real spherical harmonics of degree k on S^2 in the Jacobi-polynomial form
//   H_k^0            = N_{k,0} P_k(cos phi)
//   H_k^{2m-1(2m)}   = N_{k,m} sin^m(phi) P_{k-m}^{(m,m)}(cos phi) sin(cos)(m theta),
// indexed contiguously by n = 0..2k with m = (n+1)/2; odd n carries sin,
// even n carries cos.  The constants N_{k,m} make the family orthonormal in
// L^2(S^2) with the full surface measure (weights summing to 4 pi).
//
// Also: exact polynomial extensions, the degree-k zonal (reproducing) kernel,
// and zonal harmonic bases built from point ensembles via the Gram inverse
// square root.

#include <vector>

#include "mono/polyfield.hpp"
#include "mono/qlinalg.hpp"
#include "mono/sphere.hpp"

namespace mono {

// Orthonormalizing constant N_{k,m}, 0 <= m <= k:
//   N_{k,0} = sqrt((2k+1)/(4 pi))
//   N_{k,m} = sqrt((2k+1)/(2 pi)) * sqrt((k-m)!(k+m)!)/(2^m k!),
// evaluated as an exact product ratio to avoid factorial overflow.
double harmonic_norm_constant(int k, int m);

// H_k^n at a sphere point, scaled by r^k (homogeneous extension).
// Requires 0 <= n <= 2k.
double eval_H(int k, int n, const SpherePoint& p, double r = 1.0);

// Exact homogeneous polynomial of degree k whose restriction to S^2 is
// H_k^n; it is harmonic (laplacian == 0) with rational coefficients times
// N_{k,m}.
PolyField harmonic_to_poly(int k, int n);

// Zonal (reproducing) kernel of the degree-k harmonics on S^{m-1}:
//   R_k(x, y) = ((2k+m-2)/(m-2)) C_k^{(m/2-1)}(<x,y>)
// (for m = 3 this is (2k+1) P_k(<x,y>)), normalized so that
//   (1/|S^{m-1}|) integral R_k(x,y) H(y) dy = H(x).
// Throws std::domain_error for m < 3.
double kernel_R(int m, int k, const Vec3& x, const Vec3& y);

// Basis Z_t(x) = sum_j R_k(x, eta_j) a_{jt} orthonormalized through
// A = G^{-1/2}, where G_ij = R_k(eta_i, eta_j) is the Gram matrix of the
// kernels under the mean measure.
struct ZonalHarmonicBasis {
  int k = 0;
  std::vector<Vec3> eta;
  RealMatrix gram;          // G_ij = R_k(eta_i, eta_j)
  RealMatrix coefficients;  // A = G^{-1/2}, symmetric

  double eval(int t, const Vec3& x) const;
};

// Requires exactly 2k+1 unit points (throws std::invalid_argument
// otherwise); throws SingularGramError when the ensemble's Gram matrix has
// an eigenvalue below `floor`.
ZonalHarmonicBasis zonal_harmonic_basis(int k, const std::vector<Vec3>& points,
                                        double floor = 1e-12);

}  // namespace mono
