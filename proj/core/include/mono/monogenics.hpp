#pragma once

// Spherical monogenics: null solutions of the Dirac operator
// d = e1 d/dx1 + e2 d/dx2 + e3 d/dx3 restricted to S^2.  A degree-deg basis
// {F_deg^n : n = 0..deg} arises by applying d to the degree-(deg+1)
// harmonics and pairing the sin/cos partners:
//   F^0 = d H^0,   F^n = d H^{2n} - (d H^{2n-1}) e12   (n >= 1).
// Two independent representations are maintained as mutual oracles: the
// exact polynomial route (monogenic_to_poly) and closed spherical forms in
// Jacobi polynomials and bivector exponentials (eval_F).

#include <vector>

#include "mono/polyfield.hpp"
#include "mono/sphere.hpp"

namespace mono {

// Dirac operator sum_i e_i d/dx_i (coefficients multiplied on the left).
// Satisfies dirac(dirac(p)) = -laplacian(p) identically.
PolyField dirac(const PolyField& p);

// Spherical Dirac operator Gamma = -sum_{i<j} e_ij (x_i d_j - x_j d_i),
// exact on polynomial fields.  On a degree-k harmonic field it satisfies
// Gamma^2 = k(k+1) + Gamma (the tangential Laplacian identity in R^3).
PolyField gamma_poly(const PolyField& p);

// Gamma applied to a black-box sphere function via its spherical form
//   Gamma f = (1/sin phi) e23 e^{-e12 th} e^{phi e13 e^{-e12 th}} df/dth
//           + e13 e^{-e12 th} df/dphi,
// with central finite differences of step h for the partials.  Throws
// std::domain_error when phi is within 1e-8 of a pole (the chart degenerates).
Multivector3 gamma_op(const SphereFunction& f, const SpherePoint& p,
                      double h = 1e-6);

// Squared L^2(S^2) norm (full measure, 4 pi) of F_deg^n:
//   n == 0:        K(2K+1)
//   1 <= n <= deg: 2(2K+1)(K-n),      K = deg+1.
double monogenic_norm_squared(int deg, int n);

// Closed-form evaluation of F_deg^n, 0 <= n <= deg.
Multivector3 eval_F(int deg, int n, const SpherePoint& p);

// F_deg^n / ||F_deg^n||, unit norm in L^2(S^2).
Multivector3 eval_F_normalized(int deg, int n, const SpherePoint& p);

// Exact polynomial representation via the Dirac pairing above.  Accepts
// n = 0..deg+1; the extra index deg+1 is the dependent element
// F_deg^{deg+1} built from the top harmonic pair, which equals
// sqrt((deg+1)/2) * F_deg^deg * e13 (see extra_relation_check).
PolyField monogenic_to_poly(int deg, int n);

// Reproducing kernel of the degree-k monogenics on S^{m-1} under the mean
// measure (Gegenbauer form, mu = m/2 - 1):
//   K_k(x,y) = ((k+m-2)/(m-2)) C_k^{mu}(<x,y>) + (x ^ y) C_{k-1}^{mu+1}(<x,y>)
// with x ^ y the wedge bivector.  For m = 3:
//   (k+1) P_k(t) + (x ^ y) C_{k-1}^{3/2}(t),  K_k(x,x) = k+1.
// Reproduction: F(x) = (1/4pi) sum_i w_i K_k(x, y_i) F(y_i).
// Throws std::domain_error for m < 3.
Multivector3 kernel_K(int m, int k, const Vec3& x, const Vec3& y);

// Gram of the normalized degree-k basis sampled on the k+1 equator points
// theta_j = 2 pi j/(k+1), phi = pi/2 (plain sum, no weights):
//   entry(n,l) = sum_j conj(F~_k^n(x_j)) F~_k^l(x_j).
// The scalar parts are diagonal for every k; for odd k the anti-diagonal
// n + l = k picks up a pure-e13 aliasing term, which is why the report
// tracks the scalar and full-norm readings separately.
struct EquatorGramReport {
  int k = 0;
  std::vector<Multivector3> entries;  // (k+1) x (k+1), row-major
  double max_offdiag_scalar = 0.0;    // max |scalar part| off the diagonal
  double max_offdiag_norm = 0.0;      // max entry norm off the diagonal
  double min_diagonal = 0.0;          // min scalar part on the diagonal

  const Multivector3& entry(int n, int l) const {
    return entries[static_cast<std::size_t>(n * (k + 1) + l)];
  }
};

EquatorGramReport equator_gram(int k);

// Checks the dependent-element relation for degree k-1 (k >= 1):
// the pairing-built F_{k-1}^k is a positive scalar multiple of
// F_{k-1}^{k-1} e13.  `scale` is the fitted multiple (sqrt(k/2) under this
// library's unit-norm convention), `residual` the max pointwise error after
// normalizing both sides to unit L^2 norm.
struct RemarkReport {
  int k = 0;
  double scale = 0.0;
  double expected_scale = 0.0;  // sqrt(k/2)
  double residual = 0.0;
};

RemarkReport extra_relation_check(int k);

}  // namespace mono
