#pragma once

// Points on the unit sphere S^2, product quadrature rules, and the
// Clifford-valued inner product they induce.
//
// Chart convention (used consistently everywhere):
//   x = (cos(theta) sin(phi), sin(theta) sin(phi), cos(phi)),
// theta in [0, 2pi) the azimuth, phi in [0, pi] the polar angle.  The total
// measure of S^2 is 4*pi and quadrature weights always sum to that.

#include <array>
#include <functional>
#include <vector>

#include "mono/clifford.hpp"

namespace mono {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);
Vec3 normalized(const Vec3& a);
Vec3 add(const Vec3& a, const Vec3& b);
Vec3 sub(const Vec3& a, const Vec3& b);
Vec3 scale(const Vec3& a, double s);

// Embed a point as the Clifford vector x1 e1 + x2 e2 + x3 e3.
Multivector3 to_vector(const Vec3& x);

struct SpherePoint {
  double theta = 0.0;  // azimuth
  double phi = 0.0;    // polar angle from the +x3 axis

  static SpherePoint from_angles(double theta, double phi) {
    return {theta, phi};
  }
  // Angles of a unit (or near-unit) Cartesian point.
  static SpherePoint from_unit(const Vec3& x);

  Vec3 cart() const;
  // The point as a Clifford vector omega = x1 e1 + x2 e2 + x3 e3.
  Multivector3 omega() const;
};

// Nodes, Cartesian images and weights of a spherical quadrature rule.
struct QuadratureRule {
  std::vector<SpherePoint> nodes;
  std::vector<Vec3> points;     // nodes[i].cart(), precomputed
  std::vector<double> weights;  // sum to 4*pi
  int degree = 0;               // polynomial exactness on S^2

  std::size_t size() const { return weights.size(); }
};

// Tensor rule exact for restrictions of polynomials of degree <= 2*deg:
// (deg+1)-point Gauss-Legendre in u = cos(phi) crossed with a (2*deg+2)-point
// uniform trapezoid rule in theta.
QuadratureRule product_rule(int deg);

// Gauss-Legendre nodes/weights on [-1, 1] (Newton iteration on P_n).
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

using SphereFunction = std::function<Multivector3(const SpherePoint&)>;

// integrate f over S^2 with the given rule (weights carry the full 4*pi).
Multivector3 integrate(const SphereFunction& f, const QuadratureRule& rule);

// Clifford-valued inner product <f, g> = sum_i w_i conj(f(x_i)) g(x_i).
Multivector3 inner(const SphereFunction& f, const SphereFunction& g,
                   const QuadratureRule& rule);

// Projection of an ambient vector v onto the tangent plane at unit x.
Vec3 tangent_project(const Vec3& x, const Vec3& v);

// Walk along the great circle through x in unit tangent direction w:
//   x(t) = cos(t) x + sin(t) w,  renormalized.
// Throws std::invalid_argument if |x| or |w| is not 1 within 1e-8, or if
// w is not orthogonal to x within 1e-8.
Vec3 geodesic_step(const Vec3& x, const Vec3& w, double t);

}  // namespace mono
