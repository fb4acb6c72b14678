#include "mono/sphere.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mono/orthopoly.hpp"

namespace mono {

namespace {
constexpr double kPi = std::numbers::pi;
}

double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 normalized(const Vec3& a) {
  const double n = norm(a);
  if (n == 0.0) throw std::invalid_argument("normalized: zero vector");
  return {a[0] / n, a[1] / n, a[2] / n};
}

Vec3 add(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

Vec3 sub(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec3 scale(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }

Multivector3 to_vector(const Vec3& x) {
  return Multivector3::vector(x[0], x[1], x[2]);
}

SpherePoint SpherePoint::from_unit(const Vec3& x) {
  const Vec3 u = normalized(x);
  const double phi = std::acos(std::clamp(u[2], -1.0, 1.0));
  double theta = std::atan2(u[1], u[0]);
  if (theta < 0.0) theta += 2.0 * kPi;
  return {theta, phi};
}

Vec3 SpherePoint::cart() const {
  const double sp = std::sin(phi);
  return {std::cos(theta) * sp, std::sin(theta) * sp, std::cos(phi)};
}

Multivector3 SpherePoint::omega() const { return to_vector(cart()); }

void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  // Roots come in +/- pairs; solve the upper half by Newton from the
  // Chebyshev-like initial guess.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      const double p = legendre(n, x);
      dp = legendre_deriv(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    dp = legendre_deriv(n, x);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[static_cast<std::size_t>(i)] = -x;
    nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
}

QuadratureRule product_rule(int deg) {
  if (deg < 0) throw std::invalid_argument("product_rule: deg must be >= 0");
  const int nu = deg + 1;
  const int ntheta = 2 * deg + 2;

  std::vector<double> u_nodes, u_weights;
  gauss_legendre(nu, u_nodes, u_weights);

  QuadratureRule rule;
  rule.degree = 2 * deg;
  rule.nodes.reserve(static_cast<std::size_t>(nu * ntheta));
  rule.points.reserve(static_cast<std::size_t>(nu * ntheta));
  rule.weights.reserve(static_cast<std::size_t>(nu * ntheta));
  const double w_theta = 2.0 * kPi / ntheta;
  for (int i = 0; i < nu; ++i) {
    const double phi = std::acos(u_nodes[static_cast<std::size_t>(i)]);
    for (int j = 0; j < ntheta; ++j) {
      const double theta = 2.0 * kPi * j / ntheta;
      SpherePoint p{theta, phi};
      rule.nodes.push_back(p);
      rule.points.push_back(p.cart());
      rule.weights.push_back(u_weights[static_cast<std::size_t>(i)] * w_theta);
    }
  }
  return rule;
}

Multivector3 integrate(const SphereFunction& f, const QuadratureRule& rule) {
  Multivector3 acc;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    acc += rule.weights[i] * f(rule.nodes[i]);
  }
  return acc;
}

Multivector3 inner(const SphereFunction& f, const SphereFunction& g,
                   const QuadratureRule& rule) {
  Multivector3 acc;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    acc += rule.weights[i] * (conj(f(rule.nodes[i])) * g(rule.nodes[i]));
  }
  return acc;
}

Vec3 tangent_project(const Vec3& x, const Vec3& v) {
  const double d = dot(x, v);
  return {v[0] - d * x[0], v[1] - d * x[1], v[2] - d * x[2]};
}

Vec3 geodesic_step(const Vec3& x, const Vec3& w, double t) {
  if (std::fabs(norm(x) - 1.0) > 1e-8) {
    throw std::invalid_argument("geodesic_step: x is not a unit vector");
  }
  if (std::fabs(norm(w) - 1.0) > 1e-8) {
    throw std::invalid_argument("geodesic_step: w is not a unit vector");
  }
  if (std::fabs(dot(x, w)) > 1e-8) {
    throw std::invalid_argument("geodesic_step: w is not tangent at x");
  }
  const double c = std::cos(t), s = std::sin(t);
  return normalized({c * x[0] + s * w[0], c * x[1] + s * w[1],
                     c * x[2] + s * w[2]});
}

}  // namespace mono
