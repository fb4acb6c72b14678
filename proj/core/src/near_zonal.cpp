#include "mono/near_zonal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mono/monogenics.hpp"

namespace mono {

namespace {

void check_index(const NearZonalBasis& basis, int t) {
  if (t < 0 || static_cast<std::size_t>(t) >= basis.eta.size()) {
    throw std::out_of_range("NearZonalBasis: basis index out of range");
  }
}

// <b, G b>_0 for an even-subalgebra coefficient vector b.
double gram_quadratic_form(const EvenMatrix& g,
                           const std::vector<EvenElement>& b) {
  EvenElement acc;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc += conj(b[i]) * g(i, j) * b[j];
    }
  }
  return acc.s;
}

}  // namespace

Multivector3 NearZonalBasis::eval(int t, const Vec3& x) const {
  check_index(*this, t);
  Multivector3 acc;
  for (std::size_t j = 0; j < eta.size(); ++j) {
    acc += kernel_K(3, k, x, eta[j]) *
           coefficients(j, static_cast<std::size_t>(t)).to_multivector();
  }
  return acc;
}

Multivector3 NearZonalBasis::zonal_term(int t, const Vec3& x) const {
  check_index(*this, t);
  const std::size_t tt = static_cast<std::size_t>(t);
  return kernel_K(3, k, x, eta[tt]) * coefficients(tt, tt).to_multivector();
}

NearZonalBasis build_near_zonal(int k, const std::vector<Vec3>& points,
                                double floor) {
  if (k < 0) throw std::invalid_argument("build_near_zonal: k must be >= 0");
  const std::size_t expected = static_cast<std::size_t>(k) + 1;
  if (points.size() != expected) {
    throw std::invalid_argument("build_near_zonal: need exactly k+1 points");
  }

  NearZonalBasis basis;
  basis.k = k;
  basis.eta.reserve(expected);
  for (const Vec3& p : points) basis.eta.push_back(normalized(p));

  basis.gram = EvenMatrix(expected, expected);
  for (std::size_t i = 0; i < expected; ++i) {
    for (std::size_t j = 0; j < expected; ++j) {
      const Multivector3 value = kernel_K(3, k, basis.eta[i], basis.eta[j]);
      basis.gram(i, j) = EvenElement::from(value);
    }
  }
  basis.coefficients = coefficient_matrix(basis.gram, floor);
  return basis;
}

double zonality_deviation(const NearZonalBasis& basis, int t) {
  check_index(basis, t);
  const std::size_t n = basis.eta.size();
  std::vector<EvenElement> b(n);
  for (std::size_t j = 0; j < n; ++j) {
    b[j] = basis.coefficients(static_cast<std::size_t>(t), j);  // row t
  }
  b[static_cast<std::size_t>(t)] = EvenElement{};
  return gram_quadratic_form(basis.gram, b);
}

double zonality_l2(const NearZonalBasis& basis, int t) {
  check_index(basis, t);
  const std::size_t n = basis.eta.size();
  std::vector<EvenElement> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = basis.coefficients(i, static_cast<std::size_t>(t));  // column t
  }
  b[static_cast<std::size_t>(t)] = EvenElement{};
  return gram_quadratic_form(basis.gram, b);
}

double zonality_l2_quadrature(const NearZonalBasis& basis, int t,
                              int quad_deg) {
  check_index(basis, t);
  if (quad_deg <= 0) quad_deg = 2 * basis.k + 2;
  const QuadratureRule rule = product_rule(quad_deg);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const Vec3& x = rule.points[i];
    const Multivector3 diff = basis.eval(t, x) - basis.zonal_term(t, x);
    acc += rule.weights[i] * diff.norm_squared();
  }
  return acc / (4.0 * std::numbers::pi);
}

}  // namespace mono
