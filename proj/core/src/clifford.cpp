#include "mono/clifford.hpp"

#include <cmath>
#include <stdexcept>

namespace mono {

double Multivector3::norm() const { return std::sqrt(norm_squared()); }

double Multivector3::max_abs() const {
  double m = 0.0;
  for (double v : c) m = std::max(m, std::fabs(v));
  return m;
}

Multivector3 conj(const Multivector3& a) {
  Multivector3 out;
  for (int i = 0; i < kBladeCount; ++i) {
    const int g = kBladeGrade[i];
    const int sign = ((g * (g + 1) / 2) & 1) ? -1 : 1;
    out.c[i] = sign * a.c[i];
  }
  return out;
}

Multivector3 grade(const Multivector3& a, int k) {
  if (k < 0 || k > 3) throw std::out_of_range("grade: k must be in 0..3");
  Multivector3 out;
  for (int i = 0; i < kBladeCount; ++i) {
    if (kBladeGrade[i] == k) out.c[i] = a.c[i];
  }
  return out;
}

Multivector3 exp_bivector(const Multivector3& B) {
  for (int i = 0; i < kBladeCount; ++i) {
    if (kBladeGrade[i] != 2 && std::fabs(B.c[i]) > 1e-12) {
      throw std::invalid_argument("exp_bivector: argument is not a bivector");
    }
  }
  const Multivector3 B2 = B * B;
  for (int i = 1; i < kBladeCount; ++i) {
    if (std::fabs(B2.c[i]) > 1e-12) {
      throw std::invalid_argument("exp_bivector: B^2 is not a scalar");
    }
  }
  // B^2 = -s^2 with s = |B|.
  const double s = std::sqrt(std::max(0.0, -B2.c[0]));
  double cos_s, sinc_s;
  if (s < 1e-8) {
    // Series keeps full accuracy through the removable singularity.
    cos_s = 1.0 - s * s / 2.0;
    sinc_s = 1.0 - s * s / 6.0;
  } else {
    cos_s = std::cos(s);
    sinc_s = std::sin(s) / s;
  }
  Multivector3 out = B * sinc_s;
  out.c[0] += cos_s;
  return out;
}

// ---------------------------------------------------------------------------

EvenElement EvenElement::from(const Multivector3& m, double tol) {
  for (int i : {1, 2, 3, 7}) {
    if (std::fabs(m.c[i]) > tol) {
      throw std::invalid_argument(
          "EvenElement::from: element has odd-grade part");
    }
  }
  return {m.c[0], m.c[4], m.c[5], m.c[6]};
}

Multivector3 EvenElement::to_multivector() const {
  Multivector3 m;
  m.c[0] = s;
  m.c[4] = e12;
  m.c[5] = e13;
  m.c[6] = e23;
  return m;
}

double EvenElement::norm() const { return std::sqrt(norm_squared()); }

double EvenElement::max_abs() const {
  return std::max(std::max(std::fabs(s), std::fabs(e12)),
                  std::max(std::fabs(e13), std::fabs(e23)));
}

EvenElement operator*(const EvenElement& a, const EvenElement& b) {
  // Hamilton product with (i, j, k) = (e12, e13, e23):
  //   e12 e13 = e23,  e13 e23 = e12,  e23 e12 = e13, squares = -1.
  return {
      a.s * b.s - a.e12 * b.e12 - a.e13 * b.e13 - a.e23 * b.e23,
      a.s * b.e12 + a.e12 * b.s + a.e13 * b.e23 - a.e23 * b.e13,
      a.s * b.e13 + a.e13 * b.s + a.e23 * b.e12 - a.e12 * b.e23,
      a.s * b.e23 + a.e23 * b.s + a.e12 * b.e13 - a.e13 * b.e12,
  };
}

EvenElement conj(const EvenElement& a) { return {a.s, -a.e12, -a.e13, -a.e23}; }

// ---------------------------------------------------------------------------

double Quaternion::norm() const { return std::sqrt(norm_squared()); }

double Quaternion::max_abs() const {
  return std::max(std::max(std::fabs(w), std::fabs(x)),
                  std::max(std::fabs(y), std::fabs(z)));
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {
      a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
      a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
      a.w * b.y + a.y * b.w + a.z * b.x - a.x * b.z,
      a.w * b.z + a.z * b.w + a.x * b.y - a.y * b.x,
  };
}

Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

Quaternion tau(const EvenElement& a) { return {a.s, -a.e23, a.e13, a.e12}; }

EvenElement tau_inv(const Quaternion& q) { return {q.w, q.z, q.y, -q.x}; }

}  // namespace mono
