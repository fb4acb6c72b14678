#include "mono/polyfield.hpp"

#include <cmath>
#include <stdexcept>

namespace mono {

namespace {

bool is_zero(const Multivector3& m) {
  for (double v : m.c) {
    if (v != 0.0) return false;
  }
  return true;
}

}  // namespace

PolyField PolyField::constant(const Multivector3& m) {
  PolyField p;
  p.add_term({0, 0, 0}, m);
  return p;
}

PolyField PolyField::coordinate(int axis) {
  if (axis < 1 || axis > 3) {
    throw std::out_of_range("PolyField::coordinate: axis must be 1..3");
  }
  Monomial m;
  (axis == 1 ? m.a : axis == 2 ? m.b : m.c) = 1;
  PolyField p;
  p.add_term(m, Multivector3::scalar(1.0));
  return p;
}

PolyField PolyField::identity_vector() {
  PolyField p;
  p.add_term({1, 0, 0}, kE1);
  p.add_term({0, 1, 0}, kE2);
  p.add_term({0, 0, 1}, kE3);
  return p;
}

void PolyField::add_term(const Monomial& m, const Multivector3& coeff) {
  if (is_zero(coeff)) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

PolyField& PolyField::operator+=(const PolyField& o) {
  for (const auto& [m, coeff] : o.terms_) add_term(m, coeff);
  return *this;
}

PolyField& PolyField::operator-=(const PolyField& o) {
  for (const auto& [m, coeff] : o.terms_) add_term(m, -coeff);
  return *this;
}

PolyField operator*(PolyField a, double s) {
  if (s == 0.0) return PolyField{};
  for (auto& [m, coeff] : a.terms_) coeff *= s;
  return a;
}

PolyField PolyField::left_mul(const Multivector3& m) const {
  PolyField out;
  for (const auto& [mono, coeff] : terms_) out.add_term(mono, m * coeff);
  return out;
}

PolyField PolyField::right_mul(const Multivector3& m) const {
  PolyField out;
  for (const auto& [mono, coeff] : terms_) out.add_term(mono, coeff * m);
  return out;
}

PolyField PolyField::shift(const Monomial& s) const {
  PolyField out;
  for (const auto& [mono, coeff] : terms_) {
    out.add_term({mono.a + s.a, mono.b + s.b, mono.c + s.c}, coeff);
  }
  return out;
}

PolyField operator*(const PolyField& a, const PolyField& b) {
  PolyField out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      out.add_term({ma.a + mb.a, ma.b + mb.b, ma.c + mb.c}, ca * cb);
    }
  }
  return out;
}

PolyField PolyField::diff(int axis) const {
  if (axis < 1 || axis > 3) {
    throw std::out_of_range("PolyField::diff: axis must be 1..3");
  }
  PolyField out;
  for (const auto& [m, coeff] : terms_) {
    const int e = axis == 1 ? m.a : axis == 2 ? m.b : m.c;
    if (e == 0) continue;
    Monomial d = m;
    (axis == 1 ? d.a : axis == 2 ? d.b : d.c) = e - 1;
    out.add_term(d, coeff * static_cast<double>(e));
  }
  return out;
}

Multivector3 PolyField::eval(const Vec3& x) const {
  Multivector3 acc;
  for (const auto& [m, coeff] : terms_) {
    const double v = std::pow(x[0], m.a) * std::pow(x[1], m.b) *
                     std::pow(x[2], m.c);
    acc += coeff * v;
  }
  return acc;
}

int PolyField::degree() const {
  int d = -1;
  for (const auto& [m, coeff] : terms_) d = std::max(d, m.degree());
  return d;
}

bool PolyField::is_homogeneous(int k) const {
  for (const auto& [m, coeff] : terms_) {
    if (m.degree() != k) return false;
  }
  return true;
}

double PolyField::max_abs_coeff() const {
  double v = 0.0;
  for (const auto& [m, coeff] : terms_) v = std::max(v, coeff.max_abs());
  return v;
}

PolyField laplacian(const PolyField& p) {
  PolyField out;
  for (int axis = 1; axis <= 3; ++axis) out += p.diff(axis).diff(axis);
  return out;
}

PolyField euler(const PolyField& p) {
  PolyField out;
  for (int axis = 1; axis <= 3; ++axis) {
    Monomial unit;
    (axis == 1 ? unit.a : axis == 2 ? unit.b : unit.c) = 1;
    out += p.diff(axis).shift(unit);
  }
  return out;
}

}  // namespace mono
