#include "mono/monogenics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mono/harmonics.hpp"
#include "mono/orthopoly.hpp"

namespace mono {

namespace {

constexpr double kPi = std::numbers::pi;

Monomial unit_monomial(int axis) {
  Monomial m;
  (axis == 1 ? m.a : axis == 2 ? m.b : m.c) = 1;
  return m;
}

}  // namespace

PolyField dirac(const PolyField& p) {
  PolyField out;
  out += p.diff(1).left_mul(kE1);
  out += p.diff(2).left_mul(kE2);
  out += p.diff(3).left_mul(kE3);
  return out;
}

PolyField gamma_poly(const PolyField& p) {
  struct Pair {
    int i, j;
    Multivector3 blade;
  };
  const Pair pairs[] = {{1, 2, kE12}, {1, 3, kE13}, {2, 3, kE23}};
  PolyField out;
  for (const Pair& pr : pairs) {
    PolyField rot = p.diff(pr.j).shift(unit_monomial(pr.i));
    rot -= p.diff(pr.i).shift(unit_monomial(pr.j));
    out -= rot.left_mul(pr.blade);
  }
  return out;
}

Multivector3 gamma_op(const SphereFunction& f, const SpherePoint& p, double h) {
  if (p.phi < 1e-8 || p.phi > kPi - 1e-8) {
    throw std::domain_error("gamma_op: chart degenerates at the poles");
  }
  const Multivector3 f_th =
      (f({p.theta + h, p.phi}) - f({p.theta - h, p.phi})) * (0.5 / h);
  const Multivector3 f_ph =
      (f({p.theta, p.phi + h}) - f({p.theta, p.phi - h})) * (0.5 / h);

  const Multivector3 e12t = exp_bivector(-p.theta * kE12);
  const Multivector3 axis = kE13 * e12t;  // e13 cos(th) + e23 sin(th)
  const Multivector3 term1 =
      (1.0 / std::sin(p.phi)) * (kE23 * e12t * exp_bivector(p.phi * axis)) *
      f_th;
  const Multivector3 term2 = (kE13 * e12t) * f_ph;
  return term1 + term2;
}

double monogenic_norm_squared(int deg, int n) {
  if (deg < 0 || n < 0 || n > deg) {
    throw std::out_of_range("monogenic_norm_squared: need 0 <= n <= deg");
  }
  const double K = deg + 1;
  if (n == 0) return K * (2.0 * K + 1.0);
  return 2.0 * (2.0 * K + 1.0) * (K - n);
}

Multivector3 eval_F(int deg, int n, const SpherePoint& p) {
  if (deg < 0 || n < 0 || n > deg) {
    throw std::out_of_range("eval_F: need 0 <= n <= deg");
  }
  const int K = deg + 1;
  const double u = std::cos(p.phi);
  const Multivector3 w = p.omega();

  if (n == 0) {
    const double a = K * legendre(K, u);
    const double dP = 0.5 * (K + 1) * jacobi(K - 1, 1.0, 1.0, u);
    const Multivector3 term2 =
        (-dP * std::sin(p.phi)) * (kE13 * exp_bivector(-p.theta * kE12));
    return harmonic_norm_constant(K, 0) *
           (w * (Multivector3::scalar(a) + term2));
  }

  const Multivector3 e12t = exp_bivector(-p.theta * kE12);
  const Multivector3 axis = kE13 * e12t;
  const Multivector3 exp_phi = exp_bivector(-p.phi * axis);
  const Multivector3 t1 =
      (static_cast<double>(K - n) * jacobi(K - n, n, n, u)) *
      (axis * exp_phi * exp_bivector(-(n * p.theta) * kE12));
  const Multivector3 t2 =
      (-static_cast<double>(K) * jacobi(K - n - 1, n, n, u)) *
      (kE13 * exp_bivector(-((n + 1) * p.theta) * kE12));
  return (harmonic_norm_constant(K, n) *
          std::pow(std::sin(p.phi), n - 1)) *
         (w * (t1 + t2));
}

Multivector3 eval_F_normalized(int deg, int n, const SpherePoint& p) {
  return eval_F(deg, n, p) * (1.0 / std::sqrt(monogenic_norm_squared(deg, n)));
}

PolyField monogenic_to_poly(int deg, int n) {
  if (deg < 0 || n < 0 || n > deg + 1) {
    throw std::out_of_range("monogenic_to_poly: need 0 <= n <= deg+1");
  }
  const int k = deg + 1;  // harmonic degree
  if (n == 0) return dirac(harmonic_to_poly(k, 0));
  if (n == k) {
    // Top (dependent) element: the two Dirac images coincide up to a right
    // e12 factor, so the usual pairing cancels; the element is the single
    // Dirac image of the highest-order harmonic.
    return dirac(harmonic_to_poly(k, 2 * k));
  }
  PolyField out = dirac(harmonic_to_poly(k, 2 * n));
  out -= dirac(harmonic_to_poly(k, 2 * n - 1)).right_mul(kE12);
  return out;
}

Multivector3 kernel_K(int m, int k, const Vec3& x, const Vec3& y) {
  if (m < 3) throw std::domain_error("kernel_K: requires dimension m >= 3");
  if (k < 0) throw std::out_of_range("kernel_K: requires k >= 0");
  const double t = dot(x, y);
  const double mu = 0.5 * m - 1.0;
  const double scalar = (k + m - 2.0) / (m - 2.0) * gegenbauer(k, mu, t);
  const double wedge_c = gegenbauer(k - 1, mu + 1.0, t);
  Multivector3 out = Multivector3::scalar(scalar);
  out.c[4] = wedge_c * (x[0] * y[1] - x[1] * y[0]);
  out.c[5] = wedge_c * (x[0] * y[2] - x[2] * y[0]);
  out.c[6] = wedge_c * (x[1] * y[2] - x[2] * y[1]);
  return out;
}

EquatorGramReport equator_gram(int k) {
  if (k < 0) throw std::out_of_range("equator_gram: requires k >= 0");
  const int count = k + 1;

  EquatorGramReport report;
  report.k = k;
  report.entries.assign(static_cast<std::size_t>(count * count),
                        Multivector3{});

  // Values of the normalized basis at the equator nodes.
  std::vector<std::vector<Multivector3>> vals(
      static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) {
    auto& row = vals[static_cast<std::size_t>(n)];
    row.reserve(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
      const SpherePoint pt{2.0 * kPi * j / count, 0.5 * kPi};
      row.push_back(eval_F_normalized(k, n, pt));
    }
  }

  bool first_diag = true;
  for (int n = 0; n < count; ++n) {
    for (int l = 0; l < count; ++l) {
      Multivector3 acc;
      for (int j = 0; j < count; ++j) {
        acc += conj(vals[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)]) *
               vals[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
      }
      report.entries[static_cast<std::size_t>(n * count + l)] = acc;
      if (n == l) {
        if (first_diag || acc.scalar_part() < report.min_diagonal) {
          report.min_diagonal = acc.scalar_part();
          first_diag = false;
        }
      } else {
        report.max_offdiag_scalar =
            std::max(report.max_offdiag_scalar, std::fabs(acc.scalar_part()));
        report.max_offdiag_norm = std::max(report.max_offdiag_norm, acc.norm());
      }
    }
  }
  return report;
}

RemarkReport extra_relation_check(int k) {
  if (k < 1) throw std::out_of_range("extra_relation_check: requires k >= 1");
  const int deg = k - 1;
  const PolyField top = monogenic_to_poly(deg, k);
  // The coincidence dirac(H_k^{2k}) = dirac(H_k^{2k-1}) e12 is why the top
  // element is dependent; its deviation is folded into the residual below.
  const PolyField alias =
      dirac(harmonic_to_poly(k, 2 * k - 1)).right_mul(kE12);

  // After unit normalization the top element equals F_deg^{deg} e13; the raw
  // scale is therefore the ratio of the two norms (sqrt(k/2) for k >= 2, and
  // 1 in the degenerate constant case k = 1, where F_0^0 has the n = 0 norm).
  const double lhs_norm = std::sqrt(k * (2.0 * k + 1.0));
  const double rhs_norm = std::sqrt(monogenic_norm_squared(deg, deg));

  RemarkReport report;
  report.k = k;
  report.expected_scale = lhs_norm / rhs_norm;

  double dot_lr = 0.0, dot_rr = 0.0, max_resid = 0.0;
  const int n_theta = 8, n_phi = 5;
  for (int it = 0; it < n_theta; ++it) {
    for (int ip = 0; ip < n_phi; ++ip) {
      const SpherePoint p{2.0 * kPi * it / n_theta,
                          0.2 + (kPi - 0.4) * ip / (n_phi - 1)};
      const Vec3 x = p.cart();
      const Multivector3 lhs = top.eval(x);
      const Multivector3 rhs = eval_F(deg, deg, p) * kE13;
      for (int i = 0; i < kBladeCount; ++i) {
        dot_lr += lhs.c[i] * rhs.c[i];
        dot_rr += rhs.c[i] * rhs.c[i];
      }
      const Multivector3 diff =
          lhs * (1.0 / lhs_norm) - rhs * (1.0 / rhs_norm);
      max_resid = std::max(max_resid, diff.max_abs());
      max_resid = std::max(max_resid, (lhs - alias.eval(x)).max_abs());
    }
  }
  report.scale = dot_rr > 0.0 ? dot_lr / dot_rr : 0.0;
  report.residual = max_resid;
  return report;
}

}  // namespace mono
