#include "mono/qlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mono {

namespace {

using Complex = std::complex<double>;

double frobenius(const ComplexMatrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) s += std::norm(m(i, j));
  }
  return std::sqrt(s);
}

double offdiag_frobenius(const ComplexMatrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j) s += std::norm(m(i, j));
    }
  }
  return std::sqrt(s);
}

void require_square(std::size_t rows, std::size_t cols, const char* who) {
  if (rows != cols) {
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
  }
}

}  // namespace

double max_abs(const RealMatrix& m) {
  double v = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      v = std::max(v, std::fabs(m(i, j)));
    }
  }
  return v;
}

double max_abs(const ComplexMatrix& m) {
  double v = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      v = std::max(v, std::abs(m(i, j)));
    }
  }
  return v;
}

double max_abs(const EvenMatrix& m) {
  double v = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      v = std::max(v, m(i, j).norm());
    }
  }
  return v;
}

double max_abs(const QuatMatrix& m) {
  double v = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      v = std::max(v, m(i, j).norm());
    }
  }
  return v;
}

QuatMatrix adjoint(const QuatMatrix& m) {
  QuatMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = conj(m(i, j));
  }
  return out;
}

EvenMatrix adjoint(const EvenMatrix& m) {
  EvenMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = conj(m(i, j));
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  }
  return out;
}

QuatMatrix tau(const EvenMatrix& m) {
  QuatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = tau(m(i, j));
  }
  return out;
}

EvenMatrix tau_inv(const QuatMatrix& m) {
  EvenMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = tau_inv(m(i, j));
  }
  return out;
}

ComplexMatrix chi(const QuatMatrix& a) {
  require_square(a.rows(), a.cols(), "chi");
  const std::size_t n = a.rows();
  ComplexMatrix out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Quaternion& q = a(i, j);
      const Complex q1(q.w, q.z);   // component along span{1, i}
      const Complex q2(q.y, -q.x);  // coefficient of e2 in q = q1 + q2 e2
      out(i, j) = q1;
      out(i, j + n) = q2;
      out(i + n, j) = -std::conj(q2);
      out(i + n, j + n) = std::conj(q1);
    }
  }
  return out;
}

bool is_chi_structured(const ComplexMatrix& c, double tol) {
  if (c.rows() != c.cols() || c.rows() % 2 != 0) return false;
  const std::size_t n = c.rows() / 2;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(c(i + n, j + n) - std::conj(c(i, j))) > tol) return false;
      if (std::abs(c(i + n, j) + std::conj(c(i, j + n))) > tol) return false;
    }
  }
  return true;
}

QuatMatrix chi_inv(const ComplexMatrix& c, double tol) {
  if (c.rows() != c.cols() || c.rows() % 2 != 0 || !is_chi_structured(c, tol)) {
    throw StructureError(
        "chi_inv: matrix does not have the quaternionic block structure");
  }
  const std::size_t n = c.rows() / 2;
  QuatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Average the redundant blocks so the round trip is self-adjoint even
      // at the tolerance boundary.
      const Complex q1 = 0.5 * (c(i, j) + std::conj(c(i + n, j + n)));
      const Complex q2 = 0.5 * (c(i, j + n) - std::conj(c(i + n, j)));
      out(i, j) = Quaternion{q1.real(), -q2.imag(), q2.real(), q1.imag()};
    }
  }
  return out;
}

HermitianEig hermitian_eig(const ComplexMatrix& c) {
  require_square(c.rows(), c.cols(), "hermitian_eig");
  const std::size_t n = c.rows();
  ComplexMatrix a = c;
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double stop = 1e-13 * std::max(frobenius(c), 1e-300);
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (offdiag_frobenius(a) < stop) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        // Absorb the phase of a_pq so the rotation is real:
        // with u = conj(a_pq)/|a_pq| the transformed pivot is |a_pq|.
        const Complex u = std::conj(apq) / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double t_arg = (aqq - app) / (2.0 * mag);
        const double t = (t_arg >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(t_arg) + std::sqrt(1.0 + t_arg * t_arg));
        const double cth = 1.0 / std::sqrt(1.0 + t * t);
        const double sth = t * cth;

        // Column update A <- A R with R = I except
        // R(p,p)=c, R(p,q)=s, R(q,p)=-u s, R(q,q)=u c.
        for (std::size_t i = 0; i < n; ++i) {
          const Complex aip = a(i, p);
          const Complex aiq = a(i, q);
          a(i, p) = cth * aip - u * sth * aiq;
          a(i, q) = sth * aip + u * cth * aiq;
          const Complex vip = v(i, p);
          const Complex viq = v(i, q);
          v(i, p) = cth * vip - u * sth * viq;
          v(i, q) = sth * vip + u * cth * viq;
        }
        // Row update A <- R* A.
        for (std::size_t j = 0; j < n; ++j) {
          const Complex apj = a(p, j);
          const Complex aqj = a(q, j);
          a(p, j) = cth * apj - std::conj(u) * sth * aqj;
          a(q, j) = sth * apj + std::conj(u) * cth * aqj;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = Complex(app - t * mag, 0.0);
        a(q, q) = Complex(aqq + t * mag, 0.0);
      }
    }
  }

  // Sort ascending; stable so equal eigenvalues keep Jacobi order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  HermitianEig out;
  out.eigenvalues.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.eigenvalues[col] = a(src, src).real();
    // Phase convention: largest-modulus component real positive.
    std::size_t imax = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double m = std::abs(v(i, src));
      if (m > best) {
        best = m;
        imax = i;
      }
    }
    Complex phase(1.0, 0.0);
    if (best > 0.0) phase = std::conj(v(imax, src)) / best;
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, col) = phase * v(i, src);
  }
  return out;
}

ComplexMatrix hermitian_inv_sqrt(const ComplexMatrix& c, double floor) {
  const HermitianEig eig = hermitian_eig(c);
  const std::size_t n = c.rows();
  for (double lambda : eig.eigenvalues) {
    if (lambda < floor) {
      throw SingularGramError(
          "hermitian_inv_sqrt: eigenvalue below invertibility floor");
    }
  }
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc(0.0, 0.0);
      for (std::size_t l = 0; l < n; ++l) {
        acc += eig.vectors(i, l) * std::conj(eig.vectors(j, l)) /
               std::sqrt(eig.eigenvalues[l]);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

RealSymEig real_sym_eig(const RealMatrix& c) {
  require_square(c.rows(), c.cols(), "real_sym_eig");
  const std::size_t n = c.rows();
  ComplexMatrix cc(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) cc(i, j) = c(i, j);
  }
  const HermitianEig eig = hermitian_eig(cc);
  RealSymEig out;
  out.eigenvalues = eig.eigenvalues;
  out.vectors = RealMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.vectors(i, j) = eig.vectors(i, j).real();
    }
  }
  return out;
}

RealMatrix real_sym_inv_sqrt(const RealMatrix& c, double floor) {
  const RealSymEig eig = real_sym_eig(c);
  const std::size_t n = c.rows();
  for (double lambda : eig.eigenvalues) {
    if (lambda < floor) {
      throw SingularGramError(
          "real_sym_inv_sqrt: eigenvalue below invertibility floor");
    }
  }
  RealMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t l = 0; l < n; ++l) {
        acc += eig.vectors(i, l) * eig.vectors(j, l) /
               std::sqrt(eig.eigenvalues[l]);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

ComplexMatrix complex_inverse(const ComplexMatrix& c) {
  require_square(c.rows(), c.cols(), "complex_inverse");
  const std::size_t n = c.rows();
  ComplexMatrix a = c;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(a(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      const double m = std::abs(a(i, col));
      if (m > best) {
        best = m;
        pivot = i;
      }
    }
    if (best < 1e-300) {
      throw std::invalid_argument("complex_inverse: singular matrix");
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    const Complex d = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      const Complex f = a(i, col);
      if (f == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

EvenMatrix coefficient_matrix(const EvenMatrix& g, double floor) {
  require_square(g.rows(), g.cols(), "coefficient_matrix");
  const ComplexMatrix cg = chi(tau(g));
  const ComplexMatrix inv_sqrt = hermitian_inv_sqrt(cg, floor);
  return tau_inv(chi_inv(inv_sqrt));
}

double min_gram_eigenvalue(const EvenMatrix& g) {
  const HermitianEig eig = hermitian_eig(chi(tau(g)));
  return eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
}

}  // namespace mono
