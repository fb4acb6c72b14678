#pragma once

// Dense matrices over the even subalgebra / quaternions, the complex adjoint
// chi : M_n(H) -> M_2n(C), a cyclic-Jacobi Hermitian eigensolver, and the
// inverse square root used to orthonormalize reproducing-kernel Gram
// matrices:  A = tau^{-1} chi^{-1} (chi tau G)^{-1/2}.

#include <complex>
#include <stdexcept>
#include <vector>

#include "mono/clifford.hpp"

namespace mono {

// Raised when a Gram matrix has an eigenvalue below the invertibility floor.
class SingularGramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a complex matrix expected to lie in the image of chi does not
// have the quaternionic block structure.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_value();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("DenseMatrix: dimension mismatch");
    }
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const T& ail = a(i, l);
        for (std::size_t j = 0; j < b.cols_; ++j) {
          out(i, j) += ail * b(l, j);
        }
      }
    }
    return out;
  }

  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw std::invalid_argument("DenseMatrix: dimension mismatch");
    }
    DenseMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      out.data_[i] = a.data_[i] - b.data_[i];
    }
    return out;
  }

 private:
  static T one_value() {
    if constexpr (std::is_same_v<T, EvenElement>) {
      return EvenElement::identity();
    } else if constexpr (std::is_same_v<T, Quaternion>) {
      return Quaternion::identity();
    } else {
      return T{1};
    }
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using RealMatrix = DenseMatrix<double>;
using EvenMatrix = DenseMatrix<EvenElement>;
using QuatMatrix = DenseMatrix<Quaternion>;
using ComplexMatrix = DenseMatrix<std::complex<double>>;

// Largest |entry| (entry norm for Clifford-valued matrices).
double max_abs(const RealMatrix& m);
double max_abs(const ComplexMatrix& m);
double max_abs(const EvenMatrix& m);
double max_abs(const QuatMatrix& m);

// Conjugate transpose in the respective *-algebra.
QuatMatrix adjoint(const QuatMatrix& m);
EvenMatrix adjoint(const EvenMatrix& m);
ComplexMatrix adjoint(const ComplexMatrix& m);

// Entrywise isomorphism between even-subalgebra and quaternion matrices.
QuatMatrix tau(const EvenMatrix& m);
EvenMatrix tau_inv(const QuatMatrix& m);

// Complex adjoint: split each entry q = q1 + q2 e2 with q1 = w + z i and
// q2 = y - x i, and assemble the 2n x 2n block matrix
//   [[ A1, A2 ], [ -conj(A2), conj(A1) ]].
// It is an algebra homomorphism: chi(I) = I, chi(AB) = chi(A)chi(B),
// chi(A*) = chi(A)*, and chi(A^{-1}) = chi(A)^{-1}.
ComplexMatrix chi(const QuatMatrix& a);

// True when C is 2n x 2n and its blocks satisfy C22 = conj(C11) and
// C21 = -conj(C12) within `tol` entrywise.
bool is_chi_structured(const ComplexMatrix& c, double tol = 1e-8);

// Inverse of chi on structured matrices.  Throws StructureError if the block
// structure is violated beyond `tol` (this signals that a matrix function
// left the quaternionic subalgebra).
QuatMatrix chi_inv(const ComplexMatrix& c, double tol = 1e-8);

// ---------------------------------------------------------------------------
// Hermitian eigenproblems (cyclic Jacobi with phase absorption).

struct HermitianEig {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix vectors;            // columns, orthonormal, C V = V diag(l)
};

// Cyclic Jacobi for complex Hermitian C.  Sweeps until the off-diagonal
// Frobenius norm falls below 1e-13 * ||C||_F (at most 100 sweeps).
// Eigenvalues are returned ascending; each eigenvector is scaled so its
// largest-modulus component is real and positive (the decomposition feeds
// matrix functions, which are basis-independent, so the convention only
// serves reproducibility).
HermitianEig hermitian_eig(const ComplexMatrix& c);

// C^{-1/2} = V diag(lambda^{-1/2}) V*.  Throws SingularGramError if any
// eigenvalue is below `floor`.
ComplexMatrix hermitian_inv_sqrt(const ComplexMatrix& c, double floor = 1e-10);

struct RealSymEig {
  std::vector<double> eigenvalues;  // ascending
  RealMatrix vectors;               // columns, orthonormal
};

RealSymEig real_sym_eig(const RealMatrix& c);
RealMatrix real_sym_inv_sqrt(const RealMatrix& c, double floor = 1e-12);

// Gauss-Jordan inverse with partial pivoting (used to exercise the
// chi(A^{-1}) = chi(A)^{-1} homomorphism property).
ComplexMatrix complex_inverse(const ComplexMatrix& c);

// ---------------------------------------------------------------------------

// Orthonormalizing coefficient matrix of a self-adjoint positive-definite
// Gram matrix with even-subalgebra entries:
//   A = tau^{-1} chi^{-1} ( chi tau G )^{-1/2},
// satisfying A* G A = I.  Throws SingularGramError when an eigenvalue of
// chi(tau(G)) falls below `floor`, StructureError if the inverse square root
// loses the quaternionic block structure.
EvenMatrix coefficient_matrix(const EvenMatrix& g, double floor = 1e-10);

// Smallest eigenvalue of chi(tau(G)) for a self-adjoint G; the Gram
// positive-semidefiniteness certificate.
double min_gram_eigenvalue(const EvenMatrix& g);

}  // namespace mono
