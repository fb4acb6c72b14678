#include "mono/harmonics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "mono/orthopoly.hpp"

namespace mono {

namespace {

constexpr double kPi = std::numbers::pi;

void check_harmonic_index(int k, int n) {
  if (k < 0 || n < 0 || n > 2 * k) {
    throw std::out_of_range("harmonic index: need k >= 0 and 0 <= n <= 2k");
  }
}

// Binomial coefficient as an exact double (arguments stay tiny here).
double binom(int n, int r) {
  if (r < 0 || r > n) return 0.0;
  double v = 1.0;
  for (int i = 0; i < r; ++i) v = v * (n - i) / (i + 1);
  return std::round(v);
}

// Coefficients of P_n^{(m,m)} in ascending powers of x, from the explicit
// representation 2^{-n} sum_s C(n+m, n-s) C(n+m, s) (x-1)^s (x+1)^{n-s}.
// All intermediates are integers divided by 2^n, hence exact in double for
// the degrees used here.
std::vector<double> jacobi_coeffs(int n, int m) {
  std::vector<double> poly(static_cast<std::size_t>(n) + 1, 0.0);
  const double scale = std::ldexp(1.0, -n);
  for (int s = 0; s <= n; ++s) {
    const double c = binom(n + m, n - s) * binom(n + m, s) * scale;
    // (x-1)^s (x+1)^{n-s}, ascending convolution.
    std::vector<double> p1(static_cast<std::size_t>(s) + 1);
    for (int i = 0; i <= s; ++i) {
      p1[static_cast<std::size_t>(i)] =
          ((s - i) % 2 ? -1.0 : 1.0) * binom(s, i);
    }
    std::vector<double> p2(static_cast<std::size_t>(n - s) + 1);
    for (int i = 0; i <= n - s; ++i) {
      p2[static_cast<std::size_t>(i)] = binom(n - s, i);
    }
    for (std::size_t i = 0; i < p1.size(); ++i) {
      for (std::size_t j = 0; j < p2.size(); ++j) {
        poly[i + j] += c * p1[i] * p2[j];
      }
    }
  }
  return poly;
}

double factorial(int n) {
  double v = 1.0;
  for (int i = 2; i <= n; ++i) v *= i;
  return v;
}

}  // namespace

double harmonic_norm_constant(int k, int m) {
  if (k < 0 || m < 0 || m > k) {
    throw std::out_of_range("harmonic_norm_constant: need 0 <= m <= k");
  }
  if (m == 0) return std::sqrt((2.0 * k + 1.0) / (4.0 * kPi));
  // sqrt((k-m)!(k+m)!)/k! = sqrt(prod_{i=1..m}(k+i) / prod_{i=0..m-1}(k-i)).
  double ratio = 1.0;
  for (int i = 1; i <= m; ++i) ratio *= static_cast<double>(k + i);
  for (int i = 0; i < m; ++i) ratio /= static_cast<double>(k - i);
  return std::sqrt((2.0 * k + 1.0) / (2.0 * kPi) * ratio) * std::ldexp(1.0, -m);
}

double eval_H(int k, int n, const SpherePoint& p, double r) {
  check_harmonic_index(k, n);
  const double u = std::cos(p.phi);
  const double rk = std::pow(r, k);
  if (n == 0) {
    return rk * harmonic_norm_constant(k, 0) * legendre(k, u);
  }
  const int m = (n + 1) / 2;
  const double ang =
      (n % 2 == 0) ? std::cos(m * p.theta) : std::sin(m * p.theta);
  return rk * harmonic_norm_constant(k, m) * std::pow(std::sin(p.phi), m) *
         jacobi(k - m, m, m, u) * ang;
}

PolyField harmonic_to_poly(int k, int n) {
  check_harmonic_index(k, n);
  const int m = (n == 0) ? 0 : (n + 1) / 2;
  const std::vector<double> cj = jacobi_coeffs(k - m, m);

  // T_m = Re (x1 + i x2)^m and U_m = Im (x1 + i x2)^m as monomial maps;
  // the angular factor is sin^m(phi) cos/sin(m theta) = T_m/U_m on S^2.
  std::map<Monomial, double> ang;
  for (int i = 0; i <= m; ++i) {
    const double c = binom(m, i);
    const Monomial mono{m - i, i, 0};
    const bool want_real = (n % 2 == 0);  // n == 0 included
    switch (i % 4) {
      case 0:
        if (want_real) ang[mono] += c;
        break;
      case 1:
        if (!want_real) ang[mono] += c;
        break;
      case 2:
        if (want_real) ang[mono] -= c;
        break;
      default:
        if (!want_real) ang[mono] -= c;
        break;
    }
  }

  const double norm_c = harmonic_norm_constant(k, m);
  PolyField out;
  // P_{k-m}^{(m,m)}(u) with u = x3/r contributes x3^d r^{k-m-d}; parity of
  // the Jacobi polynomial makes k-m-d even whenever cj[d] != 0, so
  // r^{k-m-d} = (x1^2+x2^2+x3^2)^h expands polynomially.
  for (int d = 0; d <= k - m; ++d) {
    const double cd = cj[static_cast<std::size_t>(d)];
    if (cd == 0.0) continue;
    const int e = k - m - d;
    if (e % 2 != 0) continue;  // coefficient is exactly zero by parity
    const int h = e / 2;
    for (int i = 0; i <= h; ++i) {
      for (int j = 0; j <= h - i; ++j) {
        const int l = h - i - j;
        const double multinom =
            factorial(h) / (factorial(i) * factorial(j) * factorial(l));
        for (const auto& [amono, ac] : ang) {
          out.add_term({amono.a + 2 * i, amono.b + 2 * j, 2 * l + d},
                       Multivector3::scalar(ac * multinom * cd * norm_c));
        }
      }
    }
  }
  return out;
}

double kernel_R(int m, int k, const Vec3& x, const Vec3& y) {
  if (m < 3) throw std::domain_error("kernel_R: requires dimension m >= 3");
  if (k < 0) throw std::out_of_range("kernel_R: requires k >= 0");
  const double t = dot(x, y);
  const double mu = 0.5 * m - 1.0;
  return (2.0 * k + m - 2.0) / (m - 2.0) * gegenbauer(k, mu, t);
}

double ZonalHarmonicBasis::eval(int t, const Vec3& x) const {
  const std::size_t n = eta.size();
  if (t < 0 || static_cast<std::size_t>(t) >= n) {
    throw std::out_of_range("ZonalHarmonicBasis::eval: bad basis index");
  }
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    acc += kernel_R(3, k, x, eta[j]) * coefficients(j, static_cast<std::size_t>(t));
  }
  return acc;
}

ZonalHarmonicBasis zonal_harmonic_basis(int k, const std::vector<Vec3>& points,
                                        double floor) {
  if (k < 0) throw std::invalid_argument("zonal_harmonic_basis: k >= 0");
  const std::size_t expected = 2 * static_cast<std::size_t>(k) + 1;
  if (points.size() != expected) {
    throw std::invalid_argument(
        "zonal_harmonic_basis: need exactly 2k+1 points");
  }
  ZonalHarmonicBasis basis;
  basis.k = k;
  basis.eta.reserve(points.size());
  for (const Vec3& p : points) basis.eta.push_back(normalized(p));

  basis.gram = RealMatrix(expected, expected);
  for (std::size_t i = 0; i < expected; ++i) {
    for (std::size_t j = 0; j < expected; ++j) {
      basis.gram(i, j) = kernel_R(3, k, basis.eta[i], basis.eta[j]);
    }
  }
  basis.coefficients = real_sym_inv_sqrt(basis.gram, floor);
  return basis;
}

}  // namespace mono
