#include "mono/orthopoly.hpp"

#include <stdexcept>

namespace mono {

double jacobi(int n, double alpha, double beta, double x) {
  if (alpha <= -1.0 || beta <= -1.0) {
    throw std::domain_error("jacobi: requires alpha > -1 and beta > -1");
  }
  if (n < 0) return 0.0;
  if (n == 0) return 1.0;
  double p_prev = 1.0;
  double p = (alpha + 1.0) + (alpha + beta + 2.0) * (x - 1.0) / 2.0;
  for (int m = 2; m <= n; ++m) {
    const double a = alpha, b = beta;
    const double c1 = 2.0 * m * (m + a + b) * (2.0 * m + a + b - 2.0);
    const double c2 = (2.0 * m + a + b - 1.0) *
                      ((2.0 * m + a + b) * (2.0 * m + a + b - 2.0) * x +
                       a * a - b * b);
    const double c3 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * (2.0 * m + a + b);
    const double p_next = (c2 * p - c3 * p_prev) / c1;
    p_prev = p;
    p = p_next;
  }
  return p;
}

double jacobi_deriv(int n, double alpha, double beta, double x) {
  if (n <= 0) {
    if (alpha <= -1.0 || beta <= -1.0) {
      throw std::domain_error("jacobi_deriv: requires alpha > -1 and beta > -1");
    }
    return 0.0;
  }
  return 0.5 * (n + alpha + beta + 1.0) *
         jacobi(n - 1, alpha + 1.0, beta + 1.0, x);
}

double legendre(int n, double x) {
  if (n < 0) return 0.0;
  if (n == 0) return 1.0;
  double p_prev = 1.0;
  double p = x;
  for (int m = 2; m <= n; ++m) {
    const double p_next = ((2.0 * m - 1.0) * x * p - (m - 1.0) * p_prev) / m;
    p_prev = p;
    p = p_next;
  }
  return p;
}

double legendre_deriv(int n, double x) {
  if (n <= 0) return 0.0;
  return gegenbauer(n - 1, 1.5, x);
}

double gegenbauer(int k, double mu, double x) {
  if (mu <= -0.5 || mu == 0.0) {
    throw std::domain_error("gegenbauer: requires mu > -1/2 and mu != 0");
  }
  if (k < 0) return 0.0;
  if (k == 0) return 1.0;
  double c_prev = 1.0;
  double c = 2.0 * mu * x;
  for (int m = 2; m <= k; ++m) {
    const double c_next =
        (2.0 * (m + mu - 1.0) * x * c - (m + 2.0 * mu - 2.0) * c_prev) / m;
    c_prev = c;
    c = c_next;
  }
  return c;
}

double gegenbauer_deriv(int k, double mu, double x) {
  if (k <= 0) {
    if (mu <= -0.5 || mu == 0.0) {
      throw std::domain_error(
          "gegenbauer_deriv: requires mu > -1/2 and mu != 0");
    }
    return 0.0;
  }
  return 2.0 * mu * gegenbauer(k - 1, mu + 1.0, x);
}

}  // namespace mono
