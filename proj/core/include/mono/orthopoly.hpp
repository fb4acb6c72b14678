#pragma once

// Jacobi, Legendre and Gegenbauer polynomials evaluated by three-term
// recurrence, plus the derivative identities used throughout the basis
// constructions.  Recurrences are the primary evaluation path; the explicit
// finite-sum representation lives in the tests as an independent oracle.

namespace mono {

// Jacobi polynomial P_n^{(alpha,beta)}(x).
// Requires alpha > -1 and beta > -1 (throws std::domain_error otherwise);
// n < 0 evaluates to 0 so recurrence-style callers need no special casing.
double jacobi(int n, double alpha, double beta, double x);

// d/dx P_n^{(alpha,beta)}(x) = ((n+alpha+beta+1)/2) P_{n-1}^{(alpha+1,beta+1)}(x).
double jacobi_deriv(int n, double alpha, double beta, double x);

// Legendre polynomial P_n(x) = P_n^{(0,0)}(x) via its own recurrence.
double legendre(int n, double x);

// d/dx P_n(x) = C_{n-1}^{(3/2)}(x).
double legendre_deriv(int n, double x);

// Gegenbauer (ultraspherical) polynomial C_k^{(mu)}(x) for mu > -1/2,
// mu != 0 (throws std::domain_error otherwise); k < 0 evaluates to 0.
double gegenbauer(int k, double mu, double x);

// d/dx C_k^{(mu)}(x) = 2 mu C_{k-1}^{(mu+1)}(x).
double gegenbauer_deriv(int k, double mu, double x);

}  // namespace mono
