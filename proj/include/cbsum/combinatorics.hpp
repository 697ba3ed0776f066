// Exact integer/rational combinatorics: the slow, definition-faithful oracle
// layer everything fast is audited against.  All results are exact (mpz/mpq);
// Bernoulli and Euler sequences are memoized behind a lock.
#pragma once

#include "cbsum/rational.hpp"

#include <vector>

namespace cbsum {

mpz_class factorial_exact(unsigned long n);
mpz_class double_factorial_exact(unsigned long n);  // n!! = n(n-2)(n-4)...

// binom(n, k) for arbitrary integer n (negative allowed) via the falling
// factorial n(n-1)...(n-k+1)/k!; k < 0 yields 0.
mpz_class binomial_exact(const mpz_class& n, long k);
inline mpz_class binomial_exact(long n, long k) {
  return binomial_exact(mpz_class(n), k);
}

mpz_class central_binomial_exact(unsigned long k);  // binom(2k, k)

// Catalan number by the quotient route binom(2k,k)/(k+1).
mpz_class catalan_exact(unsigned long k);
// Independent route binom(2k,k) - binom(2k,k+1); equality is a test oracle.
mpz_class catalan_exact_via_difference(unsigned long k);

// H_n^(r) = sum_{k=1..n} 1/k^r (r >= 1); n = 0 gives 0.
Rational harmonic_exact(unsigned long n, unsigned r = 1);

// Bernoulli number B_n (B_1 = -1/2 convention) via the defining recursion
// sum_{j=0..m} binom(m+1,j) B_j = 0.
Rational bernoulli_exact(unsigned long n);

// Euler number E_n (integer; zero for odd n) via
// sum_{k=0..m} binom(2m,2k) E_{2k} = 0.
mpz_class euler_exact(unsigned long n);

// Euler polynomial E_n(x) evaluated exactly at a rational point, via
// E_n(x) = sum_k binom(n,k) (E_k / 2^k) (x - 1/2)^(n-k).
Rational euler_polynomial_eval(unsigned long n, const Rational& x);

// Dense integer polynomial, coefficient of x^j at c[j].
struct IntegerPolynomial {
  std::vector<mpz_class> c;

  long degree() const;
  const mpz_class& coeff(size_t j) const;
  Rational eval(const Rational& x) const;
  bool operator==(const IntegerPolynomial& b) const { return c == b.c; }
};

// Chebyshev polynomial of the second kind U_n by the three-term recurrence
// U_{n+1} = 2x U_n - U_{n-1}.
IntegerPolynomial chebyshev_u(unsigned long n);

}  // namespace cbsum
