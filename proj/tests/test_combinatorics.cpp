#include "doctest.h"

#include "cbsum/combinatorics.hpp"

using namespace cbsum;

TEST_CASE("factorials") {
  CHECK(factorial_exact(0) == 1);
  CHECK(factorial_exact(1) == 1);
  CHECK(factorial_exact(5) == 120);
  CHECK(factorial_exact(10) == 3628800);
}

TEST_CASE("double factorials") {
  CHECK(double_factorial_exact(0) == 1);
  CHECK(double_factorial_exact(1) == 1);
  CHECK(double_factorial_exact(5) == 15);
  CHECK(double_factorial_exact(6) == 48);
  CHECK(double_factorial_exact(9) == 945);
  // n! = n!! (n-1)!!
  for (unsigned long n = 2; n <= 30; ++n)
    CHECK(factorial_exact(n) ==
          double_factorial_exact(n) * double_factorial_exact(n - 1));
}

TEST_CASE("binomials with negative upper index") {
  CHECK(binomial_exact(5L, 2L) == 10);
  CHECK(binomial_exact(5L, 0L) == 1);
  CHECK(binomial_exact(4L, 7L) == 0);
  CHECK(binomial_exact(5L, -1L) == 0);
  CHECK(binomial_exact(-1L, 3L) == -1);
  CHECK(binomial_exact(-2L, 3L) == -4);
  CHECK(binomial_exact(mpz_class(-1), 2) == 1);
  // Pascal rule on a window including negative n.
  for (long n = -6; n <= 12; ++n)
    for (long k = 1; k <= 8; ++k)
      CHECK(binomial_exact(n, k) ==
            binomial_exact(n - 1, k) + binomial_exact(n - 1, k - 1));
}

TEST_CASE("central binomials and Catalan numbers") {
  CHECK(central_binomial_exact(0) == 1);
  CHECK(central_binomial_exact(1) == 2);
  CHECK(central_binomial_exact(2) == 6);
  CHECK(central_binomial_exact(3) == 20);
  CHECK(central_binomial_exact(6) == 924);
  CHECK(catalan_exact(0) == 1);
  CHECK(catalan_exact(2) == 2);
  CHECK(catalan_exact(3) == 5);
  CHECK(catalan_exact(6) == 132);
  // Quotient route == difference route.
  for (unsigned long k = 0; k <= 500; ++k)
    CHECK(catalan_exact(k) == catalan_exact_via_difference(k));
  // Segner recurrence spot check: C_{k+1} = C_k * 2(2k+1)/(k+2).
  for (unsigned long k = 0; k <= 60; ++k)
    CHECK(catalan_exact(k + 1) * (k + 2) == catalan_exact(k) * 2 * (2 * k + 1));
}

TEST_CASE("index shift for central binomials") {
  // (n+1) binom(2n+2, n+1) = 2 (2n+1) binom(2n, n)
  for (unsigned long n = 0; n <= 1000; ++n)
    CHECK((n + 1) * central_binomial_exact(n + 1) ==
          2 * (2 * n + 1) * central_binomial_exact(n));
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic_exact(0) == 0);
  CHECK(harmonic_exact(3) == Rational(11, 6));
  CHECK(harmonic_exact(4) == Rational(25, 12));
  CHECK(harmonic_exact(6) == Rational(49, 20));
  CHECK(harmonic_exact(3, 2) == Rational(49, 36));
  CHECK(harmonic_exact(2, 3) == Rational(9, 8));
  CHECK_THROWS_AS(harmonic_exact(3, 0), IndexOutOfRangeError);
  // H_n - H_{n-1} = 1/n
  for (unsigned long n = 1; n <= 40; ++n) {
    Rational d = harmonic_exact(n) - harmonic_exact(n - 1);
    CHECK(d == Rational(1, static_cast<long>(n)));
  }
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli_exact(0) == 1);
  CHECK(bernoulli_exact(1) == Rational(-1, 2));
  CHECK(bernoulli_exact(2) == Rational(1, 6));
  CHECK(bernoulli_exact(4) == Rational(-1, 30));
  CHECK(bernoulli_exact(12) == Rational(-691, 2730));
  for (unsigned long n = 3; n <= 99; n += 2) CHECK(bernoulli_exact(n) == 0);
  // Defining recursion holds as stated: sum_j binom(m+1, j) B_j = 0.
  for (unsigned long m = 1; m <= 40; ++m) {
    Rational s(0);
    for (unsigned long j = 0; j <= m; ++j)
      s += Rational(binomial_exact(static_cast<long>(m) + 1,
                                   static_cast<long>(j))) *
           bernoulli_exact(j);
    CHECK(s == 0);
  }
}

TEST_CASE("Euler numbers") {
  CHECK(euler_exact(0) == 1);
  CHECK(euler_exact(2) == -1);
  CHECK(euler_exact(4) == 5);
  CHECK(euler_exact(8) == 1385);
  CHECK(euler_exact(10) == -50521);
  for (unsigned long n = 1; n <= 39; n += 2) CHECK(euler_exact(n) == 0);
}

TEST_CASE("Euler polynomial evaluation") {
  // E_0(x) = 1, E_1(x) = x - 1/2.
  CHECK(euler_polynomial_eval(0, Rational(5, 7)) == 1);
  CHECK(euler_polynomial_eval(1, Rational(1, 3)) == Rational(-1, 6));
  Rational x(5, 7);
  for (unsigned long n = 0; n <= 40; ++n) {
    // Reflection: E_n(1 - x) = (-1)^n E_n(x).
    Rational lhs = euler_polynomial_eval(n, Rational(1) - x);
    Rational rhs = euler_polynomial_eval(n, x);
    if (n % 2) rhs = -rhs;
    CHECK(lhs == rhs);
  }
  Rational y(3, 2);
  Rational yn(1);
  for (unsigned long n = 0; n <= 40; ++n) {
    // Difference equation: E_n(x + 1) + E_n(x) = 2 x^n.
    CHECK(euler_polynomial_eval(n, y + 1) + euler_polynomial_eval(n, y) ==
          Rational(2) * yn);
    yn *= y;
  }
  // E_n(1/2) = E_n / 2^n links the polynomial to the number sequence.
  for (unsigned long n = 0; n <= 30; ++n) {
    Rational half(1, 2);
    Rational scaled(euler_exact(n));
    mpz_class pw = 1;
    pw <<= n;
    CHECK(euler_polynomial_eval(n, half) == scaled / Rational(pw));
  }
}

TEST_CASE("IntegerPolynomial access and evaluation") {
  IntegerPolynomial p{{mpz_class(1), mpz_class(2), mpz_class(3)}};
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(2) == 3);
  CHECK(p.coeff(7) == 0);
  CHECK(p.eval(Rational(5, 7)) == Rational(194, 49));
  IntegerPolynomial zero{};
  CHECK(zero.degree() == -1);
  CHECK(zero.eval(Rational(3)) == 0);
  IntegerPolynomial padded{{mpz_class(1), mpz_class(0)}};
  CHECK(padded.degree() == 0);
}

TEST_CASE("Chebyshev U polynomials") {
  CHECK(chebyshev_u(0) == IntegerPolynomial{{mpz_class(1)}});
  CHECK(chebyshev_u(1) == IntegerPolynomial{{mpz_class(0), mpz_class(2)}});
  CHECK(chebyshev_u(2) ==
        IntegerPolynomial{{mpz_class(-1), mpz_class(0), mpz_class(4)}});
  CHECK(chebyshev_u(3) == IntegerPolynomial{{mpz_class(0), mpz_class(-4),
                                             mpz_class(0), mpz_class(8)}});
  // U_n(1) = n + 1 and U_n(-1) = (-1)^n (n + 1).
  for (unsigned long n = 0; n <= 200; ++n) {
    IntegerPolynomial u = chebyshev_u(n);
    CHECK(u.degree() == static_cast<long>(n));
    CHECK(u.eval(Rational(1)) == Rational(static_cast<long>(n) + 1));
    Rational at_minus = u.eval(Rational(-1));
    long want = static_cast<long>(n) + 1;
    CHECK(at_minus == (n % 2 ? Rational(-want) : Rational(want)));
  }
  // Explicit closed form U_n(x) = sum_k (-1)^k binom(n-k, k) (2x)^(n-2k).
  Rational x(5, 7);
  for (unsigned long n = 0; n <= 60; ++n) {
    Rational s(0);
    Rational two_x = Rational(2) * x;
    for (unsigned long k = 0; 2 * k <= n; ++k) {
      Rational pw(1);
      for (unsigned long j = 0; j < n - 2 * k; ++j) pw *= two_x;
      Rational term =
          Rational(binomial_exact(static_cast<long>(n - k),
                                  static_cast<long>(k))) *
          pw;
      s += (k % 2) ? -term : term;
    }
    CHECK(chebyshev_u(n).eval(x) == s);
  }
}
