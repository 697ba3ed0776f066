#include "cbsum/combinatorics.hpp"

#include <limits>
#include <mutex>

namespace cbsum {

mpz_class factorial_exact(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class double_factorial_exact(unsigned long n) {
  mpz_class r;
  mpz_2fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial_exact(const mpz_class& n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && n <= mpz_class(std::numeric_limits<unsigned long>::max())) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n.get_ui(), static_cast<unsigned long>(k));
    return r;
  }
  // Falling factorial for negative (or huge) upper index.
  mpz_class num = 1;
  for (long i = 0; i < k; ++i) num *= n - i;
  mpz_class r;
  mpz_class fk = factorial_exact(static_cast<unsigned long>(k));
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), fk.get_mpz_t());
  return r;
}

mpz_class central_binomial_exact(unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), 2 * k, k);
  return r;
}

mpz_class catalan_exact(unsigned long k) {
  mpz_class r;
  mpz_divexact_ui(r.get_mpz_t(), central_binomial_exact(k).get_mpz_t(), k + 1);
  return r;
}

mpz_class catalan_exact_via_difference(unsigned long k) {
  mpz_class a = central_binomial_exact(k);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), 2 * k, k + 1);
  return a - b;
}

Rational harmonic_exact(unsigned long n, unsigned r) {
  if (r < 1) throw IndexOutOfRangeError("harmonic order must be >= 1");
  Rational s(0);
  for (unsigned long k = 1; k <= n; ++k) {
    mpz_class kr(k);
    mpz_pow_ui(kr.get_mpz_t(), kr.get_mpz_t(), r);
    s += Rational(mpz_class(1), kr);
  }
  return s;
}

namespace {
std::mutex g_memo_mutex;
std::vector<Rational> g_bernoulli{Rational(1)};  // B_0
std::vector<mpz_class> g_euler{mpz_class(1)};    // E_0
}  // namespace

Rational bernoulli_exact(unsigned long n) {
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  while (g_bernoulli.size() <= n) {
    unsigned long m = g_bernoulli.size();
    // B_m = -1/(m+1) * sum_{j<m} binom(m+1, j) B_j
    Rational s(0);
    for (unsigned long j = 0; j < m; ++j)
      s += Rational(binomial_exact(static_cast<long>(m + 1),
                                   static_cast<long>(j))) *
           g_bernoulli[j];
    s /= Rational(static_cast<long>(m + 1));
    g_bernoulli.push_back(-s);
  }
  return g_bernoulli[n];
}

mpz_class euler_exact(unsigned long n) {
  if (n % 2 == 1) return 0;
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  while (g_euler.size() <= n / 2) {
    unsigned long m = g_euler.size();  // computing E_{2m}
    mpz_class s(0);
    for (unsigned long k = 0; k < m; ++k)
      s += binomial_exact(static_cast<long>(2 * m),
                          static_cast<long>(2 * k)) *
           g_euler[k];
    g_euler.push_back(-s);
  }
  return g_euler[n / 2];
}

Rational euler_polynomial_eval(unsigned long n, const Rational& x) {
  Rational y = x - Rational(1, 2);
  // Powers y^(n-k) accumulated from the top down.
  Rational s(0);
  Rational ypow(1);
  for (unsigned long k = n + 1; k-- > 0;) {
    // term k contributes binom(n,k) E_k 2^{-k} y^{n-k}
    mpz_class e = euler_exact(k);
    if (e != 0) {
      mpz_class two_k(1);
      mpz_mul_2exp(two_k.get_mpz_t(), two_k.get_mpz_t(), k);
      s += Rational(binomial_exact(static_cast<long>(n),
                                   static_cast<long>(k)) *
                    e,
                    two_k) *
           ypow;
    }
    ypow *= y;
  }
  return s;
}

long IntegerPolynomial::degree() const {
  for (size_t j = c.size(); j-- > 0;)
    if (c[j] != 0) return static_cast<long>(j);
  return -1;
}

const mpz_class& IntegerPolynomial::coeff(size_t j) const {
  static const mpz_class zero(0);
  return j < c.size() ? c[j] : zero;
}

Rational IntegerPolynomial::eval(const Rational& x) const {
  Rational s(0);
  for (size_t j = c.size(); j-- > 0;) s = s * x + Rational(c[j]);
  return s;
}

IntegerPolynomial chebyshev_u(unsigned long n) {
  IntegerPolynomial prev{{mpz_class(1)}};                // U_0 = 1
  if (n == 0) return prev;
  IntegerPolynomial cur{{mpz_class(0), mpz_class(2)}};   // U_1 = 2x
  for (unsigned long m = 1; m < n; ++m) {
    IntegerPolynomial next;
    next.c.assign(cur.c.size() + 1, mpz_class(0));
    for (size_t j = 0; j < cur.c.size(); ++j) next.c[j + 1] = 2 * cur.c[j];
    for (size_t j = 0; j < prev.c.size(); ++j) next.c[j] -= prev.c[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace cbsum
