#include "cbsum/identities.hpp"

#include <utility>

#include "cbsum/arith.hpp"
#include "cbsum/combinatorics.hpp"

namespace cbsum {

namespace {

Rational frac(mpz_class num, mpz_class den) {
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

// (-1)^k, valid for negative k as well.
int alt(long k) { return k % 2 == 0 ? 1 : -1; }

mpz_class two_pow(unsigned long e) {
  mpz_class r = 1;
  r <<= e;
  return r;
}

mpz_class square(long m) { return mpz_class(m) * m; }

IdentityCase make_case(std::string id, long n, Rational lhs, Rational rhs,
                       bool pass) {
  IdentityCase c;
  c.id = std::move(id);
  c.n = n;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.pass = pass;
  return c;
}

IdentityCase eq_case(std::string id, long n, Rational lhs, Rational rhs) {
  bool pass = lhs == rhs;
  return make_case(std::move(id), n, std::move(lhs), std::move(rhs), pass);
}

// sum_{k=0..n} binom(n,k)(-1)^k/(2k+1)^2
//   = 4^n/((2n+1) binom(2n,n)) * sum_{k=0..n} 1/(2k+1)
IdentityCase eval_sig1(long n) {
  Rational lhs(0), odd_harmonic(0);
  for (long k = 0; k <= n; ++k) {
    lhs += Rational(alt(k)) * frac(binomial_exact(n, k), square(2 * k + 1));
    odd_harmonic += frac(1, mpz_class(2 * k + 1));
  }
  Rational rhs = frac(two_pow(2 * n),
                      mpz_class(2 * n + 1) * central_binomial_exact(n)) *
                 odd_harmonic;
  return eq_case("SIG1", n, std::move(lhs), std::move(rhs));
}

// sum_{k=0..n} (-1)^k/((k+1) binom(n,k))
//   = (n+1) - (n+1) sum_{k=1..n} (1 - 2(-1)^k)/(k+1)^2
IdentityCase eval_sig2(long n) {
  Rational lhs(0);
  for (long k = 0; k <= n; ++k)
    lhs += frac(alt(k), mpz_class(k + 1) * binomial_exact(n, k));
  Rational tail(0);
  for (long k = 1; k <= n; ++k)
    tail += frac(1 - 2 * alt(k), square(k + 1));
  Rational rhs = Rational(n + 1) - Rational(n + 1) * tail;
  return eq_case("SIG2", n, std::move(lhs), std::move(rhs));
}

// n sum_{k=2..n} (-1)^k/((k-1)^2 binom(n,k))
//   = sum_{k=2..n} (1 - 2k + (-1)^k(1 - k + 2k^2))/(k(k-1)^2)
//   = (1 + (-1)^n)/n - sum_{k=1..n-1} (1 + 2(-1)^k)/k^2
// Both displayed right-hand forms must agree with the left and each other.
IdentityCase eval_sig3(long n) {
  Rational lhs(0);
  for (long k = 2; k <= n; ++k)
    lhs += frac(alt(k), square(k - 1) * binomial_exact(n, k));
  lhs *= Rational(n);
  Rational rhs_a(0);
  for (long k = 2; k <= n; ++k) {
    mpz_class num = 1 - 2 * k + alt(k) * (1 - k + 2 * k * k);
    rhs_a += frac(std::move(num), mpz_class(k) * square(k - 1));
  }
  Rational rhs_b = frac(1 + alt(n), mpz_class(n));
  for (long k = 1; k < n; ++k)
    rhs_b -= frac(1 + 2 * alt(k), square(k));
  bool pass = lhs == rhs_a && rhs_a == rhs_b;
  return make_case("SIG3", n, std::move(lhs), std::move(rhs_a), pass);
}

// sum_{k=0..n} binom(n+k,2k)(-4)^k/(2k+1) = (-1)^n/(2n+1)
IdentityCase eval_l21a(long n) {
  Rational lhs(0);
  for (long k = 0; k <= n; ++k) {
    mpz_class num = binomial_exact(n + k, 2 * k) * two_pow(2 * k) * alt(k);
    lhs += frac(std::move(num), mpz_class(2 * k + 1));
  }
  Rational rhs = frac(alt(n), mpz_class(2 * n + 1));
  return eq_case("L2.1a", n, std::move(lhs), std::move(rhs));
}

// sum_{k=0..n} binom(n+k,2k)(-1)^k/(2k+1)
//   = (-1)^n/(2n+1)      if 3 does not divide 2n+1
//   = 2(-1)^{n-1}/(2n+1) if 3 divides 2n+1
IdentityCase eval_l21b(long n) {
  Rational lhs(0);
  for (long k = 0; k <= n; ++k)
    lhs += frac(binomial_exact(n + k, 2 * k) * alt(k), mpz_class(2 * k + 1));
  Rational rhs = (2 * n + 1) % 3 == 0 ? frac(-2 * alt(n), mpz_class(2 * n + 1))
                                      : frac(alt(n), mpz_class(2 * n + 1));
  return eq_case("L2.1b", n, std::move(lhs), std::move(rhs));
}

// sum_{k=0..n} binom(n+k,2k)(-2)^k/(2k+1)
//   = (1+i)(-i)^n (1+(-1)^{n-1} i) / (2(2n+1)); imaginary part must vanish.
IdentityCase eval_r21(long n) {
  Rational lhs(0);
  for (long k = 0; k <= n; ++k) {
    mpz_class num = binomial_exact(n + k, 2 * k) * two_pow(k) * alt(k);
    lhs += frac(std::move(num), mpz_class(2 * k + 1));
  }
  GaussianRational rhs =
      GaussianRational(Rational(1), Rational(1)) *
      GaussianRational(Rational(0), Rational(-1)).pow(n) *
      GaussianRational(Rational(1), Rational(alt(n - 1)));
  rhs = rhs / Rational(2 * (2 * n + 1));
  bool pass = rhs.is_real() && lhs == rhs.re;
  return make_case("R2.1", n, std::move(lhs), std::move(rhs.re), pass);
}

// sum_{k=1..n} 2^{2k-1}/(k binom(2k,k)) = 4^n/binom(2n,n) - 1
IdentityCase eval_g29(long n) {
  Rational lhs(0);
  for (long k = 1; k <= n; ++k)
    lhs += frac(two_pow(2 * k - 1),
                mpz_class(k) * central_binomial_exact(k));
  Rational rhs =
      frac(two_pow(2 * n), central_binomial_exact(n)) - Rational(1);
  return eq_case("G2.9", n, std::move(lhs), std::move(rhs));
}

// Left side of the symmetric-range identity: u_n over k = -n..n.
Rational l24_sum(long n) {
  Rational u(0);
  for (long k = -n; k <= n; ++k)
    u += frac(binomial_exact(2 * n, n + k) * alt(k), square(2 * k + 1));
  return u;
}

Rational l24_closed(long n) {
  return frac(two_pow(4 * n),
              square(2 * n + 1) * central_binomial_exact(n));
}

// sum_{k=-n..n} (-1)^k binom(2n,n+k)/(2k+1)^2 = 16^n/((2n+1)^2 binom(2n,n))
IdentityCase eval_l24(long n) {
  return eq_case("L2.4", n, l24_sum(n), l24_closed(n));
}

// sum_{k=0..n} binom(2n-k,k)(-1)^k = 1, 0, -1 according to
// (1-n) mod 3 = 1, 0, 2.
IdentityCase eval_l25a(long n) {
  Rational lhs(0);
  for (long k = 0; k <= n; ++k)
    lhs += Rational(binomial_exact(2 * n - k, k) * alt(k));
  int r = static_cast<int>(((1 - n) % 3 + 3) % 3);
  Rational rhs(r == 1 ? 1 : r == 0 ? 0 : -1);
  return eq_case("L2.5a", n, std::move(lhs), std::move(rhs));
}

// sum_{k=0..n} binom(2n-k,k)/(-4)^k = (2n+1)/4^n
IdentityCase eval_l25b(long n) {
  Rational lhs(0);
  for (long k = 0; k <= n; ++k)
    lhs += frac(binomial_exact(2 * n - k, k) * alt(k), two_pow(2 * k));
  Rational rhs = frac(2 * n + 1, two_pow(2 * n));
  return eq_case("L2.5b", n, std::move(lhs), std::move(rhs));
}

// sum_{k=0..2n} (-1)^k binom(2n,k)^3 = (-1)^n (3n)!/(n!)^3, and the
// symmetric form sum_{k=-n..n} (-1)^k binom(2n,n+k)^3 = (3n)!/(n!)^3.
IdentityCase eval_d41(long n) {
  Rational lhs(0);
  for (long k = 0; k <= 2 * n; ++k) {
    mpz_class b = binomial_exact(2 * n, k);
    lhs += Rational(b * b * b * alt(k));
  }
  mpz_class t = factorial_exact(3 * n);
  mpz_class nf = factorial_exact(n);
  mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), nf.get_mpz_t());
  mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), nf.get_mpz_t());
  mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), nf.get_mpz_t());
  Rational dixon(0);
  for (long k = -n; k <= n; ++k) {
    mpz_class b = binomial_exact(2 * n, n + k);
    dixon += Rational(b * b * b * alt(k));
  }
  Rational rhs(t * alt(n));
  bool pass = lhs == rhs && dixon == Rational(t);
  return make_case("D4.1", n, std::move(lhs), std::move(rhs), pass);
}

// sum_{k=0..n} binom(n,k)^3 (-1)^k H_k
//   = ((-1)^{(n+1)/2}/3) (3n)!!/(n!!)^3   for odd n
IdentityCase eval_w42(long n) {
  Rational lhs(0), h(0);
  for (long k = 1; k <= n; ++k) {
    h += frac(1, mpz_class(k));
    mpz_class b = binomial_exact(n, k);
    lhs += Rational(b * b * b * alt(k)) * h;
  }
  mpz_class nd = double_factorial_exact(n);
  Rational rhs = frac(double_factorial_exact(3 * n) * alt((n + 1) / 2),
                      3 * nd * nd * nd);
  return eq_case("W4.2", n, std::move(lhs), std::move(rhs));
}

Rational l43_sum(long n) {
  Rational s(0);
  for (long k = 0; k <= n; ++k)
    s += frac(binomial_exact(n + k, 2 * k) * catalan_exact(k) * alt(k),
              two_pow(k));
  return s;
}

Rational l43_closed(long n) {
  if (n % 2 == 0) return Rational(0);
  return frac(catalan_exact((n - 1) / 2) * alt((n - 1) / 2), two_pow(n));
}

// S(n) = sum_{k=0..n} binom(n+k,2k) C_k/(-2)^k
//   = (-1)^{(n-1)/2} C_{(n-1)/2}/2^n for odd n, 0 for even n >= 2.
IdentityCase eval_l43(long n) {
  return eq_case("L4.3", n, l43_sum(n), l43_closed(n));
}

// sum_k binom(m,k) binom(m,m-k) = binom(2m,m)
IdentityCase eval_chu(long m) {
  Rational lhs(0);
  for (long k = 0; k <= m; ++k)
    lhs += Rational(binomial_exact(m, k) * binomial_exact(m, m - k));
  Rational rhs(central_binomial_exact(m));
  return eq_case("CHU", m, std::move(lhs), std::move(rhs));
}

// sum_{k=0..n} (-1)^k binom(n,k)^3 = 0 for odd n
IdentityCase eval_alt0(long n) {
  Rational lhs(0);
  for (long k = 0; k <= n; ++k) {
    mpz_class b = binomial_exact(n, k);
    lhs += Rational(b * b * b * alt(k));
  }
  return eq_case("ALT0", n, std::move(lhs), Rational(0));
}

// U_{2n}(x) = sum_{j=0..n} binom(n+j,2j)(-1)^{n-j}(2x)^{2j},
// compared coefficient-by-coefficient against the recurrence-built U_{2n};
// lhs/rhs record both polynomials evaluated at x = 5/7.
IdentityCase eval_u2n(long n) {
  IntegerPolynomial lhs_poly = chebyshev_u(2 * n);
  IntegerPolynomial rhs_poly;
  rhs_poly.c.assign(2 * n + 1, mpz_class(0));
  for (long j = 0; j <= n; ++j)
    rhs_poly.c[2 * j] = binomial_exact(n + j, 2 * j) * two_pow(2 * j) *
                        alt(n - j);
  Rational x = frac(5, 7);
  bool pass = lhs_poly == rhs_poly;
  return make_case("U2N", n, lhs_poly.eval(x), rhs_poly.eval(x), pass);
}

std::function<bool(long)> at_least(long n0) {
  return [n0](long n) { return n >= n0; };
}

bool odd_positive(long n) { return n >= 1 && n % 2 == 1; }

}  // namespace

const std::vector<IdentityDescriptor>& identity_catalog() {
  static const std::vector<IdentityDescriptor> cat = {
      {"ALT0", "sum (-1)^k binom(n,k)^3 = 0 (odd n)", true, odd_positive,
       eval_alt0},
      {"CHU", "sum binom(m,k) binom(m,m-k) = binom(2m,m)", false, at_least(0),
       eval_chu},
      {"D4.1",
       "sum_{0..2n} (-1)^k binom(2n,k)^3 = (-1)^n (3n)!/(n!)^3, with the "
       "symmetric form sum_{-n..n} (-1)^k binom(2n,n+k)^3 = (3n)!/(n!)^3",
       true, at_least(0), eval_d41},
      {"G2.9", "sum 2^(2k-1)/(k binom(2k,k)) = 4^n/binom(2n,n) - 1", false,
       at_least(0), eval_g29},
      {"L2.1a", "sum binom(n+k,2k)(-4)^k/(2k+1) = (-1)^n/(2n+1)", false,
       at_least(0), eval_l21a},
      {"L2.1b",
       "sum binom(n+k,2k)(-1)^k/(2k+1), split on whether 3 divides 2n+1",
       false, at_least(0), eval_l21b},
      {"L2.4",
       "symmetric range k = -n..n: sum (-1)^k binom(2n,n+k)/(2k+1)^2 = "
       "16^n/((2n+1)^2 binom(2n,n))",
       false, at_least(0), eval_l24},
      {"L2.5a", "sum binom(2n-k,k)(-1)^k = period-3 symbol of (1-n) mod 3",
       false, at_least(0), eval_l25a},
      {"L2.5b", "sum binom(2n-k,k)/(-4)^k = (2n+1)/4^n", false, at_least(0),
       eval_l25b},
      {"L4.3",
       "sum binom(n+k,2k) C_k/(-2)^k = (-1)^((n-1)/2) C_((n-1)/2)/2^n for "
       "odd n, 0 for even n",
       false, at_least(1), eval_l43},
      {"R2.1",
       "sum binom(n+k,2k)(-2)^k/(2k+1) = (1+i)(-i)^n(1+(-1)^(n-1)i)/(2(2n+1)) "
       "with vanishing imaginary part",
       false, at_least(0), eval_r21},
      {"SIG1",
       "alternating binom(n,k)/(2k+1)^2 sum = odd-harmonic multiple of "
       "4^n/((2n+1) binom(2n,n))",
       false, at_least(0), eval_sig1},
      {"SIG2",
       "sum (-1)^k/((k+1) binom(n,k)) = (n+1)(1 - sum (1-2(-1)^k)/(k+1)^2)",
       false, at_least(0), eval_sig2},
      {"SIG3",
       "n sum_{k>=2} (-1)^k/((k-1)^2 binom(n,k)), both displayed right-hand "
       "forms",
       false, at_least(2), eval_sig3},
      {"U2N",
       "U_2n(x) = sum binom(n+j,2j)(-1)^(n-j)(2x)^(2j), coefficient-level",
       false, at_least(0), eval_u2n},
      {"W4.2",
       "sum binom(n,k)^3 (-1)^k H_k = ((-1)^((n+1)/2)/3)(3n)!!/(n!!)^3 "
       "(odd n)",
       true, odd_positive, eval_w42},
  };
  return cat;
}

IdentityCase verify_identity(const std::string& id, long n) {
  for (const auto& d : identity_catalog()) {
    if (d.id != id) continue;
    if (!d.applicable(n))
      throw NotApplicableError("identity " + id + " not applicable at n = " +
                               std::to_string(n));
    return d.eval(n);
  }
  throw NotApplicableError("unknown identity id " + id);
}

bool verify_recurrence(const std::string& id, long n) {
  if (id == "L2.4") {
    if (n < 0) throw NotApplicableError("L2.4 recurrence needs n >= 0");
    for (auto side : {&l24_sum, &l24_closed}) {
      Rational r = Rational(2 * n + 3) * Rational(square(2 * n + 5)) *
                       side(n + 2) -
                   Rational(16 * (n + 2)) * Rational(square(2 * n + 3)) *
                       side(n + 1) +
                   Rational(64 * (n + 1) * (n + 2) * (2 * n + 1)) * side(n);
      if (r != 0) return false;
    }
    return true;
  }
  if (id == "L4.3") {
    if (n < 1) throw NotApplicableError("L4.3 recurrence needs n >= 1");
    for (auto side : {&l43_sum, &l43_closed}) {
      if (side(n + 2) != frac(-n, mpz_class(n + 3)) * side(n)) return false;
    }
    return true;
  }
  throw NotApplicableError("no certifying recurrence for id " + id);
}

}  // namespace cbsum
