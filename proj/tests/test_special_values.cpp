#include "doctest.h"

#include "cbsum/combinatorics.hpp"
#include "cbsum/rational.hpp"
#include "cbsum/special_values.hpp"

using namespace cbsum;

TEST_CASE("Fermat quotients") {
  CHECK(fermat_quotient(2, 3, 1) == 1);
  CHECK(fermat_quotient(2, 7, 1) == 2);
  CHECK(fermat_quotient(3, 5, 1) == 1);
  CHECK(fermat_quotient(2, 7, 3) == 9);    // (2^6 - 1)/7 = 9 < 343
  CHECK(fermat_quotient(3, 7, 3) == 104);  // (3^6 - 1)/7 = 104
  CHECK_THROWS_AS(fermat_quotient(7, 7, 1), NotInvertibleError);
  CHECK_THROWS_AS(fermat_quotient(14, 7, 2), NotInvertibleError);
  // Logarithm property: q_p(ab) == q_p(a) + q_p(b) (mod p).
  for (int64_t p : {5, 11, 13}) {
    mpz_class m(p);
    for (int64_t a = 1; a < p; ++a)
      for (int64_t b = 1; b < p; ++b)
        CHECK(fermat_quotient(a * b, p, 1) ==
              mod_reduce(fermat_quotient(a, p, 1) + fermat_quotient(b, p, 1),
                         m));
  }
  // Against the exact quotient for a handful of primes.
  for (int64_t p : {5, 7, 11, 13, 17, 19, 23}) {
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p), 3);
    mpz_class num;
    mpz_ui_pow_ui(num.get_mpz_t(), 2, static_cast<unsigned long>(p - 1));
    num -= 1;
    mpz_class exact;
    mpz_divexact_ui(exact.get_mpz_t(), num.get_mpz_t(),
                    static_cast<unsigned long>(p));
    CHECK(fermat_quotient(2, p, 3) == mod_reduce(exact, pw));
  }
}

TEST_CASE("Euler number E_{p-3} mod p") {
  CHECK(euler_number_mod_p(5) == 4);    // E_2 = -1
  CHECK(euler_number_mod_p(7) == 5);    // E_4 = 5
  CHECK(euler_number_mod_p(11) == 10);  // E_8 = 1385
  CHECK_THROWS_AS(euler_number_mod_p(3), NotApplicableError);
  for (int64_t p : sieve_primes(5, 100)) {
    mpz_class m(p);
    CHECK(euler_number_mod_p(p) ==
          mod_reduce(euler_exact(static_cast<unsigned long>(p - 3)), m));
  }
}

TEST_CASE("Bernoulli numbers mod p via power sums") {
  CHECK(bernoulli_mod_p(7, 4) == 3);
  CHECK(bernoulli_mod_p(11, 8) == 4);
  CHECK(bernoulli_mod_p(13, 10) == 5);
  CHECK_THROWS_AS(bernoulli_mod_p(11, 9), NotApplicableError);
  CHECK_THROWS_AS(bernoulli_mod_p(11, 10), NotApplicableError);
  for (int64_t p : sieve_primes(5, 60)) {
    PrimeModulus M(p, 1);
    for (unsigned long m = 2; m + 3 <= static_cast<unsigned long>(p); m += 2)
      CHECK(bernoulli_mod_p(p, m) ==
            rational_to_residue(bernoulli_exact(m), M, 1));
  }
}

TEST_CASE("inverse tables") {
  std::vector<mpz_class> t = inverse_table(7, 6, 2);
  REQUIRE(t.size() == 6);
  for (int64_t k = 1; k <= 6; ++k) CHECK(mod_reduce(t[k - 1] * k, 49) == 1);
  CHECK_THROWS_AS(inverse_table(7, 7, 2), IndexOutOfRangeError);
}

TEST_CASE("harmonic numbers mod prime powers") {
  PrimeModulus M75(7, 5);
  CHECK(harmonic_mod(7, 6, 5) ==
        rational_to_residue(harmonic_exact(6), M75, 5));
  CHECK(harmonic_mod(7, 6, 5) == 10927);
  PrimeModulus M73(7, 3);
  CHECK(harmonic_mod(7, 3, 3) ==
        rational_to_residue(harmonic_exact(3), M73, 3));
  // Wolstenholme: H_{p-1} == 0 (mod p^2) for p > 3.
  for (int64_t p : sieve_primes(5, 60)) {
    PrimeModulus M(p, 2);
    CHECK(mod_reduce(harmonic_mod(p, static_cast<unsigned long>(p - 1), 2),
                     M.m()) == 0);
  }
  // Prefix vector is consistent with the single-value route.
  for (int64_t p : {5, 11, 13}) {
    auto pre = harmonic_prefix_mod(p, static_cast<unsigned long>(p - 1), 3);
    REQUIRE(pre.size() == static_cast<size_t>(p));
    CHECK(pre[0] == 0);
    for (unsigned long n = 1; n < static_cast<unsigned long>(p); ++n)
      CHECK(pre[n] == harmonic_mod(p, n, 3));
  }
}

TEST_CASE("quarter factorials for p == 3 (mod 4)") {
  CHECK(factorial_quarter_mod(7) == 2);    // 2!
  CHECK(factorial_quarter_mod(11) == 6);   // 3!
  CHECK(factorial_quarter_mod(19) == 6);   // 5! = 120 == 6 (mod 19)
  CHECK_THROWS_AS(factorial_quarter_mod(13), NotApplicableError);
  for (int64_t p : sieve_primes(3, 100)) {
    if (p % 4 != 3) continue;
    mpz_class m(p);
    CHECK(factorial_quarter_mod(p) ==
          mod_reduce(factorial_exact(static_cast<unsigned long>((p + 1) / 4)),
                     m));
  }
}

TEST_CASE("row binomials binom(p-1, k)") {
  std::vector<mpz_class> row7 = row_binomials_mod(7, 2);
  REQUIRE(row7.size() == 7);
  long want[] = {1, 6, 15, 20, 15, 6, 1};
  for (int k = 0; k < 7; ++k) CHECK(row7[k] == want[k]);
  for (int64_t p : {5, 13}) {
    for (unsigned e : {1u, 2u, 3u}) {
      PrimeModulus M(p, e);
      auto row = row_binomials_mod(p, e);
      for (long k = 0; k < p; ++k)
        CHECK(row[k] == mod_reduce(binomial_exact(p - 1, k), M.m()));
    }
  }
  // The alternating-sign pattern binom(p-1, k) == (-1)^k (mod p).
  for (int64_t p : {11, 17}) {
    mpz_class m(p);
    auto row = row_binomials_mod(p, 1);
    for (long k = 0; k < p; ++k)
      CHECK(row[k] == mod_reduce(k % 2 ? mpz_class(-1) : mpz_class(1), m));
  }
}

TEST_CASE("central row binomial and Morley's congruence") {
  for (int64_t p : sieve_primes(5, 31)) {
    for (unsigned e : {1u, 2u, 3u}) {
      PrimeModulus M(p, e);
      CHECK(central_row_binomial_mod(p, e) ==
            mod_reduce(binomial_exact(p - 1, (p - 1) / 2), M.m()));
    }
    // Morley: (-1)^((p-1)/2) binom(p-1, (p-1)/2) == 4^(p-1) (mod p^3).
    PrimeModulus M3(p, 3);
    mpz_class lhs = central_row_binomial_mod(p, 3);
    if (((p - 1) / 2) % 2) lhs = -lhs;
    CHECK(mod_reduce(lhs, M3.m()) == mod_pow(4, p - 1, M3.m()));
  }
  CHECK(central_row_binomial_mod(7, 3) == 20);
  CHECK(mod_pow(4, 6, 343) == 323);
}

TEST_CASE("central binomial stream tracks p-power and unit") {
  PrimeModulus M(7, 2);
  CentralBinomialStream s(M);
  long vals[][2] = {{0, 1}, {0, 2}, {0, 6}, {0, 20}, {1, 10}, {1, 36}};
  for (auto [v, u] : vals) {
    CHECK(s.value().valuation() == v);
    CHECK(s.value().unit() == u);
    s.advance();
  }
}

TEST_CASE("streams stay exact past k = p and k = p^2") {
  for (int64_t p : {3, 5}) {
    PrimeModulus M(p, 2);
    CentralBinomialStream s(M);
    for (unsigned long k = 0; k <= static_cast<unsigned long>(2 * p * p);
         ++k) {
      ValuationSplit want = remove_prime_power(central_binomial_exact(k), p);
      CHECK(s.value().valuation() == static_cast<long>(want.v));
      CHECK(s.value().unit() == mod_reduce(want.unit, M.m()));
      s.advance();
    }
  }
}

TEST_CASE("trinomial edge stream matches binom(3k, k)") {
  // p = 3 exercises the ratio's constant factor 3 being p itself.
  for (int64_t p : {3, 5, 7}) {
    PrimeModulus M(p, 2);
    TrinomialEdgeStream s(M);
    for (unsigned long k = 0; k <= 40; ++k) {
      ValuationSplit want =
          remove_prime_power(binomial_exact(3 * static_cast<long>(k),
                                            static_cast<long>(k)),
                             p);
      CHECK(s.value().valuation() == static_cast<long>(want.v));
      CHECK(s.value().unit() == mod_reduce(want.unit, M.m()));
      s.advance();
    }
  }
  PrimeModulus M3(3, 2);
  TrinomialEdgeStream t(M3);
  t.advance();
  CHECK(t.k() == 1);
  CHECK(t.value().valuation() == 1);  // binom(3,1) = 3
  CHECK(t.value().unit() == 1);
}

TEST_CASE("special value bundle at p = 7") {
  SpecialValues v = compute_special_values(7);
  CHECK(v.p == 7);
  CHECK(v.qp2 == 9);
  REQUIRE(v.qp3.has_value());
  CHECK(*v.qp3 == 104);
  REQUIRE(v.e_pm3.has_value());
  CHECK(*v.e_pm3 == 5);
  REQUIRE(v.b_pm3.has_value());
  CHECK(*v.b_pm3 == 3);
  REQUIRE(v.b_pm5.has_value());
  CHECK(*v.b_pm5 == 6);  // B_2 = 1/6 == 6 (mod 7)
  CHECK(v.h_full == 10927);
  CHECK(v.h_half == 59);  // H_3 = 11/6 == 59 (mod 343)
  CHECK(v.leg_m1 == -1);
  CHECK(v.leg_2 == 1);
  CHECK(v.leg_m2 == -1);
  REQUIRE(v.fact_q.has_value());
  CHECK(*v.fact_q == 2);
}

TEST_CASE("special value bundle at p = 3 and p = 5") {
  SpecialValues a = compute_special_values(3);
  CHECK_FALSE(a.e_pm3.has_value());
  CHECK_FALSE(a.b_pm3.has_value());
  CHECK_FALSE(a.qp3.has_value());
  REQUIRE(a.fact_q.has_value());
  CHECK(*a.fact_q == 1);
  CHECK(a.leg_m1 == -1);

  SpecialValues b = compute_special_values(5);
  REQUIRE(b.e_pm3.has_value());
  CHECK(*b.e_pm3 == 4);
  REQUIRE(b.b_pm3.has_value());
  CHECK(*b.b_pm3 == 1);  // B_2 = 1/6 == 1 (mod 5)
  CHECK_FALSE(b.b_pm5.has_value());
  CHECK_FALSE(b.fact_q.has_value());
  CHECK(b.leg_m1 == 1);
  CHECK_THROWS_AS(compute_special_values(4), ConfigError);
}
