// Fast per-prime special values: Fermat quotients, E_{p-3} and B_{p-3}/B_{p-5}
// modulo p, harmonic numbers modulo prime powers, quarter factorials, and
// p-exact central binomial streams.  Everything here is O(p log p) or better
// per prime and is cross-audited against the exact oracles in
// combinatorics.hpp.
#pragma once

#include "cbsum/padic.hpp"

#include <optional>

namespace cbsum {

// q_p(a) = (a^(p-1) - 1)/p mod p^e; requires gcd(a, p) = 1.
mpz_class fermat_quotient(const mpz_class& a, int64_t p, unsigned e);

// E_{p-3} mod p for p > 3, via the quarter-range inverse-square sum
// E_{p-3} == (-1)^((p-1)/2) * (1/4) * sum_{k=1..floor(p/4)} k^{-2} (mod p).
mpz_class euler_number_mod_p(int64_t p);

// B_m mod p for even 2 <= m <= p-3, via the full power sum
// sum_{a=1..p-1} a^m == p B_m (mod p^2).
mpz_class bernoulli_mod_p(int64_t p, unsigned long m);

// Inverses of 1..n modulo p^e (n < p), one batched inversion.
std::vector<mpz_class> inverse_table(int64_t p, unsigned long n, unsigned e);

// H_n mod p^e for n < p.
mpz_class harmonic_mod(int64_t p, unsigned long n, unsigned e);
// H_0..H_n mod p^e (n < p).
std::vector<mpz_class> harmonic_prefix_mod(int64_t p, unsigned long n,
                                           unsigned e);

// ((p+1)/4)! mod p for p == 3 (mod 4).
mpz_class factorial_quarter_mod(int64_t p);

// binom(p-1, k) mod p^e for k = 0..p-1 (every entry a unit).
std::vector<mpz_class> row_binomials_mod(int64_t p, unsigned e);

// binom(p-1, (p-1)/2) mod p^e from the falling product, one inversion.
mpz_class central_row_binomial_mod(int64_t p, unsigned e);

// Streams yield binom(2k,k) (resp. binom(3k,k)) for k = 0, 1, 2, ... as
// exact-unit Padics: the p-power is carried in the valuation, so entries stay
// invertible arbitrarily far past k = p (needed for the k < p^2 sums).
class CentralBinomialStream {
 public:
  explicit CentralBinomialStream(const PrimeModulus& M);
  unsigned long k() const { return k_; }
  const Padic& value() const { return val_; }
  void advance();

 private:
  const PrimeModulus* M_;
  unsigned long k_;
  long v_;
  mpz_class u_;
  Padic val_;
};

class TrinomialEdgeStream {
 public:
  explicit TrinomialEdgeStream(const PrimeModulus& M);
  unsigned long k() const { return k_; }
  const Padic& value() const { return val_; }
  void advance();

 private:
  const PrimeModulus* M_;
  unsigned long k_;
  long v_;
  mpz_class u_;
  Padic val_;
};

// The bundle of values every congruence evaluator shares for one prime.
struct SpecialValues {
  int64_t p = 0;

  mpz_class qp2;                   // q_p(2) mod p^3
  std::optional<mpz_class> qp3;    // q_p(3) mod p^3          (p != 3)
  std::optional<mpz_class> e_pm3;  // E_{p-3} mod p           (p > 3)
  std::optional<mpz_class> b_pm3;  // B_{p-3} mod p           (p > 3)
  std::optional<mpz_class> b_pm5;  // B_{p-5} mod p           (p > 5)
  mpz_class h_full;                // H_{p-1} mod p^5
  mpz_class h_half;                // H_{(p-1)/2} mod p^3
  int leg_m1 = 0;                  // (-1/p)
  int leg_2 = 0;                   // (2/p)
  int leg_m2 = 0;                  // (-2/p)
  int leg_p7 = 0;                  // (p/7)
  int leg_p11 = 0;                 // (p/11)
  std::optional<mpz_class> fact_q; // ((p+1)/4)! mod p        (p == 3 mod 4)
};

SpecialValues compute_special_values(int64_t p);

}  // namespace cbsum
