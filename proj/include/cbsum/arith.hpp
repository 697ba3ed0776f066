// Modular arithmetic building blocks: prime-power moduli, residue values,
// batched inversion, and a small prime sieve.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbsum {

using std::int64_t;

// ---- error taxonomy ----------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotInvertibleError : Error {
  using Error::Error;
};
struct PrecisionLossError : Error {
  using Error::Error;
};
struct NegativeValuationError : Error {
  using Error::Error;
};
struct IndexOutOfRangeError : Error {
  using Error::Error;
};
struct EvenInputError : Error {
  using Error::Error;
};
struct RuleInapplicableError : Error {
  using Error::Error;
};
struct NotApplicableError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

// ---- prime-power modulus ------------------------------------------------

// m = p^e for an odd prime p and 1 <= e <= 6.  Keeps the power ladder
// p^0..p^e around so valuation bookkeeping never recomputes powers.
class PrimeModulus {
 public:
  PrimeModulus(int64_t p, unsigned e);

  int64_t p() const { return p_; }
  unsigned e() const { return e_; }
  const mpz_class& m() const { return pow_[e_]; }
  // p^j for 0 <= j <= e.
  const mpz_class& pk(unsigned j) const { return pow_.at(j); }

 private:
  int64_t p_;
  unsigned e_;
  std::vector<mpz_class> pow_;
};

// ---- residue helpers ----------------------------------------------------

mpz_class mod_pow(const mpz_class& base, const mpz_class& exp,
                  const mpz_class& m);
// Inverse of a modulo m; throws NotInvertibleError if gcd(a, m) != 1.
mpz_class mod_inv(const mpz_class& a, const mpz_class& m);
// Legendre symbol (a/p) in {-1, 0, 1} for odd prime p.
int legendre_symbol(const mpz_class& a, int64_t p);

// Canonical representative in [0, m).
inline mpz_class mod_reduce(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Largest j with p^j | n (n != 0), plus the cofactor n / p^j.
struct ValuationSplit {
  unsigned long v;
  mpz_class unit;
};
ValuationSplit remove_prime_power(const mpz_class& n, int64_t p);

// Simultaneous inversion of values[0..n) modulo m (Montgomery's trick:
// one mod_inv plus 3(n-1) multiplications).  Throws NotInvertibleError if
// any entry shares a factor with m.
std::vector<mpz_class> batch_inverse(const std::vector<mpz_class>& values,
                                     const mpz_class& m);

// All primes in [lo, hi], ascending.  Plain sieve; intended range tops out
// around 10^6.
std::vector<int64_t> sieve_primes(int64_t lo, int64_t hi);

bool is_prime(int64_t n);

// Floor square root and exact-square test.
mpz_class int_sqrt(const mpz_class& n);
bool is_perfect_square(const mpz_class& n, mpz_class* root = nullptr);

// ---- residue value type --------------------------------------------------

// Value in Z/p^e with the modulus carried by pointer; all binary ops insist
// the moduli match.  Division throws NotInvertibleError on non-units.
class Residue {
 public:
  Residue() : m_(nullptr), v_(0) {}
  Residue(const PrimeModulus& m, const mpz_class& v)
      : m_(&m), v_(mod_reduce(v, m.m())) {}
  Residue(const PrimeModulus& m, int64_t v) : Residue(m, mpz_class(v)) {}

  const mpz_class& value() const { return v_; }
  const PrimeModulus& modulus() const { return *m_; }

  Residue operator-() const { return Residue(*m_, -v_); }
  friend Residue operator+(const Residue& a, const Residue& b) {
    a.check(b);
    return Residue(*a.m_, a.v_ + b.v_);
  }
  friend Residue operator-(const Residue& a, const Residue& b) {
    a.check(b);
    return Residue(*a.m_, a.v_ - b.v_);
  }
  friend Residue operator*(const Residue& a, const Residue& b) {
    a.check(b);
    return Residue(*a.m_, a.v_ * b.v_);
  }
  friend Residue operator/(const Residue& a, const Residue& b) {
    a.check(b);
    return a * b.inverse();
  }
  Residue inverse() const { return Residue(*m_, mod_inv(v_, m_->m())); }
  Residue pow(const mpz_class& k) const {
    return Residue(*m_, mod_pow(v_, k, m_->m()));
  }
  bool operator==(const Residue& b) const { return v_ == b.v_; }

 private:
  void check(const Residue& b) const {
    if (m_ != b.m_ && (m_ == nullptr || b.m_ == nullptr || m_->m() != b.m_->m()))
      throw ConfigError("residue arithmetic across distinct moduli");
  }
  const PrimeModulus* m_;
  mpz_class v_;
};

}  // namespace cbsum
