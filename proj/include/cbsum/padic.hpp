// Scaled p-adic values with capped-relative precision, the working type for
// every fast congruence evaluator.
//
// A value is stored as p^v * u with u a unit known modulo p^rel, i.e. the
// value is known modulo p^(v+rel) ("absolute precision").  rel never exceeds
// the ambient modulus exponent e.  Three shapes exist:
//
//   exact zero      -- the rational number 0,
//   inexact zero    -- O(p^v): every computed digit cancelled; all that is
//                      known is that the value is divisible by p^v,
//   unit form       -- v in Z (negative allowed), u in (Z/p^rel)^*.
//
// Addition aligns valuations and may *lose* relative precision when leading
// digits cancel; that loss is tracked, never hidden, and surfaces as a
// PrecisionLossError only if a caller later demands more digits than remain
// (residue(t)).  Multiplication and unit inversion preserve relative
// precision.  Division by a non-unit is expressed as inverse() + shift(),
// never silently.
#pragma once

#include "cbsum/arith.hpp"

#include <optional>

namespace cbsum {

class Padic {
 public:
  // --- constructors -------------------------------------------------------
  static Padic zero(const PrimeModulus& M);
  static Padic inexact_zero(const PrimeModulus& M, long abs_prec);
  static Padic from_integer(const PrimeModulus& M, const mpz_class& n);
  static Padic from_integer(const PrimeModulus& M, int64_t n) {
    return from_integer(M, mpz_class(n));
  }
  // num/den as an exact rational; den's p-part becomes negative valuation.
  static Padic from_ratio(const PrimeModulus& M, const mpz_class& num,
                          const mpz_class& den);
  // Trusted unit form: value = p^v * u exactly, u a unit, full precision e.
  static Padic from_unit(const PrimeModulus& M, long v, const mpz_class& u);
  // Value congruent to r modulo p^abs_prec and otherwise unknown.
  static Padic from_residue(const PrimeModulus& M, const mpz_class& r,
                            long abs_prec);

  // --- observers -----------------------------------------------------------
  const PrimeModulus& modulus() const { return *M_; }
  bool is_exact_zero() const { return exact_zero_; }
  bool is_inexact_zero() const { return !exact_zero_ && rel_ == 0; }
  // Valuation; IndexOutOfRangeError on exact zero (its valuation is +inf).
  long valuation() const;
  // Exponent a such that the value is known modulo p^a.  Exact zero: LONG_MAX.
  long abs_precision() const;
  int rel_precision() const { return rel_; }
  const mpz_class& unit() const { return u_; }

  // Canonical representative in [0, p^t).  Throws NegativeValuationError if
  // the value is not a p-integer, PrecisionLossError if fewer than t digits
  // are guaranteed.
  mpz_class residue(unsigned t) const;

  // --- arithmetic ------------------------------------------------------------
  Padic operator-() const;
  friend Padic operator+(const Padic& a, const Padic& b);
  friend Padic operator-(const Padic& a, const Padic& b) { return a + (-b); }
  friend Padic operator*(const Padic& a, const Padic& b);
  // Multiplication by p^j (exact valuation shift, j may be negative).
  Padic shift(long j) const;
  // Unit inverse; NotInvertibleError on exact/inexact zero.
  Padic inverse() const;
  Padic pow(unsigned long k) const;

  friend Padic operator*(const Padic& a, int64_t c) {
    return a * from_integer(a.modulus(), c);
  }
  friend Padic operator*(int64_t c, const Padic& a) { return a * c; }

 private:
  Padic(const PrimeModulus& M) : M_(&M) {}
  void normalize(const mpz_class& raw, long base_v, long abs);

  const PrimeModulus* M_;
  bool exact_zero_ = false;
  long v_ = 0;     // valuation (inexact zero: the precision floor)
  int rel_ = 0;    // relative precision in 0..e; 0 means inexact zero
  mpz_class u_;    // unit in [0, p^rel), 0 for zeros
};

inline bool padic_equal_mod(const Padic& a, const Padic& b, unsigned t) {
  return a.residue(t) == b.residue(t);
}

}  // namespace cbsum
