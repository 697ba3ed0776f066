// Exact rational helpers: p-adic valuation of rationals, reduction of
// p-integral rationals to residues, and exact Gaussian rationals.  This is
// the oracle-side value layer; nothing here rounds or truncates.
#pragma once

#include "cbsum/arith.hpp"
#include "cbsum/padic.hpp"

namespace cbsum {

using Rational = mpq_class;

// v_p of a nonzero rational (negative when p divides the denominator).
long rational_valuation(const Rational& q, int64_t p);

// Canonical residue of a p-integral rational modulo p^e; throws
// NegativeValuationError when v_p(q) < 0.
mpz_class rational_to_residue(const Rational& q, const PrimeModulus& M,
                              unsigned e);

// Same value as an exact Padic (full relative precision).
Padic rational_to_padic(const Rational& q, const PrimeModulus& M);

// a + b*i with exact rational parts.  Only the operations the closed forms
// need: ring ops, conjugation, integer powers, exact equality.
struct GaussianRational {
  Rational re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_real() const { return im == 0; }
  GaussianRational conj() const { return {re, Rational(-im)}; }

  friend GaussianRational operator+(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator*(const Rational& c,
                                    const GaussianRational& a) {
    return {c * a.re, c * a.im};
  }
  friend GaussianRational operator/(const GaussianRational& a,
                                    const Rational& c) {
    if (c == 0) throw NotInvertibleError("division of Gaussian rational by 0");
    return {a.re / c, a.im / c};
  }
  GaussianRational pow(unsigned long k) const;
  bool operator==(const GaussianRational& b) const {
    return re == b.re && im == b.im;
  }
};

}  // namespace cbsum
