#include "cbsum/padic.hpp"

#include <algorithm>
#include <climits>

namespace cbsum {

Padic Padic::zero(const PrimeModulus& M) {
  Padic x(M);
  x.exact_zero_ = true;
  return x;
}

Padic Padic::inexact_zero(const PrimeModulus& M, long abs_prec) {
  Padic x(M);
  x.v_ = abs_prec;
  x.rel_ = 0;
  return x;
}

// Put raw (known modulo p^(abs - base_v), scaled by p^base_v) into canonical
// unit form: peel the p-part of raw into the valuation, charge the peeled
// digits against relative precision.
void Padic::normalize(const mpz_class& raw, long base_v, long abs) {
  const unsigned e = M_->e();
  long rel_window = abs - base_v;
  if (rel_window <= 0) {  // nothing is known beyond "divisible by p^abs"
    v_ = abs;
    rel_ = 0;
    u_ = 0;
    return;
  }
  rel_window = std::min<long>(rel_window, e);
  mpz_class r = mod_reduce(raw, M_->pk(static_cast<unsigned>(rel_window)));
  if (r == 0) {  // all known digits cancelled
    v_ = base_v + rel_window;
    rel_ = 0;
    u_ = 0;
    return;
  }
  ValuationSplit s = remove_prime_power(r, M_->p());
  v_ = base_v + static_cast<long>(s.v);
  rel_ = static_cast<int>(rel_window - static_cast<long>(s.v));
  u_ = mod_reduce(s.unit, M_->pk(static_cast<unsigned>(rel_)));
}

Padic Padic::from_integer(const PrimeModulus& M, const mpz_class& n) {
  if (n == 0) return zero(M);
  Padic x(M);
  ValuationSplit s = remove_prime_power(n, M.p());
  x.v_ = static_cast<long>(s.v);
  x.rel_ = static_cast<int>(M.e());
  x.u_ = mod_reduce(s.unit, M.m());
  return x;
}

Padic Padic::from_ratio(const PrimeModulus& M, const mpz_class& num,
                        const mpz_class& den) {
  if (den == 0) throw NotInvertibleError("zero denominator");
  if (num == 0) return zero(M);
  ValuationSplit sn = remove_prime_power(num, M.p());
  ValuationSplit sd = remove_prime_power(den, M.p());
  Padic x(M);
  x.v_ = static_cast<long>(sn.v) - static_cast<long>(sd.v);
  x.rel_ = static_cast<int>(M.e());
  x.u_ = mod_reduce(sn.unit * mod_inv(mod_reduce(sd.unit, M.m()), M.m()), M.m());
  return x;
}

Padic Padic::from_unit(const PrimeModulus& M, long v, const mpz_class& u) {
  mpz_class r = mod_reduce(u, M.m());
  if (mpz_divisible_ui_p(r.get_mpz_t(), static_cast<unsigned long>(M.p())))
    throw ConfigError("from_unit: residue is not a unit");
  Padic x(M);
  x.v_ = v;
  x.rel_ = static_cast<int>(M.e());
  x.u_ = r;
  return x;
}

Padic Padic::from_residue(const PrimeModulus& M, const mpz_class& r,
                          long abs_prec) {
  Padic x(M);
  x.normalize(r, 0, abs_prec);
  return x;
}

long Padic::valuation() const {
  if (exact_zero_)
    throw IndexOutOfRangeError("valuation of exact zero is infinite");
  return v_;
}

long Padic::abs_precision() const {
  if (exact_zero_) return LONG_MAX;
  return v_ + rel_;
}

mpz_class Padic::residue(unsigned t) const {
  if (t < 1 || t > M_->e())
    throw IndexOutOfRangeError("residue target exponent out of range");
  if (exact_zero_) return 0;
  if (rel_ == 0) {  // inexact zero O(p^v)
    if (v_ < static_cast<long>(t))
      throw PrecisionLossError(
          "only O(p^" + std::to_string(v_) + ") known, need modulo p^" +
          std::to_string(t));
    return 0;
  }
  if (v_ < 0)
    throw NegativeValuationError("value has valuation " + std::to_string(v_));
  if (v_ >= static_cast<long>(t)) return 0;
  if (abs_precision() < static_cast<long>(t))
    throw PrecisionLossError("known modulo p^" +
                             std::to_string(abs_precision()) +
                             ", need modulo p^" + std::to_string(t));
  unsigned shift = t - static_cast<unsigned>(v_);
  mpz_class r = mod_reduce(u_, M_->pk(shift));
  return r * M_->pk(static_cast<unsigned>(v_));
}

Padic Padic::operator-() const {
  if (exact_zero_ || rel_ == 0) return *this;
  Padic x(*M_);
  x.v_ = v_;
  x.rel_ = rel_;
  x.u_ = M_->pk(static_cast<unsigned>(rel_)) - u_;
  return x;
}

Padic operator+(const Padic& a, const Padic& b) {
  if (a.M_->m() != b.M_->m())
    throw ConfigError("p-adic arithmetic across distinct moduli");
  if (a.exact_zero_) return b;
  if (b.exact_zero_) return a;
  const long abs = std::min(a.abs_precision(), b.abs_precision());
  const long v0 = std::min(a.v_, b.v_);
  // Accumulate u_a p^(va-v0) + u_b p^(vb-v0), each term already reduced; the
  // window above abs - v0 is garbage and normalize() masks it off.
  mpz_class raw = 0;
  const PrimeModulus& M = *a.M_;
  auto contrib = [&](const Padic& x) {
    if (x.rel_ == 0) return;  // inexact zero adds nothing (but capped abs)
    long sh = x.v_ - v0;
    if (sh >= abs - v0) return;  // entirely above the known window
    raw += x.u_ * M.pk(static_cast<unsigned>(sh));
  };
  contrib(a);
  contrib(b);
  Padic out(M);
  out.normalize(raw, v0, abs);
  return out;
}

Padic operator*(const Padic& a, const Padic& b) {
  if (a.M_->m() != b.M_->m())
    throw ConfigError("p-adic arithmetic across distinct moduli");
  const PrimeModulus& M = *a.M_;
  if (a.exact_zero_ || b.exact_zero_) return Padic::zero(M);
  if (a.rel_ == 0 || b.rel_ == 0) {
    // O(p^v) times p^w-unit (or another O) is O(p^(v+w)).
    long va = a.v_, vb = b.v_;
    return Padic::inexact_zero(M, va + vb);
  }
  Padic x(M);
  x.v_ = a.v_ + b.v_;
  x.rel_ = std::min(a.rel_, b.rel_);
  x.u_ = mod_reduce(a.u_ * b.u_, M.pk(static_cast<unsigned>(x.rel_)));
  return x;
}

Padic Padic::shift(long j) const {
  if (exact_zero_) return *this;
  Padic x(*this);
  x.v_ += j;
  return x;
}

Padic Padic::inverse() const {
  if (exact_zero_ || rel_ == 0)
    throw NotInvertibleError("inverse of (indistinguishable-from-)zero");
  Padic x(*M_);
  x.v_ = -v_;
  x.rel_ = rel_;
  x.u_ = mod_inv(u_, M_->pk(static_cast<unsigned>(rel_)));
  return x;
}

Padic Padic::pow(unsigned long k) const {
  Padic acc = Padic::from_integer(*M_, 1);
  Padic base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

}  // namespace cbsum
