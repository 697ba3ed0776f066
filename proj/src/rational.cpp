#include "cbsum/rational.hpp"

namespace cbsum {

long rational_valuation(const Rational& q, int64_t p) {
  if (q == 0) throw IndexOutOfRangeError("valuation of zero");
  long vn = q.get_num() == 0
                ? 0
                : static_cast<long>(remove_prime_power(q.get_num(), p).v);
  long vd = static_cast<long>(remove_prime_power(q.get_den(), p).v);
  return vn - vd;
}

mpz_class rational_to_residue(const Rational& q, const PrimeModulus& M,
                              unsigned e) {
  if (e < 1 || e > M.e())
    throw IndexOutOfRangeError("residue target exponent out of range");
  if (q == 0) return 0;
  if (rational_valuation(q, M.p()) < 0)
    throw NegativeValuationError("rational has a p in its denominator");
  const mpz_class& m = M.pk(e);
  mpz_class num = mod_reduce(q.get_num(), m);
  mpz_class den = mod_reduce(q.get_den(), m);
  return mod_reduce(num * mod_inv(den, m), m);
}

Padic rational_to_padic(const Rational& q, const PrimeModulus& M) {
  if (q == 0) return Padic::zero(M);
  return Padic::from_ratio(M, q.get_num(), q.get_den());
}

GaussianRational GaussianRational::pow(unsigned long k) const {
  GaussianRational acc{Rational(1), Rational(0)};
  GaussianRational base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

}  // namespace cbsum
