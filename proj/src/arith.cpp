#include "cbsum/arith.hpp"

#include <algorithm>

namespace cbsum {

PrimeModulus::PrimeModulus(int64_t p, unsigned e) : p_(p), e_(e) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw ConfigError("modulus base must be an odd prime, got " +
                      std::to_string(p));
  if (e < 1 || e > 6)
    throw ConfigError("modulus exponent must lie in 1..6, got " +
                      std::to_string(e));
  pow_.resize(e + 1);
  pow_[0] = 1;
  for (unsigned j = 1; j <= e; ++j) pow_[j] = pow_[j - 1] * p;
}

mpz_class mod_pow(const mpz_class& base, const mpz_class& exp,
                  const mpz_class& m) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class mod_inv(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    throw NotInvertibleError(a.get_str() + " is not invertible mod " +
                             m.get_str());
  return r;
}

int legendre_symbol(const mpz_class& a, int64_t p) {
  mpz_class pz(p);
  return mpz_legendre(a.get_mpz_t(), pz.get_mpz_t());
}

ValuationSplit remove_prime_power(const mpz_class& n, int64_t p) {
  if (n == 0) throw IndexOutOfRangeError("valuation of zero");
  ValuationSplit s;
  mpz_class pz(p);
  s.v = mpz_remove(s.unit.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
  return s;
}

std::vector<mpz_class> batch_inverse(const std::vector<mpz_class>& values,
                                     const mpz_class& m) {
  const size_t n = values.size();
  std::vector<mpz_class> out(n);
  if (n == 0) return out;
  // prefix[i] = v_0 * ... * v_i mod m
  std::vector<mpz_class> prefix(n);
  prefix[0] = mod_reduce(values[0], m);
  for (size_t i = 1; i < n; ++i)
    prefix[i] = mod_reduce(prefix[i - 1] * values[i], m);
  mpz_class inv = mod_inv(prefix[n - 1], m);  // throws if any entry non-unit
  for (size_t i = n; i-- > 1;) {
    out[i] = mod_reduce(inv * prefix[i - 1], m);
    inv = mod_reduce(inv * values[i], m);
  }
  out[0] = inv;
  return out;
}

std::vector<int64_t> sieve_primes(int64_t lo, int64_t hi) {
  std::vector<int64_t> primes;
  if (hi < 2 || hi < lo) return primes;
  if (hi > 100'000'000)
    throw ConfigError("sieve bound too large: " + std::to_string(hi));
  std::vector<bool> composite(static_cast<size_t>(hi) + 1, false);
  for (int64_t i = 2; i * i <= hi; ++i)
    if (!composite[static_cast<size_t>(i)])
      for (int64_t j = i * i; j <= hi; j += i)
        composite[static_cast<size_t>(j)] = true;
  for (int64_t n = std::max<int64_t>(lo, 2); n <= hi; ++n)
    if (!composite[static_cast<size_t>(n)]) primes.push_back(n);
  return primes;
}

bool is_prime(int64_t n) {
  if (n < 2) return false;
  mpz_class z(n);
  return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;  // deterministic below 3e18
}

mpz_class int_sqrt(const mpz_class& n) {
  if (n < 0) throw IndexOutOfRangeError("square root of negative integer");
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const mpz_class& n, mpz_class* root) {
  if (n < 0) return false;
  mpz_class r = int_sqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

}  // namespace cbsum
