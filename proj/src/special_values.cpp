#include "cbsum/special_values.hpp"

namespace cbsum {

mpz_class fermat_quotient(const mpz_class& a, int64_t p, unsigned e) {
  PrimeModulus M(p, e + 1);
  if (mod_reduce(a, mpz_class(p)) == 0)
    throw NotInvertibleError("Fermat quotient base divisible by p");
  mpz_class t = mod_pow(mod_reduce(a, M.m()), mpz_class(p - 1), M.m()) - 1;
  mpz_class q;
  mpz_divexact_ui(q.get_mpz_t(), t.get_mpz_t(),
                  static_cast<unsigned long>(p));
  return mod_reduce(q, M.pk(e));
}

mpz_class euler_number_mod_p(int64_t p) {
  if (p <= 3) throw NotApplicableError("E_{p-3} fast path needs p > 3");
  mpz_class pz(p);
  unsigned long n = static_cast<unsigned long>(p / 4);
  std::vector<mpz_class> ks(n);
  for (unsigned long k = 1; k <= n; ++k) ks[k - 1] = k;
  std::vector<mpz_class> inv = batch_inverse(ks, pz);
  mpz_class s = 0;
  for (auto& i : inv) s += i * i;
  s = mod_reduce(s, pz);
  s = mod_reduce(s * mod_inv(mpz_class(4), pz), pz);
  if ((p - 1) / 2 % 2 == 1) s = mod_reduce(-s, pz);
  return s;
}

mpz_class bernoulli_mod_p(int64_t p, unsigned long m) {
  if (m % 2 != 0 || m < 2 || m > static_cast<unsigned long>(p - 3))
    throw NotApplicableError("Bernoulli fast path needs even 2 <= m <= p-3");
  mpz_class p2 = mpz_class(p) * p;
  mpz_class s = 0;
  mpz_class mz(m);
  for (int64_t a = 1; a < p; ++a) s += mod_pow(mpz_class(a), mz, p2);
  s = mod_reduce(s, p2);
  mpz_class b;
  mpz_divexact_ui(b.get_mpz_t(), s.get_mpz_t(),
                  static_cast<unsigned long>(p));
  return mod_reduce(b, mpz_class(p));
}

std::vector<mpz_class> inverse_table(int64_t p, unsigned long n, unsigned e) {
  if (n >= static_cast<unsigned long>(p))
    throw IndexOutOfRangeError("inverse table range must stay below p");
  PrimeModulus M(p, e);
  std::vector<mpz_class> ks(n);
  for (unsigned long k = 1; k <= n; ++k) ks[k - 1] = k;
  return batch_inverse(ks, M.m());
}

mpz_class harmonic_mod(int64_t p, unsigned long n, unsigned e) {
  PrimeModulus M(p, e);
  mpz_class s = 0;
  for (auto& i : inverse_table(p, n, e)) s += i;
  return mod_reduce(s, M.m());
}

std::vector<mpz_class> harmonic_prefix_mod(int64_t p, unsigned long n,
                                           unsigned e) {
  PrimeModulus M(p, e);
  std::vector<mpz_class> h(n + 1);
  h[0] = 0;
  std::vector<mpz_class> inv = inverse_table(p, n, e);
  for (unsigned long k = 1; k <= n; ++k)
    h[k] = mod_reduce(h[k - 1] + inv[k - 1], M.m());
  return h;
}

mpz_class factorial_quarter_mod(int64_t p) {
  if (p % 4 != 3)
    throw NotApplicableError("quarter factorial needs p == 3 (mod 4)");
  mpz_class pz(p), f = 1;
  for (int64_t j = 2; j <= (p + 1) / 4; ++j) f = mod_reduce(f * j, pz);
  return f;
}

std::vector<mpz_class> row_binomials_mod(int64_t p, unsigned e) {
  PrimeModulus M(p, e);
  unsigned long n = static_cast<unsigned long>(p - 1);
  std::vector<mpz_class> row(n + 1);
  std::vector<mpz_class> inv = inverse_table(p, n, e);
  row[0] = 1;
  // binom(p-1, k) = binom(p-1, k-1) * (p-k)/k; p-k and k are units for k < p.
  for (unsigned long k = 1; k <= n; ++k)
    row[k] = mod_reduce(row[k - 1] * (p - static_cast<int64_t>(k)) *
                            inv[k - 1],
                        M.m());
  return row;
}

mpz_class central_row_binomial_mod(int64_t p, unsigned e) {
  PrimeModulus M(p, e);
  mpz_class num = 1, den = 1;
  for (int64_t j = 1; j <= (p - 1) / 2; ++j) {
    num = mod_reduce(num * (p - j), M.m());
    den = mod_reduce(den * j, M.m());
  }
  return mod_reduce(num * mod_inv(den, M.m()), M.m());
}

CentralBinomialStream::CentralBinomialStream(const PrimeModulus& M)
    : M_(&M), k_(0), v_(0), u_(1), val_(Padic::from_unit(M, 0, 1)) {}

void CentralBinomialStream::advance() {
  ++k_;
  // binom(2k,k) = binom(2k-2,k-1) * 2(2k-1)/k; peel p from 2k-1 and k so the
  // unit part stays invertible even past k = p.
  ValuationSplit num = remove_prime_power(mpz_class(2 * k_ - 1), M_->p());
  ValuationSplit den = remove_prime_power(mpz_class(k_), M_->p());
  v_ += static_cast<long>(num.v) - static_cast<long>(den.v);
  u_ = mod_reduce(u_ * 2 * num.unit, M_->m());
  u_ = mod_reduce(u_ * mod_inv(mod_reduce(den.unit, M_->m()), M_->m()),
                  M_->m());
  val_ = Padic::from_unit(*M_, v_, u_);
}

TrinomialEdgeStream::TrinomialEdgeStream(const PrimeModulus& M)
    : M_(&M), k_(0), v_(0), u_(1), val_(Padic::from_unit(M, 0, 1)) {}

void TrinomialEdgeStream::advance() {
  ++k_;
  unsigned long km = k_ - 1;  // ratio binom(3k,k)/binom(3k-3,k-1) at k-1 -> k
  // binom(3k+3,k+1)/binom(3k,k) = 3(3k+1)(3k+2) / (2(k+1)(2k+1))
  mpz_class num_a(3 * km + 1), num_b(3 * km + 2);
  mpz_class den_a(km + 1), den_b(2 * km + 1);
  // The constant numerator factor 3 is p itself at p = 3.
  ValuationSplit nc = remove_prime_power(mpz_class(3), M_->p());
  ValuationSplit na = remove_prime_power(num_a, M_->p());
  ValuationSplit nb = remove_prime_power(num_b, M_->p());
  ValuationSplit da = remove_prime_power(den_a, M_->p());
  ValuationSplit db = remove_prime_power(den_b, M_->p());
  v_ += static_cast<long>(nc.v + na.v + nb.v) - static_cast<long>(da.v + db.v);
  u_ = mod_reduce(u_ * nc.unit % M_->m() * na.unit % M_->m() * nb.unit,
                  M_->m());
  mpz_class d = mod_reduce(mpz_class(2) * da.unit % M_->m() * db.unit,
                           M_->m());
  u_ = mod_reduce(u_ * mod_inv(d, M_->m()), M_->m());
  val_ = Padic::from_unit(*M_, v_, u_);
}

SpecialValues compute_special_values(int64_t p) {
  if (p < 3 || !is_prime(p) || p % 2 == 0)
    throw ConfigError("special values need an odd prime");
  SpecialValues sv;
  sv.p = p;
  sv.qp2 = fermat_quotient(2, p, 3);
  if (p != 3) sv.qp3 = fermat_quotient(3, p, 3);
  if (p > 3) {
    sv.e_pm3 = euler_number_mod_p(p);
    sv.b_pm3 = bernoulli_mod_p(p, static_cast<unsigned long>(p - 3));
  }
  if (p > 5) sv.b_pm5 = bernoulli_mod_p(p, static_cast<unsigned long>(p - 5));
  sv.h_full = harmonic_mod(p, static_cast<unsigned long>(p - 1), 5);
  sv.h_half = harmonic_mod(p, static_cast<unsigned long>((p - 1) / 2), 3);
  sv.leg_m1 = legendre_symbol(mpz_class(-1), p);
  sv.leg_2 = legendre_symbol(mpz_class(2), p);
  sv.leg_m2 = legendre_symbol(mpz_class(-2), p);
  sv.leg_p7 = p == 7 ? 0 : legendre_symbol(mpz_class(p), 7);
  sv.leg_p11 = p == 11 ? 0 : legendre_symbol(mpz_class(p), 11);
  if (p % 4 == 3) sv.fact_q = factorial_quarter_mod(p);
  return sv;
}

}  // namespace cbsum
