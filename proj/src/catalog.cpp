#include "cbsum/catalog.hpp"

#include "cbsum/combinatorics.hpp"
#include "cbsum/rational.hpp"

#include <chrono>
#include <utility>

namespace cbsum {

const char* to_string(CheckSource s) {
  switch (s) {
    case CheckSource::theorem: return "theorem";
    case CheckSource::lemma: return "lemma";
    case CheckSource::derived: return "derived";
    case CheckSource::conjecture: return "conjecture";
    case CheckSource::reconstruction: return "reconstruction";
    case CheckSource::background: return "background";
  }
  return "unknown";
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "unknown";
}

// ---- CheckContext ---------------------------------------------------------

CheckContext::CheckContext(int64_t p) : p_(p), sv_(compute_special_values(p)) {}

const PrimeModulus& CheckContext::modulus(unsigned e) {
  auto it = mods_.find(e);
  if (it == mods_.end()) it = mods_.emplace(e, PrimeModulus(p_, e)).first;
  return it->second;
}

const std::vector<Padic>& CheckContext::central_binomials(unsigned e,
                                                          unsigned long count) {
  auto it = central_streams_.find(e);
  if (it == central_streams_.end())
    it = central_streams_.emplace(e, CentralBinomialStream(modulus(e))).first;
  auto& vec = central_[e];
  auto& st = it->second;
  while (vec.size() < count) {
    vec.push_back(st.value());
    st.advance();
  }
  return vec;
}

const std::vector<Padic>& CheckContext::trinomial_edges(unsigned e,
                                                        unsigned long count) {
  auto it = trinomial_streams_.find(e);
  if (it == trinomial_streams_.end())
    it = trinomial_streams_.emplace(e, TrinomialEdgeStream(modulus(e))).first;
  auto& vec = trinomial_[e];
  auto& st = it->second;
  while (vec.size() < count) {
    vec.push_back(st.value());
    st.advance();
  }
  return vec;
}

const std::vector<mpz_class>& CheckContext::row_binomials(unsigned e) {
  auto it = rows_.find(e);
  if (it == rows_.end()) it = rows_.emplace(e, row_binomials_mod(p_, e)).first;
  return it->second;
}

const std::vector<mpz_class>& CheckContext::unit_inverses(unsigned e) {
  auto it = invs_.find(e);
  if (it == invs_.end()) {
    std::vector<mpz_class> byk(p_);
    auto table = inverse_table(p_, p_ - 1, e);
    for (int64_t k = 1; k < p_; ++k) byk[k] = std::move(table[k - 1]);
    it = invs_.emplace(e, std::move(byk)).first;
  }
  return it->second;
}

const std::vector<mpz_class>& CheckContext::central_unit_inverses(
    unsigned e, unsigned long count) {
  auto& inv = central_invs_[e];
  if (inv.size() < count) {
    const auto& cb = central_binomials(e, count);
    std::vector<mpz_class> units(count);
    for (unsigned long k = 0; k < count; ++k) units[k] = cb[k].unit();
    inv = batch_inverse(units, modulus(e).m());
  }
  return inv;
}

const QuadraticRepresentation* CheckContext::representation(int d) {
  auto it = reps_.find(d);
  if (it == reps_.end()) {
    std::optional<QuadraticRepresentation> rep;
    if (d == 1) {
      if (p_ % 4 == 1) {
        rep = cornacchia(1, mpz_class(p_));
        if (rep) rep = normalize_representation(*rep, NormalizationRule::x_mod4_eq1);
      }
    } else if (d == 7) {
      if (sv_.leg_p7 == 1) rep = cornacchia(7, mpz_class(p_));
    } else if (d == 11) {
      if (sv_.leg_p11 == 1) rep = cornacchia(11, mpz_class(4 * p_));
    } else {
      throw ConfigError("unsupported form coefficient d");
    }
    it = reps_.emplace(d, std::move(rep)).first;
  }
  return it->second ? &*it->second : nullptr;
}

namespace {

// ---- shared helpers -------------------------------------------------------

int sgn_half_minus(int64_t p) { return ((p - 1) / 2) % 2 == 0 ? 1 : -1; }
int sgn_half_plus(int64_t p) { return -sgn_half_minus(p); }
// (-1)^((p-1)/4) for p == 1 (mod 4).
int sgn_quarter(int64_t p) { return ((p - 1) / 4) % 2 == 0 ? 1 : -1; }
int alt(int64_t k) { return k % 2 == 0 ? 1 : -1; }

// E_{p-3} and B_{p-3} degenerate to E_0 = B_0 = 1 at p = 3.
mpz_class epm3(const SpecialValues& sv) {
  return sv.e_pm3 ? *sv.e_pm3 : mpz_class(1);
}
mpz_class bpm3(const SpecialValues& sv) {
  return sv.b_pm3 ? *sv.b_pm3 : mpz_class(1);
}

EvalOutcome finish(const mpz_class& lhs, const mpz_class& rhs,
                   const PrimeModulus& M, unsigned t) {
  EvalOutcome o;
  o.lhs = mod_reduce(lhs, M.pk(t));
  o.rhs = mod_reduce(rhs, M.pk(t));
  o.pass = o.lhs == o.rhs;
  return o;
}

EvalOutcome finish_q(const Rational& lhs, const Rational& rhs, int64_t p,
                     unsigned t) {
  PrimeModulus M(p, t);
  EvalOutcome o;
  o.lhs = rational_to_residue(lhs, M, t);
  o.rhs = rational_to_residue(rhs, M, t);
  o.pass = o.lhs == o.rhs;
  return o;
}

Rational frac(mpz_class num, mpz_class den) {
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

mpz_class pow_z(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}
mpz_class pow_z(long base, unsigned long e) { return pow_z(mpz_class(base), e); }

// (a^(p-1) - 1)/p as an exact integer (oracle-side Fermat quotient).
mpz_class qp_exact(int64_t p, long a) {
  mpz_class t = pow_z(a, p - 1) - 1;
  mpz_class q;
  mpz_divexact_ui(q.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(p));
  return q;
}

// binom(n, k) mod m for 0 <= k <= n < p: falling product over inverse factorial.
mpz_class small_binomial_mod(int64_t n, int64_t k, const mpz_class& m) {
  mpz_class num(1), den(1);
  for (int64_t j = 0; j < k; ++j) {
    num *= n - j;
    num %= m;
    den *= j + 1;
    den %= m;
  }
  return mod_reduce(num * mod_inv(den, m), m);
}

// Inverses of the odd values 2k+1 for (p+1)/2 <= k <= p-1 (these exceed p, so
// they live outside the 1..p-1 table); indexed by (2k+1-(p+2))/2.
std::vector<mpz_class> high_odd_inverses(int64_t p, const mpz_class& m) {
  std::vector<mpz_class> odds;
  odds.reserve((p - 1) / 2);
  for (int64_t v = p + 2; v <= 2 * p - 1; v += 2) odds.emplace_back(v);
  return batch_inverse(odds, m);
}

const IntegerSeries& eta_series() {
  static const IntegerSeries s = eta_quartic_sixth_series(1013);
  return s;
}

// ---- fast evaluators ------------------------------------------------------
// Sums accumulate plain residues mod p^working_e: a term p^v * u with the
// unit known mod p^we is exact mod p^(v+we), so terms with v >= working_e
// drop and the rest enter as p^v * u.  Negative-valuation factors (1/binom
// past p/2, C_{p-1} = binom/p) are removed algebraically before summing.

EvalOutcome fast_t11a(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(3);
  const mpz_class& m = M.m();
  const auto& cb = c.central_binomials(3, (p - 1) / 2);
  const auto& inv = c.unit_inverses(3);
  const mpz_class iw = mod_inv(mpz_class(4), m);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 0; k <= (p - 3) / 2; ++k) {
    t = cb[k].unit() * inv[2 * k + 1];
    t %= m;
    t *= pw;
    t %= m;
    sum += t;
    if (sum >= m) sum -= m;
    pw *= iw;
    pw %= m;
  }
  return finish(sum, sgn_half_plus(p) * c.sv().qp2, M, 2);
}

// Shared by T1.1b/T1.1e: p * sum_{p/2<k<p} unit(binom(2k,k)) / ((2k+1) w^k).
mpz_class high_range_times_p(CheckContext& c, long w) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(3);
  const mpz_class& m = M.m();
  const auto& cb = c.central_binomials(3, p);
  const auto odds = high_odd_inverses(p, m);
  const mpz_class iw = mod_inv(mpz_class(w), m);
  mpz_class pw = mod_pow(iw, mpz_class((p + 1) / 2), m), sum(0), t;
  for (int64_t k = (p + 1) / 2; k <= p - 1; ++k) {
    t = cb[k].unit() * odds[k - (p + 1) / 2];
    t %= m;
    t *= pw;
    t %= m;
    sum += t;
    if (sum >= m) sum -= m;
    pw *= iw;
    pw %= m;
  }
  return mod_reduce(p * sum, m);
}

EvalOutcome fast_t11b(CheckContext& c) {
  const PrimeModulus& M = c.modulus(3);
  mpz_class lhs = high_range_times_p(c, 4);
  return finish(lhs, c.p() * epm3(c.sv()), M, 2);
}

EvalOutcome fast_t11e(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(3);
  const mpz_class pz(p);
  mpz_class lhs = high_range_times_p(c, 16);
  mpz_class e3 = mod_reduce(epm3(c.sv()) * mod_inv(mpz_class(3), pz), pz);
  return finish(lhs, p * e3, M, 2);
}

EvalOutcome fast_t11c(CheckContext& c) {
  const int64_t p = c.p();
  const int64_t n = (p - 1) / 2;
  const PrimeModulus& M = c.modulus(2);
  const mpz_class& m = M.m();
  const auto& ci = c.central_unit_inverses(2, n + 1);
  const auto& inv = c.unit_inverses(2);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 1; k <= n; ++k) {
    pw *= 4;
    pw %= m;
    t = pw * inv[2 * k - 1];
    t %= m;
    t *= ci[k];
    t %= m;
    sum += t;
    if (sum >= m) sum -= m;
  }
  return finish(sum, epm3(c.sv()) + sgn_half_minus(p) - 1, M, 1);
}

EvalOutcome fast_t11d(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(3);
  const mpz_class& m = M.m();
  const auto& cb = c.central_binomials(3, (p - 1) / 2);
  const auto& inv = c.unit_inverses(3);
  const mpz_class iw = mod_inv(mpz_class(16), m);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 0; k <= (p - 3) / 2; ++k) {
    t = cb[k].unit() * inv[2 * k + 1];
    t %= m;
    t *= pw;
    t %= m;
    sum += t;
    if (sum >= m) sum -= m;
    pw *= iw;
    pw %= m;
  }
  return finish(sum, 0, M, 2);
}

EvalOutcome fast_t11f(CheckContext& c) {
  const int64_t p = c.p();
  const int64_t n = (p - 1) / 2;
  const PrimeModulus& M = c.modulus(2);
  const mpz_class& m = M.m();
  const mpz_class pz(p);
  const auto& ci = c.central_unit_inverses(2, n + 1);
  const auto& inv = c.unit_inverses(2);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 1; k <= n; ++k) {
    pw *= 16;
    pw %= m;
    t = pw * inv[k];
    t %= m;
    t *= inv[2 * k - 1];
    t %= m;
    t *= ci[k];
    t %= m;
    sum += t;
    if (sum >= m) sum -= m;
  }
  mpz_class rhs = mod_reduce(8 * epm3(c.sv()) * mod_inv(mpz_class(3), pz), pz);
  return finish(sum, rhs, M, 1);
}

EvalOutcome fast_d17(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(2);
  const mpz_class& m = M.m();
  const auto& cb = c.central_binomials(2, (p - 1) / 2);
  const auto& inv = c.unit_inverses(2);
  const mpz_class iw = mod_inv(mpz_class(4), m);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 0; k <= (p - 3) / 2; ++k) {
    t = cb[k].unit() * inv[2 * k + 1];
    t %= m;
    t *= inv[2 * k + 1];
    t %= m;
    t *= pw;
    t %= m;
    sum += t;
    if (sum >= m) sum -= m;
    pw *= iw;
    pw %= m;
  }
  const mpz_class& q = c.sv().qp2;
  mpz_class rhs = sgn_half_plus(p) *
                  mod_reduce(q * q % m * mod_inv(mpz_class(2), m), m);
  return finish(sum, rhs, M, 1);
}

EvalOutcome fast_d18(CheckContext& c) {
  const int64_t p = c.p();
  const int64_t n = (p - 1) / 2;
  const PrimeModulus& M = c.modulus(2);
  const mpz_class& m = M.m();
  const auto& ci = c.central_unit_inverses(2, n + 1);
  const auto& inv = c.unit_inverses(2);
  mpz_class pw = mod_reduce(mpz_class(16), m), sum(0), t;
  for (int64_t k = 2; k <= n; ++k) {
    t = pw * inv[k - 1];
    t %= m;
    t *= inv[k - 1];
    t %= m;
    t *= ci[k];
    t %= m;
    sum += t;
    if (sum >= m) sum -= m;
    pw *= 4;
    pw %= m;
  }
  // The (-1/p) factor multiplies the Euler-number term as well: the identity
  //   n sum (-1)^k/((k-1)^2 binom(n,k)) = (1+(-1)^n)/n - sum (1+2(-1)^k)/k^2
  // at n = (p-1)/2 gives 8(-1/p)E_{p-3} - 12(-1/p) - 4 (checked: p = 7 has
  // sum = 52/15 == 3 (mod 7), and 8 - 8 E_4 = -32 == 3, E_4 = 5).
  mpz_class rhs = c.sv().leg_m1 * (8 * epm3(c.sv()) - 12) - 4;
  return finish(sum, rhs, M, 1);
}

EvalOutcome fast_d19(CheckContext& c) {
  const int64_t p = c.p();
  const int64_t n = (p - 1) / 2;
  const PrimeModulus& M = c.modulus(2);
  const mpz_class& m = M.m();
  const auto& ci = c.central_unit_inverses(2, n + 1);
  const auto& inv = c.unit_inverses(2);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 0; k <= n; ++k) {
    t = pw * inv[k + 1];
    t %= m;
    t *= ci[k];
    t %= m;
    sum += t;
    if (sum >= m) sum -= m;
    pw *= 4;
    pw %= m;
  }
  mpz_class rhs = c.sv().leg_m1 * (4 - 2 * epm3(c.sv())) - 2;
  return finish(sum, rhs, M, 1);
}

EvalOutcome fast_t12a(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(2);
  const mpz_class& m = M.m();
  const auto& cb = c.central_binomials(2, p);
  const mpz_class iw = mod_inv(mpz_class(64), m);
  mpz_class pw(1), sum(0), t, kk;
  for (int64_t k = 0; k < p; ++k) {
    if (cb[k].valuation() == 0) {
      kk = k;
      t = kk * kk % m * kk % m;
      t *= cb[k].unit();
      t %= m;
      t = t * cb[k].unit() % m * cb[k].unit() % m;
      t *= pw;
      t %= m;
      sum += t;
      if (sum >= m) sum -= m;
    }
    pw *= iw;
    pw %= m;
  }
  mpz_class rhs(0);
  if (p % 4 == 3) {
    const mpz_class pz(p);
    mpz_class f4 = mod_pow(*c.sv().fact_q, mpz_class(4), pz);
    rhs = -mod_inv(mpz_class(640), pz) * mod_inv(f4, pz);
  }
  return finish(sum, rhs, M, 1);
}

EvalOutcome fast_t12b(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(3);
  const mpz_class& m = M.m();
  const auto& cb = c.central_binomials(3, p);
  const auto& row = c.row_binomials(3);
  const mpz_class iw = mod_inv(mpz_class(64), m);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 0; k < p; ++k) {
    if (cb[k].valuation() == 0) {
      t = row[k] * cb[k].unit() % m;
      t = t * cb[k].unit() % m * cb[k].unit() % m;
      t *= pw;
      t %= m;
      if (k % 2 == 0) {
        sum += t;
        if (sum >= m) sum -= m;
      } else {
        sum -= t;
        if (sum < 0) sum += m;
      }
    }
    pw *= iw;
    pw %= m;
  }
  return finish(sum, 0, M, 2);
}

EvalOutcome fast_t12c(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(2);
  const mpz_class& m = M.m();
  const auto& cb = c.central_binomials(2, p);
  const auto& inv = c.unit_inverses(2);
  const mpz_class iw = mod_inv(mpz_class(16), m);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 0; k <= p - 2; ++k) {
    if (cb[k].valuation() == 0) {
      t = cb[k].unit() * cb[k].unit() % m;
      t = t * inv[k + 1] % m * inv[k + 1] % m;
      t *= pw;
      t %= m;
      sum += t;
      if (sum >= m) sum -= m;
    }
    pw *= iw;
    pw %= m;
  }
  // k = p-1: C_{p-1} = binom(2p-2,p-1)/p is the stream unit itself.
  t = cb[p - 1].unit() * cb[p - 1].unit() % m;
  t *= pw;
  t %= m;
  sum = mod_reduce(sum + t, m);
  return finish(sum, -3, M, 1);
}

EvalOutcome fast_t12d(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(2);
  const mpz_class& m = M.m();
  const auto& cb = c.central_binomials(2, p);
  const auto& inv = c.unit_inverses(2);
  const mpz_class iw = mod_inv(mpz_class(64), m);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 0; k <= p - 2; ++k) {
    if (cb[k].valuation() == 0) {
      t = cb[k].unit() * cb[k].unit() % m * cb[k].unit() % m;
      t = t * inv[k + 1] % m * inv[k + 1] % m * inv[k + 1] % m;
      t *= pw;
      t %= m;
      sum += t;
      if (sum >= m) sum -= m;
    }
    pw *= iw;
    pw %= m;
  }
  t = cb[p - 1].unit() * cb[p - 1].unit() % m * cb[p - 1].unit() % m;
  t *= pw;
  t %= m;
  sum = mod_reduce(sum + t, m);
  mpz_class rhs(7);
  if (p % 4 == 3) {
    const mpz_class pz(p);
    mpz_class f4 = mod_pow(*c.sv().fact_q, mpz_class(4), pz);
    rhs -= mod_reduce(3 * mod_inv(mpz_class(2), pz) * mod_inv(f4, pz), pz);
  }
  return finish(sum, rhs, M, 1);
}

// LHS of (1.14) mod p^3: sum_{k<p} binom(2k,k) C_k / 32^k, where the k = p-1
// term is binom(2k,k)^2/p = p * unit^2.
mpz_class t12e_lhs(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(3);
  const mpz_class& m = M.m();
  const auto& cb = c.central_binomials(3, p);
  const auto& inv = c.unit_inverses(3);
  const mpz_class iw = mod_inv(mpz_class(32), m);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 0; k <= p - 2; ++k) {
    long v = 2 * cb[k].valuation();
    if (v < 3) {
      t = cb[k].unit() * cb[k].unit() % m;
      t *= inv[k + 1];
      t %= m;
      t *= pw;
      t %= m;
      if (v) {
        t *= M.pk(v);
        t %= m;
      }
      sum += t;
      if (sum >= m) sum -= m;
    }
    pw *= iw;
    pw %= m;
  }
  t = cb[p - 1].unit() * cb[p - 1].unit() % m;
  t *= pw;
  t %= m;
  t *= p;
  t %= m;
  return mod_reduce(sum + t, m);
}

EvalOutcome fast_t12e(CheckContext& c) {
  return finish(t12e_lhs(c), c.p(), c.modulus(3), 2);
}

EvalOutcome fast_t12e3(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(3);
  const mpz_class& m = M.m();
  const mpz_class pz(p);
  mpz_class b = small_binomial_mod((p - 3) / 2, (p - 3) / 4, m);
  mpz_class w = mod_reduce(4 * pz + mod_pow(mpz_class(2), pz, m) - 6, m);
  return finish(t12e_lhs(c), pz + w * b, M, 2);
}

EvalOutcome fast_l23(CheckContext& c) {
  const int64_t p = c.p();
  const int64_t n = (p - 1) / 2;
  const PrimeModulus& M = c.modulus(2);
  const mpz_class& m = M.m();
  const auto& ci = c.central_unit_inverses(2, n + 1);
  const auto& inv = c.unit_inverses(2);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 1; k <= n; ++k) {
    pw *= 4;
    pw %= m;
    t = pw * inv[k];
    t %= m;
    t *= ci[k];
    t %= m;
    sum += t;
    if (sum >= m) sum -= m;
  }
  return finish(sum, 2 * (sgn_half_minus(p) - 1), M, 1);
}

EvalOutcome fast_l23s(CheckContext& c) {
  const int64_t p = c.p();
  const int64_t n = (p - 1) / 2;
  const PrimeModulus& M = c.modulus(4);
  const mpz_class& m = M.m();
  const mpz_class pz(p);
  const auto& ci = c.central_unit_inverses(4, n + 1);
  const auto& inv = c.unit_inverses(4);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 1; k <= n; ++k) {
    pw *= 4;
    pw %= m;
    t = pw * inv[k];
    t %= m;
    t *= ci[k];
    t %= m;
    sum += t;
    if (sum >= m) sum -= m;
  }
  mpz_class lhs = mod_reduce(sum * mod_inv(mpz_class(2), m), m);
  const mpz_class& q = c.sv().qp2;
  mpz_class inner = mod_reduce(1 - pz * q + pz * pz % m * q % m * q, m);
  return finish(lhs, sgn_half_minus(p) * inner - 1, M, 3);
}

EvalOutcome fast_r21c(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(3);
  const mpz_class& m = M.m();
  const mpz_class pz(p);
  const auto& cb = c.central_binomials(3, (p - 1) / 2);
  const auto& inv = c.unit_inverses(3);
  const mpz_class iw = mod_inv(mpz_class(8), m);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 0; k <= (p - 3) / 2; ++k) {
    t = cb[k].unit() * inv[2 * k + 1];
    t %= m;
    t *= pw;
    t %= m;
    sum += t;
    if (sum >= m) sum -= m;
    pw *= iw;
    pw %= m;
  }
  const mpz_class& q = c.sv().qp2;
  mpz_class inner = mod_reduce(
      -q * mod_inv(mpz_class(2), m) + pz * mod_inv(mpz_class(8), m) % m * q % m * q,
      m);
  return finish(sum, c.sv().leg_m2 * inner, M, 2);
}

EvalOutcome fast_l26(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(2);
  const mpz_class& m = M.m();
  const auto& inv = c.unit_inverses(2);
  mpz_class sum(0), t;
  for (int64_t k = 1; k <= p / 6; ++k) {
    t = inv[k] * inv[k];
    t %= m;
    if (k % 2 == 0) {
      sum += t;
      if (sum >= m) sum -= m;
    } else {
      sum -= t;
      if (sum < 0) sum += m;
    }
  }
  mpz_class rhs = sgn_half_minus(p) * 10 * epm3(c.sv());
  return finish(sum, rhs, M, 1);
}

EvalOutcome fast_p31(CheckContext& c) {
  const int64_t p = c.p();
  const int64_t n = (p - 1) / 2;
  const PrimeModulus& M = c.modulus(2);
  const mpz_class& m = M.m();
  const auto& ci = c.central_unit_inverses(2, n + 1);
  const auto& inv = c.unit_inverses(2);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 1; k <= n; ++k) {
    pw *= 4;
    pw %= m;
    t = pw * inv[k];
    t %= m;
    t *= inv[2 * k - 1];
    t %= m;
    t *= ci[k];
    t %= m;
    sum += t;
    if (sum >= m) sum -= m;
  }
  return finish(sum, 2 * epm3(c.sv()), M, 1);
}

EvalOutcome fast_pfb(CheckContext& c) {
  const int64_t p = c.p();
  const int64_t n = (p - 1) / 2;
  const mpz_class pz(p);
  const auto& cb = c.central_binomials(2, p);
  const auto& ci = c.central_unit_inverses(2, n + 1);
  const auto& inv = c.unit_inverses(2);
  mpz_class agg_l(0), agg_r(0), lhs, rhs;
  for (int64_t k = 1; k <= n; ++k) {
    lhs = mod_reduce(cb[p - k].unit(), pz);
    rhs = mod_reduce(-2 * inv[k] * ci[k], pz);
    if (lhs != rhs) return {lhs, rhs, false};
    agg_l = mod_reduce(agg_l + lhs, pz);
    agg_r = mod_reduce(agg_r + rhs, pz);
  }
  return {agg_l, agg_r, true};
}

EvalOutcome fast_pf4(CheckContext& c) {
  const int64_t p = c.p();
  const mpz_class pz(p);
  const PrimeModulus& M = c.modulus(3);
  const mpz_class& m2 = M.pk(2);
  const auto& row = c.row_binomials(3);
  const auto h = harmonic_prefix_mod(p, p - 1, 1);
  mpz_class agg_l(0), agg_r(0), lhs, rhs;
  for (int64_t k = 0; k < p; ++k) {
    lhs = mod_reduce(alt(k) * row[k], m2);
    rhs = mod_reduce(1 - pz * h[k], m2);
    if (lhs != rhs) return {lhs, rhs, false};
    agg_l = mod_reduce(agg_l + lhs, m2);
    agg_r = mod_reduce(agg_r + rhs, m2);
  }
  return {agg_l, agg_r, true};
}

EvalOutcome fast_bkg1(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(3);
  const mpz_class& m = M.m();
  const auto& cb = c.central_binomials(3, p);
  const mpz_class iw = mod_inv(mpz_class(64), m);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 0; k < p; ++k) {
    if (cb[k].valuation() == 0) {
      t = cb[k].unit() * cb[k].unit() % m * cb[k].unit() % m;
      t *= pw;
      t %= m;
      sum += t;
      if (sum >= m) sum -= m;
    }
    pw *= iw;
    pw %= m;
  }
  return finish(sum, eta_series().at(p), M, 2);
}

EvalOutcome fast_bkg2(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(3);
  mpz_class lhs = sgn_half_minus(p) * central_row_binomial_mod(p, 3);
  mpz_class rhs = mod_pow(mpz_class(4), mpz_class(p - 1), M.m());
  return finish(lhs, rhs, M, 3);
}

EvalOutcome fast_bkg3(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(3);
  const mpz_class pz(p);
  mpz_class y = mod_reduce(bpm3(c.sv()) * mod_inv(mpz_class(3), pz), pz);
  return finish(c.sv().h_full, -pz * pz * y, M, 3);
}

EvalOutcome fast_bkg4(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(1);
  const mpz_class& m = M.m();
  // Independent route: k^{p-3} by binary powering (the SpecialValues table
  // route goes through batched inversion instead).
  mpz_class sum(0);
  for (int64_t k = 1; k <= p / 4; ++k) {
    sum += mod_pow(mpz_class(k), mpz_class(p - 3), m);
    sum %= m;
  }
  mpz_class rhs = sgn_half_minus(p) * 4 * epm3(c.sv());
  return finish(sum, rhs, M, 1);
}

EvalOutcome fast_bkg5(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(2);
  const mpz_class& m = M.m();
  const auto& inv = c.unit_inverses(2);
  mpz_class sum(0), t;
  for (int64_t k = 1; k <= (p - 1) / 2; ++k) {
    t = inv[k] * inv[k];
    t %= m;
    if (k % 2 == 0) {
      sum += t;
      if (sum >= m) sum -= m;
    } else {
      sum -= t;
      if (sum < 0) sum += m;
    }
  }
  mpz_class rhs = 2 * sgn_half_minus(p) * epm3(c.sv());
  return finish(sum, rhs, M, 1);
}

EvalOutcome fast_c51a(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(6);
  const mpz_class& m = M.m();
  const mpz_class pz(p);
  const auto& cb = c.central_binomials(6, (p - 1) / 2);
  const auto& inv = c.unit_inverses(6);
  const mpz_class iw = mod_inv(mpz_class(16), m);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 0; k <= (p - 3) / 2; ++k) {
    t = cb[k].unit() * inv[2 * k + 1];
    t %= m;
    t *= pw;
    t %= m;
    sum += t;
    if (sum >= m) sum -= m;
    pw *= iw;
    pw %= m;
  }
  mpz_class term1 = mod_reduce(c.sv().h_full * mod_inv(mpz_class(12), m), m);
  mpz_class y = mod_reduce(*c.sv().b_pm5 * mod_inv(mpz_class(160), pz), pz);
  mpz_class rhs = sgn_half_minus(p) * mod_reduce(term1 + 3 * M.pk(4) * y, m);
  return finish(sum, rhs, M, 5);
}

EvalOutcome fast_c51b(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(4);
  const mpz_class& m = M.m();
  const mpz_class pz(p);
  const auto& cb = c.central_binomials(4, (p - 1) / 2);
  const auto& inv = c.unit_inverses(4);
  const mpz_class iw = mod_inv(mpz_class(16), m);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 0; k <= (p - 3) / 2; ++k) {
    t = cb[k].unit() * inv[2 * k + 1];
    t %= m;
    t = t * inv[2 * k + 1] % m * inv[2 * k + 1] % m;
    t *= pw;
    t %= m;
    sum += t;
    if (sum >= m) sum -= m;
    pw *= iw;
    pw %= m;
  }
  // H_{p-1} = p^2 * w with w integral (Wolstenholme); divide the residue
  // exactly so the quotient stays correct mod p^3.
  mpz_class p2 = pz * pz;
  if (c.sv().h_full % p2 != 0)
    throw Error("harmonic residue violates p^2 divisibility");
  mpz_class hq = c.sv().h_full / p2;
  mpz_class y = mod_reduce(*c.sv().b_pm5 * mod_inv(mpz_class(36), pz), pz);
  mpz_class rhs =
      sgn_half_minus(p) * mod_reduce(hq * mod_inv(mpz_class(4), m) + p2 * y, m);
  return finish(sum, rhs, M, 3);
}

EvalOutcome fast_c51c(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(4);
  const mpz_class& m = M.m();
  const mpz_class pz(p);
  const auto& cb = c.central_binomials(4, (p - 1) / 2);
  const auto& inv = c.unit_inverses(4);
  const mpz_class iw = mod_inv(mpz_class(16), m);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 0; k <= (p - 3) / 2; ++k) {
    t = cb[k].unit() * inv[2 * k + 1];
    t %= m;
    t *= inv[2 * k + 1];
    t %= m;
    t *= pw;
    t %= m;
    if (k % 2 == 0) {
      sum += t;
      if (sum >= m) sum -= m;
    } else {
      sum -= t;
      if (sum < 0) sum += m;
    }
    pw *= iw;
    pw %= m;
  }
  if (c.sv().h_full % pz != 0)
    throw Error("harmonic residue violates p divisibility");
  mpz_class hp = c.sv().h_full / pz;
  mpz_class rhs = mod_reduce(hp * mod_inv(mpz_class(5), m), m);
  return finish(sum, rhs, M, 3);
}

EvalOutcome fast_c51d(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(3);
  const mpz_class& m = M.m();
  const mpz_class pz(p);
  const auto& cb = c.central_binomials(3, p);
  const auto odds = high_odd_inverses(p, m);
  const mpz_class iw = mod_inv(mpz_class(16), m);
  mpz_class pw = mod_pow(iw, mpz_class((p + 1) / 2), m), sum(0), t;
  for (int64_t k = (p + 1) / 2; k <= p - 1; ++k) {
    t = cb[k].unit() * odds[k - (p + 1) / 2];
    t %= m;
    t *= odds[k - (p + 1) / 2];
    t %= m;
    t *= pw;
    t %= m;
    if (k % 2 == 0) {
      sum += t;
      if (sum >= m) sum -= m;
    } else {
      sum -= t;
      if (sum < 0) sum += m;
    }
    pw *= iw;
    pw %= m;
  }
  mpz_class lhs = mod_reduce(pz * sum, m);
  mpz_class y = mod_reduce(*c.sv().b_pm3 * mod_inv(mpz_class(4), pz), pz);
  return finish(lhs, -pz * y, M, 2);
}

EvalOutcome fast_c52a(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(4);
  const mpz_class& m = M.m();
  const mpz_class pz(p);
  const auto& cb = c.central_binomials(4, p);
  const auto& inv = c.unit_inverses(4);
  const mpz_class iw = mod_inv(mpz_class(2), m);
  mpz_class pw = iw, sum(0), t;
  for (int64_t k = 1; k < p; ++k) {
    long v = cb[k].valuation();
    if (v < 4) {
      t = cb[k].unit() * inv[k];
      t %= m;
      t *= pw;
      t %= m;
      if (v) {
        t *= M.pk(v);
        t %= m;
      }
      sum += t;
      if (sum >= m) sum -= m;
    }
    pw *= iw;
    pw %= m;
  }
  mpz_class y = mod_reduce(bpm3(c.sv()) * mod_inv(mpz_class(16), pz), pz);
  mpz_class rhs = mod_reduce(
      -(c.sv().h_half * mod_inv(mpz_class(2), m)) + 7 * pz * pz % m * y, m);
  return finish(sum, rhs, M, 3);
}

// Shared by C5.2b / C5.2e: p * sum_{k=1..p-1} w^k/(k^2 binom(2k,k)) mod p^4.
mpz_class scaled_inverse_square_sum(CheckContext& c, long w) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(4);
  const mpz_class& m = M.m();
  const auto& cb = c.central_binomials(4, p);
  const auto& ci = c.central_unit_inverses(4, p);
  const auto& inv = c.unit_inverses(4);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 1; k < p; ++k) {
    pw *= w;
    pw %= m;
    // p * w^k/(k^2 p^v u) = p^(1-v) * w^k * u^{-1} / k^2 with v in {0,1}
    t = pw * inv[k];
    t %= m;
    t *= inv[k];
    t %= m;
    t *= ci[k];
    t %= m;
    if (cb[k].valuation() == 0) {
      t *= p;
      t %= m;
    }
    sum += t;
    if (sum >= m) sum -= m;
  }
  return sum;
}

EvalOutcome fast_c52b(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(4);
  const mpz_class& m = M.m();
  const mpz_class pz(p);
  mpz_class lhs = scaled_inverse_square_sum(c, 2);
  mpz_class y = mod_reduce(bpm3(c.sv()) * mod_inv(mpz_class(16), pz), pz);
  mpz_class rhs = mod_reduce(-c.sv().qp2 + pz * pz % m * y, m);
  return finish(lhs, rhs, M, 3);
}

EvalOutcome fast_c52e(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(4);
  const mpz_class& m = M.m();
  const mpz_class pz(p);
  mpz_class lhs = scaled_inverse_square_sum(c, 3);
  mpz_class y = mod_reduce(bpm3(c.sv()) * mod_inv(mpz_class(9), pz), pz);
  mpz_class rhs = mod_reduce(
      -(3 * (*c.sv().qp3) % m * mod_inv(mpz_class(2), m)) + 4 * pz * pz % m * y,
      m);
  return finish(lhs, rhs, M, 3);
}

EvalOutcome fast_c52c(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(2);
  const mpz_class& m = M.m();
  const auto& cb = c.central_binomials(2, p);
  const auto& inv = c.unit_inverses(2);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 1; k < p; ++k) {
    pw *= 2;
    pw %= m;
    long v = cb[k].valuation();
    if (v < 2) {
      t = pw * inv[k];
      t %= m;
      t *= inv[k];
      t %= m;
      t *= cb[k].unit();
      t %= m;
      if (v) {
        t *= M.pk(v);
        t %= m;
      }
      if (k % 2 == 0) {
        sum += t;
        if (sum >= m) sum -= m;
      } else {
        sum -= t;
        if (sum < 0) sum += m;
      }
    }
  }
  const mpz_class pz(p);
  mpz_class rhs = -mod_reduce(2 * c.sv().qp2 % pz * c.sv().qp2, pz);
  return finish(sum, rhs, M, 1);
}

EvalOutcome fast_c52d(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(4);
  const mpz_class& m = M.m();
  const auto& cb = c.central_binomials(4, p);
  const auto& inv = c.unit_inverses(4);
  const mpz_class iw = mod_inv(mpz_class(3), m);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 1; k < p; ++k) {
    pw *= iw;
    pw %= m;
    long v = cb[k].valuation();
    if (v < 4) {
      t = cb[k].unit() * inv[k];
      t %= m;
      t *= pw;
      t %= m;
      if (v) {
        t *= M.pk(v);
        t %= m;
      }
      sum += t;
      if (sum >= m) sum -= m;
    }
  }
  const int64_t r = p % 3;
  mpz_class hs(0);
  for (int64_t k = 1; k < p; ++k) {
    if (k % 3 != r) {
      hs += inv[k];
      if (hs >= m) hs -= m;
    }
  }
  return finish(sum, -2 * hs, M, 3);
}

EvalOutcome fast_c53(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(3);
  const mpz_class& m = M.m();
  const auto& cb = c.central_binomials(3, p);
  mpz_class sum(0), t;
  for (int64_t k = 0; k < p; ++k) {
    if (cb[k].valuation() == 0) {
      t = cb[k].unit() * cb[k].unit() % m * cb[k].unit() % m;
      sum += t;
      if (sum >= m) sum -= m;
    }
  }
  mpz_class rhs(0);
  if (c.sv().leg_p7 == 1) {
    const QuadraticRepresentation* rep = c.representation(7);
    if (!rep) throw Error("missing x^2+7y^2 representation despite (p/7)=1");
    rhs = 4 * rep->x * rep->x - 2 * p;
  }
  return finish(sum, rhs, M, 2);
}

EvalOutcome fast_c54(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(3);
  const mpz_class& m = M.m();
  const auto& cb = c.central_binomials(3, p);
  const auto& tri = c.trinomial_edges(3, p);
  const mpz_class iw = mod_inv(mpz_class(64), m);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 0; k < p; ++k) {
    long v = 2 * cb[k].valuation() + tri[k].valuation();
    if (v < 3) {
      t = cb[k].unit() * cb[k].unit() % m;
      t *= tri[k].unit();
      t %= m;
      t *= pw;
      t %= m;
      if (v) {
        t *= M.pk(v);
        t %= m;
      }
      sum += t;
      if (sum >= m) sum -= m;
    }
    pw *= iw;
    pw %= m;
  }
  mpz_class rhs(0);
  if (c.sv().leg_p11 == 1) {
    const QuadraticRepresentation* rep = c.representation(11);
    if (!rep) throw Error("missing x^2+11y^2 representation despite (p/11)=1");
    rhs = rep->x * rep->x - 2 * p;
  }
  return finish(sum, rhs, M, 2);
}

// Sum_{k<p} binom(2k,k)^2 * sign^k / w^k mod p^3 (sign via odd k negation).
mpz_class central_square_sum(CheckContext& c, long w, bool alternating,
                             unsigned we) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(we);
  const mpz_class& m = M.m();
  const auto& cb = c.central_binomials(we, p);
  const mpz_class iw = mod_inv(mpz_class(w), m);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 0; k < p; ++k) {
    long v = 2 * cb[k].valuation();
    if (v < static_cast<long>(we)) {
      t = cb[k].unit() * cb[k].unit() % m;
      t *= pw;
      t %= m;
      if (v) {
        t *= M.pk(v);
        t %= m;
      }
      if (alternating && k % 2 != 0) {
        sum -= t;
        if (sum < 0) sum += m;
      } else {
        sum += t;
        if (sum >= m) sum -= m;
      }
    }
    pw *= iw;
    pw %= m;
  }
  return sum;
}

// RHS 2x - p/(2x) mod p^3 from the normalized x^2+y^2 = p representation.
mpz_class c55_rhs(CheckContext& c) {
  const PrimeModulus& M = c.modulus(3);
  const mpz_class& m = M.m();
  const QuadraticRepresentation* rep = c.representation(1);
  if (!rep) throw Error("missing x^2+y^2 representation for p == 1 (mod 4)");
  mpz_class b = mod_reduce(2 * rep->x, m);
  return mod_reduce(b - c.p() * mod_inv(b, m), m);
}

EvalOutcome fast_c55a(CheckContext& c) {
  mpz_class lhs = central_square_sum(c, 8, false, 3);
  return finish(lhs, sgn_quarter(c.p()) * c55_rhs(c), c.modulus(3), 2);
}

EvalOutcome fast_c55b(CheckContext& c) {
  mpz_class lhs = central_square_sum(c, 16, true, 3);
  return finish(lhs, sgn_quarter(c.p()) * c55_rhs(c), c.modulus(3), 2);
}

EvalOutcome fast_c55c(CheckContext& c) {
  mpz_class lhs = central_square_sum(c, 32, false, 3);
  return finish(lhs, c55_rhs(c), c.modulus(3), 2);
}

EvalOutcome fast_c55d(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(3);
  const mpz_class& m = M.m();
  const mpz_class& m2 = M.pk(2);
  const auto& cb = c.central_binomials(3, p);
  const auto& row = c.row_binomials(3);
  const mpz_class iw = mod_inv(mpz_class(8), m);
  mpz_class pw(1), s1(0), t;
  for (int64_t k = 0; k < p; ++k) {
    long v = 2 * cb[k].valuation();
    if (v < 3) {
      t = cb[k].unit() * cb[k].unit() % m;
      t *= row[k];
      t %= m;
      t *= pw;
      t %= m;
      if (v) {
        t *= M.pk(v);
        t %= m;
      }
      if (k % 2 != 0) {
        s1 -= t;
        if (s1 < 0) s1 += m;
      } else {
        s1 += t;
        if (s1 >= m) s1 -= m;
      }
    }
    pw *= iw;
    pw %= m;
  }
  mpz_class l1 = mod_reduce(s1, m2);
  if (l1 != 0) return {l1, mpz_class(0), false};
  mpz_class l2 = mod_reduce(central_square_sum(c, 32, false, 3), m2);
  if (l2 != 0) return {l2, mpz_class(0), false};
  return {mpz_class(0), mpz_class(0), true};
}

EvalOutcome fast_c55e(CheckContext& c) {
  mpz_class lhs = central_square_sum(c, 16, true, 4);
  mpz_class rhs = -central_square_sum(c, 8, false, 4);
  return finish(lhs, rhs, c.modulus(4), 3);
}

EvalOutcome fast_r12a1(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(3);
  const mpz_class& m = M.m();
  const auto& cb = c.central_binomials(3, p);
  const mpz_class iw = mod_inv(mpz_class(64), m);
  mpz_class pw(1), sum(0), t, kk;
  for (int64_t k = 1; k < p; ++k) {
    pw *= iw;
    pw %= m;
    if (cb[k].valuation() == 0) {
      kk = k;
      t = kk * kk % m * kk % m;
      t = t * cb[k].unit() % m * cb[k].unit() % m * cb[k].unit() % m;
      t *= pw;
      t %= m;
      sum += t;
      if (sum >= m) sum -= m;
    }
  }
  return finish(sum, 0, M, 2);
}

EvalOutcome fast_r12a2(CheckContext& c) {
  const int64_t p = c.p();
  const PrimeModulus& M = c.modulus(5);
  const mpz_class& m = M.m();
  const auto& cb = c.central_binomials(5, static_cast<unsigned long>(p) * p);
  const mpz_class iw = mod_inv(mpz_class(64), m);
  mpz_class pw(1), sum(0), t, kk;
  for (int64_t k = 1; k < p * p; ++k) {
    pw *= iw;
    pw %= m;
    long a = (k % p == 0) ? 1 : 0;
    long v = 3 * a + 3 * cb[k].valuation();
    if (v < 5) {
      kk = a ? k / p : k;
      t = kk * kk % m * kk % m;
      t = t * cb[k].unit() % m * cb[k].unit() % m * cb[k].unit() % m;
      t *= pw;
      t %= m;
      if (v) {
        t *= M.pk(v);
        t %= m;
      }
      sum += t;
      if (sum >= m) sum -= m;
    }
  }
  return finish(sum, 0, M, 4);
}

EvalOutcome fast_r12b(CheckContext& c) {
  const int64_t p = c.p();
  const int64_t n = (p - 1) / 2;
  const PrimeModulus& M = c.modulus(3);
  const mpz_class& m = M.m();
  const auto& cb = c.central_binomials(3, n + 1);
  const auto& inv = c.unit_inverses(3);
  const mpz_class iw = mod_inv(mpz_class(16), m);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 1; k <= n; ++k) {
    pw *= iw;
    pw %= m;
    t = cb[k].unit() * inv[k + 1] % m;
    t = t * t % m * (cb[k].unit() * inv[k + 1] % m) % m;
    t *= k;
    t %= m;
    t *= pw;
    t %= m;
    sum += t;
    if (sum >= m) sum -= m;
  }
  return finish(sum, 2 * mpz_class(p) - 2, M, 2);
}

EvalOutcome fast_r12c(CheckContext& c) {
  const int64_t p = c.p();
  const int64_t n = (p - 1) / 2;
  const PrimeModulus& M = c.modulus(3);
  const mpz_class& m = M.m();
  const auto& cb = c.central_binomials(3, n + 1);
  const auto& inv = c.unit_inverses(3);
  const mpz_class iw = mod_inv(mpz_class(64), m);
  mpz_class pw(1), sum(0), t;
  for (int64_t k = 0; k <= n; ++k) {
    t = cb[k].unit() * inv[k + 1] % m;
    t = t * t % m * (cb[k].unit() * inv[k + 1] % m) % m;
    t *= pw;
    t %= m;
    sum += t;
    if (sum >= m) sum -= m;
    pw *= iw;
    pw %= m;
  }
  return finish(sum, 8, M, 2);
}

// ---- exact-rational oracles -------------------------------------------------
// Brute force from definitions: exact binomials/Catalans/harmonics summed as
// rationals, special values from the defining recursions, representations
// from the y-scan search.  No shared code with the fast path beyond reduction.

EvalOutcome orac_t11a(int64_t p) {
  Rational s(0);
  for (int64_t k = 0; k <= (p - 3) / 2; ++k)
    s += frac(central_binomial_exact(k), (2 * k + 1) * pow_z(4, k));
  Rational r = Rational(sgn_half_plus(p)) * Rational(qp_exact(p, 2));
  return finish_q(s, r, p, 2);
}

EvalOutcome orac_t11b(int64_t p) {
  Rational s(0);
  for (int64_t k = (p + 1) / 2; k < p; ++k)
    s += frac(central_binomial_exact(k), (2 * k + 1) * pow_z(4, k));
  return finish_q(s, Rational(p) * Rational(euler_exact(p - 3)), p, 2);
}

EvalOutcome orac_t11c(int64_t p) {
  Rational s(0);
  for (int64_t k = 1; k <= (p - 1) / 2; ++k)
    s += frac(pow_z(4, k), (2 * k - 1) * central_binomial_exact(k));
  Rational r(euler_exact(p - 3) + sgn_half_minus(p) - 1);
  return finish_q(s, r, p, 1);
}

EvalOutcome orac_t11d(int64_t p) {
  Rational s(0);
  for (int64_t k = 0; k <= (p - 3) / 2; ++k)
    s += frac(central_binomial_exact(k), (2 * k + 1) * pow_z(16, k));
  return finish_q(s, Rational(0), p, 2);
}

EvalOutcome orac_t11e(int64_t p) {
  Rational s(0);
  for (int64_t k = (p + 1) / 2; k < p; ++k)
    s += frac(central_binomial_exact(k), (2 * k + 1) * pow_z(16, k));
  return finish_q(s, frac(p * euler_exact(p - 3), 3), p, 2);
}

EvalOutcome orac_t11f(int64_t p) {
  Rational s(0);
  for (int64_t k = 1; k <= (p - 1) / 2; ++k)
    s += frac(pow_z(16, k), k * (2 * k - 1) * central_binomial_exact(k));
  return finish_q(s, frac(8 * euler_exact(p - 3), 3), p, 1);
}

EvalOutcome orac_d17(int64_t p) {
  Rational s(0);
  for (int64_t k = 0; k <= (p - 3) / 2; ++k)
    s += frac(central_binomial_exact(k),
              (2 * k + 1) * (2 * k + 1) * pow_z(4, k));
  mpz_class q = qp_exact(p, 2);
  Rational r = Rational(sgn_half_plus(p)) * frac(q * q, 2);
  return finish_q(s, r, p, 1);
}

EvalOutcome orac_d18(int64_t p) {
  Rational s(0);
  for (int64_t k = 2; k <= (p - 1) / 2; ++k)
    s += frac(pow_z(4, k), (k - 1) * (k - 1) * central_binomial_exact(k));
  Rational r(legendre_symbol(-1, p) * (8 * euler_exact(p - 3) - 12) - 4);
  return finish_q(s, r, p, 1);
}

EvalOutcome orac_d19(int64_t p) {
  Rational s(0);
  for (int64_t k = 0; k <= (p - 1) / 2; ++k)
    s += frac(pow_z(4, k), (k + 1) * central_binomial_exact(k));
  Rational r(legendre_symbol(-1, p) * (4 - 2 * euler_exact(p - 3)) - 2);
  return finish_q(s, r, p, 1);
}

EvalOutcome orac_t12a(int64_t p) {
  Rational s(0);
  for (int64_t k = 0; k < p; ++k)
    s += frac(mpz_class(k) * k * k * pow_z(central_binomial_exact(k), 3),
              pow_z(64, k));
  Rational r(0);
  if (p % 4 == 3)
    r = frac(-1, 640 * pow_z(factorial_exact((p + 1) / 4), 4));
  return finish_q(s, r, p, 1);
}

EvalOutcome orac_t12b(int64_t p) {
  Rational s(0);
  for (int64_t k = 0; k < p; ++k)
    s += frac(binomial_exact(p - 1, k) * pow_z(central_binomial_exact(k), 3),
              pow_z(-64, k));
  return finish_q(s, Rational(0), p, 2);
}

EvalOutcome orac_t12c(int64_t p) {
  Rational s(0);
  for (int64_t k = 0; k < p; ++k)
    s += frac(pow_z(catalan_exact(k), 2), pow_z(16, k));
  return finish_q(s, Rational(-3), p, 1);
}

EvalOutcome orac_t12d(int64_t p) {
  Rational s(0);
  for (int64_t k = 0; k < p; ++k)
    s += frac(pow_z(catalan_exact(k), 3), pow_z(64, k));
  Rational r(7);
  if (p % 4 == 3)
    r -= frac(3, 2 * pow_z(factorial_exact((p + 1) / 4), 4));
  return finish_q(s, r, p, 1);
}

Rational t12e_lhs_exact(int64_t p) {
  Rational s(0);
  for (int64_t k = 0; k < p; ++k)
    s += frac(central_binomial_exact(k) * catalan_exact(k), pow_z(32, k));
  return s;
}

EvalOutcome orac_t12e(int64_t p) {
  return finish_q(t12e_lhs_exact(p), Rational(p), p, 2);
}

EvalOutcome orac_t12e3(int64_t p) {
  Rational r = Rational(p) +
               Rational(4 * mpz_class(p) + pow_z(2, p) - 6) *
                   Rational(binomial_exact((p - 3) / 2, (p - 3) / 4));
  return finish_q(t12e_lhs_exact(p), r, p, 2);
}

EvalOutcome orac_l23(int64_t p) {
  Rational s(0);
  for (int64_t k = 1; k <= (p - 1) / 2; ++k)
    s += frac(pow_z(4, k), k * central_binomial_exact(k));
  return finish_q(s, Rational(2 * (sgn_half_minus(p) - 1)), p, 1);
}

EvalOutcome orac_l23s(int64_t p) {
  Rational s(0);
  for (int64_t k = 1; k <= (p - 1) / 2; ++k)
    s += frac(pow_z(4, k), k * central_binomial_exact(k));
  s /= 2;
  mpz_class q = qp_exact(p, 2);
  mpz_class pz(p);
  Rational r(sgn_half_minus(p) * (1 - pz * q + pz * pz * q * q) - 1);
  return finish_q(s, r, p, 3);
}

EvalOutcome orac_r21c(int64_t p) {
  Rational s(0);
  for (int64_t k = 0; k <= (p - 3) / 2; ++k)
    s += frac(central_binomial_exact(k), (2 * k + 1) * pow_z(8, k));
  mpz_class q = qp_exact(p, 2);
  Rational r = Rational(legendre_symbol(-2, p)) *
               (Rational(-1) * frac(q, 2) + frac(p * q * q, 8));
  return finish_q(s, r, p, 2);
}

EvalOutcome orac_l26(int64_t p) {
  Rational s(0);
  for (int64_t k = 1; k <= p / 6; ++k) s += frac(alt(k), mpz_class(k) * k);
  Rational r(sgn_half_minus(p) * 10 * euler_exact(p - 3));
  return finish_q(s, r, p, 1);
}

EvalOutcome orac_p31(int64_t p) {
  Rational s(0);
  for (int64_t k = 1; k <= (p - 1) / 2; ++k)
    s += frac(pow_z(4, k), k * (2 * k - 1) * central_binomial_exact(k));
  return finish_q(s, Rational(2 * euler_exact(p - 3)), p, 1);
}

EvalOutcome orac_pfb(int64_t p) {
  PrimeModulus M(p, 1);
  mpz_class agg_l(0), agg_r(0);
  for (int64_t k = 1; k <= (p - 1) / 2; ++k) {
    mpz_class lhs =
        rational_to_residue(frac(central_binomial_exact(p - k), p), M, 1);
    mpz_class rhs =
        rational_to_residue(frac(-2, k * central_binomial_exact(k)), M, 1);
    if (lhs != rhs) return {lhs, rhs, false};
    agg_l = mod_reduce(agg_l + lhs, M.m());
    agg_r = mod_reduce(agg_r + rhs, M.m());
  }
  return {agg_l, agg_r, true};
}

EvalOutcome orac_pf4(int64_t p) {
  PrimeModulus M(p, 2);
  mpz_class agg_l(0), agg_r(0);
  for (int64_t k = 0; k < p; ++k) {
    mpz_class lhs =
        rational_to_residue(Rational(alt(k) * binomial_exact(p - 1, k)), M, 2);
    mpz_class rhs = rational_to_residue(
        Rational(1) - Rational(p) * harmonic_exact(k), M, 2);
    if (lhs != rhs) return {lhs, rhs, false};
    agg_l = mod_reduce(agg_l + lhs, M.m());
    agg_r = mod_reduce(agg_r + rhs, M.m());
  }
  return {agg_l, agg_r, true};
}

EvalOutcome orac_bkg1(int64_t p) {
  Rational s(0);
  for (int64_t k = 0; k < p; ++k)
    s += frac(pow_z(central_binomial_exact(k), 3), pow_z(64, k));
  return finish_q(s, Rational(eta_series().at(p)), p, 2);
}

EvalOutcome orac_bkg2(int64_t p) {
  Rational lhs(sgn_half_minus(p) * binomial_exact(p - 1, (p - 1) / 2));
  return finish_q(lhs, Rational(pow_z(4, p - 1)), p, 3);
}

EvalOutcome orac_bkg3(int64_t p) {
  Rational r = Rational(-1) * frac(mpz_class(p) * p, 3) *
               bernoulli_exact(p - 3);
  return finish_q(harmonic_exact(p - 1), r, p, 3);
}

EvalOutcome orac_bkg4(int64_t p) {
  Rational r(sgn_half_minus(p) * 4 * euler_exact(p - 3));
  return finish_q(harmonic_exact(p / 4, 2), r, p, 1);
}

EvalOutcome orac_bkg5(int64_t p) {
  Rational s(0);
  for (int64_t k = 1; k <= (p - 1) / 2; ++k)
    s += frac(alt(k), mpz_class(k) * k);
  Rational r(2 * sgn_half_minus(p) * euler_exact(p - 3));
  return finish_q(s, r, p, 1);
}

EvalOutcome orac_c51a(int64_t p) {
  Rational s(0);
  for (int64_t k = 0; k <= (p - 3) / 2; ++k)
    s += frac(central_binomial_exact(k), (2 * k + 1) * pow_z(16, k));
  Rational r = Rational(sgn_half_minus(p)) *
               (harmonic_exact(p - 1) / 12 +
                frac(3 * pow_z(p, 4), 160) * bernoulli_exact(p - 5));
  return finish_q(s, r, p, 5);
}

EvalOutcome orac_c51b(int64_t p) {
  Rational s(0);
  for (int64_t k = 0; k <= (p - 3) / 2; ++k)
    s += frac(central_binomial_exact(k),
              pow_z(2 * k + 1, 3) * pow_z(16, k));
  Rational r = Rational(sgn_half_minus(p)) *
               (harmonic_exact(p - 1) * frac(1, 4 * mpz_class(p) * p) +
                frac(mpz_class(p) * p, 36) * bernoulli_exact(p - 5));
  return finish_q(s, r, p, 3);
}

EvalOutcome orac_c51c(int64_t p) {
  Rational s(0);
  for (int64_t k = 0; k <= (p - 3) / 2; ++k)
    s += frac(alt(k) * central_binomial_exact(k),
              pow_z(2 * k + 1, 2) * pow_z(16, k));
  Rational r = harmonic_exact(p - 1) * frac(1, 5 * mpz_class(p));
  return finish_q(s, r, p, 3);
}

EvalOutcome orac_c51d(int64_t p) {
  Rational s(0);
  for (int64_t k = (p + 1) / 2; k < p; ++k)
    s += frac(alt(k) * central_binomial_exact(k),
              pow_z(2 * k + 1, 2) * pow_z(16, k));
  Rational r = Rational(-1) * frac(p, 4) * bernoulli_exact(p - 3);
  return finish_q(s, r, p, 2);
}

EvalOutcome orac_c52a(int64_t p) {
  Rational s(0);
  for (int64_t k = 1; k < p; ++k)
    s += frac(central_binomial_exact(k), k * pow_z(2, k));
  Rational r = Rational(-1) * harmonic_exact((p - 1) / 2) / 2 +
               frac(7 * mpz_class(p) * p, 16) * bernoulli_exact(p - 3);
  return finish_q(s, r, p, 3);
}

EvalOutcome orac_c52b(int64_t p) {
  Rational s(0);
  for (int64_t k = 1; k < p; ++k)
    s += frac(pow_z(2, k), mpz_class(k) * k * central_binomial_exact(k));
  Rational r = Rational(-qp_exact(p, 2)) +
               frac(mpz_class(p) * p, 16) * bernoulli_exact(p - 3);
  return finish_q(Rational(p) * s, r, p, 3);
}

EvalOutcome orac_c52c(int64_t p) {
  Rational s(0);
  for (int64_t k = 1; k < p; ++k)
    s += frac(pow_z(-2, k) * central_binomial_exact(k), mpz_class(k) * k);
  mpz_class q = qp_exact(p, 2);
  return finish_q(s, Rational(-2 * q * q), p, 1);
}

EvalOutcome orac_c52d(int64_t p) {
  Rational s(0);
  for (int64_t k = 1; k < p; ++k)
    s += frac(central_binomial_exact(k), k * pow_z(3, k));
  Rational r(0);
  for (int64_t k = 1; k < p; ++k)
    if (k % 3 != p % 3) r += frac(1, k);
  return finish_q(s, Rational(-2) * r, p, 3);
}

EvalOutcome orac_c52e(int64_t p) {
  Rational s(0);
  for (int64_t k = 1; k < p; ++k)
    s += frac(pow_z(3, k), mpz_class(k) * k * central_binomial_exact(k));
  Rational r = frac(-3, 2) * Rational(qp_exact(p, 3)) +
               frac(4 * mpz_class(p) * p, 9) * bernoulli_exact(p - 3);
  return finish_q(Rational(p) * s, r, p, 3);
}

EvalOutcome orac_c53(int64_t p) {
  mpz_class s(0);
  for (int64_t k = 0; k < p; ++k) s += pow_z(central_binomial_exact(k), 3);
  mpz_class rhs(0);
  if (legendre_symbol(mpz_class(p), 7) == 1) {
    auto rep = quadratic_representation_search(7, mpz_class(p));
    if (!rep) throw Error("missing x^2+7y^2 representation despite (p/7)=1");
    rhs = 4 * rep->x * rep->x - 2 * p;
  }
  PrimeModulus M(p, 2);
  return finish(s, rhs, M, 2);
}

EvalOutcome orac_c54(int64_t p) {
  Rational s(0);
  for (int64_t k = 0; k < p; ++k)
    s += frac(pow_z(central_binomial_exact(k), 2) * binomial_exact(3 * k, k),
              pow_z(64, k));
  Rational rhs(0);
  if (legendre_symbol(mpz_class(p), 11) == 1) {
    auto rep = quadratic_representation_search(11, mpz_class(4 * p));
    if (!rep) throw Error("missing x^2+11y^2 representation despite (p/11)=1");
    rhs = Rational(rep->x * rep->x - 2 * p);
  }
  return finish_q(s, rhs, p, 2);
}

Rational c55_rhs_exact(int64_t p) {
  auto rep = quadratic_representation_search(1, mpz_class(p));
  if (!rep) throw Error("missing x^2+y^2 representation for p == 1 (mod 4)");
  QuadraticRepresentation n =
      normalize_representation(*rep, NormalizationRule::x_mod4_eq1);
  return Rational(2 * n.x) - frac(p, 2 * n.x);
}

EvalOutcome orac_c55a(int64_t p) {
  Rational s(0);
  for (int64_t k = 0; k < p; ++k)
    s += frac(pow_z(central_binomial_exact(k), 2), pow_z(8, k));
  return finish_q(s, Rational(sgn_quarter(p)) * c55_rhs_exact(p), p, 2);
}

EvalOutcome orac_c55b(int64_t p) {
  Rational s(0);
  for (int64_t k = 0; k < p; ++k)
    s += frac(pow_z(central_binomial_exact(k), 2), pow_z(-16, k));
  return finish_q(s, Rational(sgn_quarter(p)) * c55_rhs_exact(p), p, 2);
}

EvalOutcome orac_c55c(int64_t p) {
  Rational s(0);
  for (int64_t k = 0; k < p; ++k)
    s += frac(pow_z(central_binomial_exact(k), 2), pow_z(32, k));
  return finish_q(s, c55_rhs_exact(p), p, 2);
}

EvalOutcome orac_c55d(int64_t p) {
  PrimeModulus M(p, 2);
  Rational s1(0), s2(0);
  for (int64_t k = 0; k < p; ++k) {
    s1 += frac(binomial_exact(p - 1, k) * pow_z(central_binomial_exact(k), 2),
               pow_z(-8, k));
    s2 += frac(pow_z(central_binomial_exact(k), 2), pow_z(32, k));
  }
  mpz_class l1 = rational_to_residue(s1, M, 2);
  if (l1 != 0) return {l1, mpz_class(0), false};
  mpz_class l2 = rational_to_residue(s2, M, 2);
  if (l2 != 0) return {l2, mpz_class(0), false};
  return {mpz_class(0), mpz_class(0), true};
}

EvalOutcome orac_c55e(int64_t p) {
  Rational s16(0), s8(0);
  for (int64_t k = 0; k < p; ++k) {
    s16 += frac(pow_z(central_binomial_exact(k), 2), pow_z(-16, k));
    s8 += frac(pow_z(central_binomial_exact(k), 2), pow_z(8, k));
  }
  return finish_q(s16, Rational(-1) * s8, p, 3);
}

EvalOutcome orac_r12a1(int64_t p) {
  Rational s(0);
  for (int64_t k = 0; k < p; ++k)
    s += frac(mpz_class(k) * k * k * pow_z(central_binomial_exact(k), 3),
              pow_z(64, k));
  return finish_q(s, Rational(0), p, 2);
}

EvalOutcome orac_r12a2(int64_t p) {
  Rational s(0);
  for (int64_t k = 0; k < p * p; ++k)
    s += frac(mpz_class(k) * k * k * pow_z(central_binomial_exact(k), 3),
              pow_z(64, k));
  return finish_q(s, Rational(0), p, 4);
}

EvalOutcome orac_r12b(int64_t p) {
  Rational s(0);
  for (int64_t k = 0; k <= (p - 1) / 2; ++k)
    s += frac(k * pow_z(catalan_exact(k), 3), pow_z(16, k));
  return finish_q(s, Rational(2 * mpz_class(p) - 2), p, 2);
}

EvalOutcome orac_r12c(int64_t p) {
  Rational s(0);
  for (int64_t k = 0; k <= (p - 1) / 2; ++k)
    s += frac(pow_z(catalan_exact(k), 3), pow_z(64, k));
  return finish_q(s, Rational(8), p, 2);
}

// ---- catalog assembly -------------------------------------------------------

void add(std::vector<CheckDefinition>& v, std::string id, CheckSource src,
         unsigned target, unsigned working, std::optional<int64_t> cap,
         std::string desc, std::function<bool(int64_t)> appl,
         std::function<EvalOutcome(CheckContext&)> eval,
         std::function<EvalOutcome(int64_t)> oracle) {
  CheckDefinition d;
  d.id = std::move(id);
  d.source = src;
  d.conjectural = src == CheckSource::conjecture;
  d.target_e = target;
  d.working_e = working;
  d.prime_cap = cap;
  d.description = std::move(desc);
  if (cap) {
    d.applicable = [a = std::move(appl), c = *cap](int64_t p) {
      return p <= c && a(p);
    };
  } else {
    d.applicable = std::move(appl);
  }
  d.eval = std::move(eval);
  d.eval_oracle = std::move(oracle);
  v.push_back(std::move(d));
}

bool any_odd(int64_t p) { return p >= 3; }
bool gt3(int64_t p) { return p > 3; }
bool gt5(int64_t p) { return p > 5; }
bool one_mod4(int64_t p) { return p >= 5 && p % 4 == 1; }
bool three_mod4(int64_t p) { return p >= 3 && p % 4 == 3; }
bool one_mod4_gt5(int64_t p) { return p > 5 && p % 4 == 1; }
bool one_mod3(int64_t p) { return p >= 5 && p % 3 == 1; }
bool not7(int64_t p) { return p >= 3 && p != 7; }
bool not11(int64_t p) { return p >= 3 && p != 11; }

std::vector<CheckDefinition> build_catalog() {
  std::vector<CheckDefinition> v;
  const std::optional<int64_t> none;
  const std::optional<int64_t> conj(2000);

  add(v, "BKG1", CheckSource::background, 2, 3, 1000,
      "sum(binom(2k,k)^3/64^k, k<p) == a(p) (mod p^2), "
      "sum a(n) q^n = q prod(1-q^(4n))^6",
      any_odd, fast_bkg1, orac_bkg1);
  add(v, "BKG2", CheckSource::background, 3, 3, none,
      "(-1)^((p-1)/2) binom(p-1,(p-1)/2) == 4^(p-1) (mod p^3); Morley",
      gt3, fast_bkg2, orac_bkg2);
  add(v, "BKG3", CheckSource::background, 3, 3, none,
      "H_{p-1} == -(p^2/3) B_{p-3} (mod p^3); Wolstenholme refinement",
      gt3, fast_bkg3, orac_bkg3);
  add(v, "BKG4", CheckSource::background, 1, 1, none,
      "sum(1/k^2, k=1..floor(p/4)) == (-1)^((p-1)/2) 4 E_{p-3} (mod p); "
      "Lehmer quarter-range sum",
      gt3, fast_bkg4, orac_bkg4);
  add(v, "BKG5", CheckSource::background, 1, 2, none,
      "sum((-1)^k/k^2, k=1..(p-1)/2) == 2(-1)^((p-1)/2) E_{p-3} (mod p)",
      gt3, fast_bkg5, orac_bkg5);
  add(v, "C5.1a", CheckSource::conjecture, 5, 6, conj,
      "sum(binom(2k,k)/((2k+1)16^k), k=0..(p-3)/2) == "
      "(-1)^((p-1)/2)(H_{p-1}/12 + 3p^4 B_{p-5}/160) (mod p^5)",
      gt5, fast_c51a, orac_c51a);
  add(v, "C5.1b", CheckSource::conjecture, 3, 4, conj,
      "sum(binom(2k,k)/((2k+1)^3 16^k), k=0..(p-3)/2) == "
      "(-1)^((p-1)/2)(H_{p-1}/(4p^2) + p^2 B_{p-5}/36) (mod p^3)",
      gt5, fast_c51b, orac_c51b);
  add(v, "C5.1c", CheckSource::conjecture, 3, 4, conj,
      "sum(binom(2k,k)/((2k+1)^2 (-16)^k), k=0..(p-3)/2) == H_{p-1}/(5p) "
      "(mod p^3)",
      gt5, fast_c51c, orac_c51c);
  add(v, "C5.1d", CheckSource::conjecture, 2, 3, conj,
      "sum over p/2<k<p of binom(2k,k)/((2k+1)^2 (-16)^k) == -(p/4) B_{p-3} "
      "(mod p^2)",
      gt5, fast_c51d, orac_c51d);
  add(v, "C5.2a", CheckSource::conjecture, 3, 4, conj,
      "sum(binom(2k,k)/(k 2^k), k=1..p-1) == -H_{(p-1)/2}/2 + "
      "(7/16) p^2 B_{p-3} (mod p^3)",
      any_odd, fast_c52a, orac_c52a);
  add(v, "C5.2b", CheckSource::reconstruction, 3, 4, conj,
      "p sum(2^k/(k^2 binom(2k,k)), k=1..p-1) == -q_p(2) + (p^2/16) B_{p-3} "
      "(mod p^3); reconstructed reading (source drops the prefactor token)",
      gt3, fast_c52b, orac_c52b);
  v.back().conjectural = true;  // reconstructed display of an open conjecture
  add(v, "C5.2c", CheckSource::conjecture, 1, 2, conj,
      "sum((-2)^k binom(2k,k)/k^2, k=1..p-1) == -2 q_p(2)^2 (mod p)",
      gt3, fast_c52c, orac_c52c);
  add(v, "C5.2d", CheckSource::conjecture, 3, 4, conj,
      "sum(binom(2k,k)/(k 3^k), k=1..p-1) == -2 sum(1/k, k=1..p-1, "
      "k !== p (mod 3)) (mod p^3)",
      gt3, fast_c52d, orac_c52d);
  add(v, "C5.2e", CheckSource::conjecture, 3, 4, conj,
      "p sum(3^k/(k^2 binom(2k,k)), k=1..p-1) == -(3/2) q_p(3) + "
      "(4/9) p^2 B_{p-3} (mod p^3)",
      gt3, fast_c52e, orac_c52e);
  add(v, "C5.3", CheckSource::conjecture, 2, 3, conj,
      "sum(binom(2k,k)^3, k<p) == 4x^2-2p (p=x^2+7y^2) if (p/7)=1, else 0 "
      "(mod p^2)",
      not7, fast_c53, orac_c53);
  add(v, "C5.4", CheckSource::conjecture, 2, 3, conj,
      "sum(binom(2k,k)^2 binom(3k,k)/64^k, k<p) == x^2-2p (4p=x^2+11y^2) if "
      "(p/11)=1, else 0 (mod p^2)",
      not11, fast_c54, orac_c54);
  add(v, "C5.5a", CheckSource::conjecture, 2, 3, conj,
      "sum(binom(2k,k)^2/8^k, k<p) == (-1)^((p-1)/4)(2x - p/(2x)) (mod p^2), "
      "p = x^2+y^2, x == 1 (mod 4)",
      one_mod4, fast_c55a, orac_c55a);
  add(v, "C5.5b", CheckSource::conjecture, 2, 3, conj,
      "sum(binom(2k,k)^2/(-16)^k, k<p) == (-1)^((p-1)/4)(2x - p/(2x)) "
      "(mod p^2), p = x^2+y^2, x == 1 (mod 4)",
      one_mod4, fast_c55b, orac_c55b);
  add(v, "C5.5c", CheckSource::conjecture, 2, 3, conj,
      "sum(binom(2k,k)^2/32^k, k<p) == 2x - p/(2x) (mod p^2), p = x^2+y^2, "
      "x == 1 (mod 4)",
      one_mod4, fast_c55c, orac_c55c);
  add(v, "C5.5d", CheckSource::conjecture, 2, 3, conj,
      "sum(binom(p-1,k)binom(2k,k)^2/(-8)^k, k<p) == 0 and "
      "sum(binom(2k,k)^2/32^k, k<p) == 0 (mod p^2), p == 3 (mod 4)",
      three_mod4, fast_c55d, orac_c55d);
  add(v, "C5.5e", CheckSource::conjecture, 3, 4, conj,
      "sum(binom(2k,k)^2/(-16)^k, k<p) == -sum(binom(2k,k)^2/8^k, k<p) "
      "(mod p^3), p == 3 (mod 4)",
      three_mod4, fast_c55e, orac_c55e);
  add(v, "D1.7", CheckSource::derived, 1, 2, none,
      "sum(binom(2k,k)/((2k+1)^2 4^k), k=0..(p-3)/2) == "
      "(-1)^((p+1)/2) q_p(2)^2/2 (mod p)",
      gt3, fast_d17, orac_d17);
  add(v, "D1.8", CheckSource::derived, 1, 2, none,
      "sum(4^k/((k-1)^2 binom(2k,k)), k=2..(p-1)/2) == "
      "(-1/p)(8E_{p-3} - 12) - 4 (mod p)",
      gt3, fast_d18, orac_d18);
  add(v, "D1.9", CheckSource::derived, 1, 2, none,
      "sum(4^k/((k+1) binom(2k,k)), k=0..(p-1)/2) == (-1/p)(4-2E_{p-3}) - 2 "
      "(mod p)",
      gt3, fast_d19, orac_d19);
  add(v, "L2.3", CheckSource::lemma, 1, 2, none,
      "sum(4^k/(k binom(2k,k)), k=1..(p-1)/2) == 2((-1)^((p-1)/2) - 1) "
      "(mod p)",
      any_odd, fast_l23, orac_l23);
  add(v, "L2.3s", CheckSource::lemma, 3, 4, none,
      "(1/2) sum(4^k/(k binom(2k,k)), k=1..(p-1)/2) == "
      "(-1)^((p-1)/2)(1 - p q_p(2) + p^2 q_p(2)^2) - 1 (mod p^3)",
      gt3, fast_l23s, orac_l23s);
  add(v, "L2.6", CheckSource::lemma, 1, 2, none,
      "sum((-1)^k/k^2, 0<k<=floor(p/6)) == (-1)^((p-1)/2) 10 E_{p-3} (mod p)",
      gt3, fast_l26, orac_l26);
  add(v, "P3.1", CheckSource::derived, 1, 2, none,
      "sum(4^k/(k(2k-1)binom(2k,k)), k=1..(p-1)/2) == 2E_{p-3} (mod p)",
      any_odd, fast_p31, orac_p31);
  add(v, "PF4", CheckSource::derived, 2, 3, none,
      "binom(p-1,k)(-1)^k == 1 - p H_k (mod p^2) for every k=0..p-1",
      any_odd, fast_pf4, orac_pf4);
  add(v, "PFB", CheckSource::derived, 1, 2, none,
      "binom(2(p-k),p-k)/p == -2/(k binom(2k,k)) (mod p) for every "
      "k=1..(p-1)/2",
      any_odd, fast_pfb, orac_pfb);
  add(v, "R1.2a1", CheckSource::conjecture, 2, 3, conj,
      "sum(k^3 binom(2k,k)^3/64^k, k<p) == 0 (mod p^2), p == 1 (mod 4), p>5",
      one_mod4_gt5, fast_r12a1, orac_r12a1);
  add(v, "R1.2a2", CheckSource::conjecture, 4, 5, 100,
      "sum(k^3 binom(2k,k)^3/64^k, k<p^2) == 0 (mod p^4), p == 1 (mod 4), p>5",
      one_mod4_gt5, fast_r12a2, orac_r12a2);
  add(v, "R1.2b", CheckSource::conjecture, 2, 3, conj,
      "sum(k C_k^3/16^k, k=0..(p-1)/2) == 2p-2 (mod p^2), p == 1 (mod 3)",
      one_mod3, fast_r12b, orac_r12b);
  add(v, "R1.2c", CheckSource::conjecture, 2, 3, conj,
      "sum(C_k^3/64^k, k=0..(p-1)/2) == 8 (mod p^2), p == 1 (mod 4)",
      one_mod4, fast_r12c, orac_r12c);
  add(v, "R2.1c", CheckSource::derived, 2, 3, none,
      "sum(binom(2k,k)/((2k+1)8^k), k=0..(p-3)/2) == "
      "(-2/p)(-q_p(2)/2 + (p/8) q_p(2)^2) (mod p^2)",
      gt3, fast_r21c, orac_r21c);
  add(v, "T1.1a", CheckSource::theorem, 2, 3, none,
      "sum(binom(2k,k)/((2k+1)4^k), k=0..(p-3)/2) == (-1)^((p+1)/2) q_p(2) "
      "(mod p^2)",
      any_odd, fast_t11a, orac_t11a);
  add(v, "T1.1b", CheckSource::theorem, 2, 3, none,
      "sum over p/2<k<p of binom(2k,k)/((2k+1)4^k) == p E_{p-3} (mod p^2)",
      any_odd, fast_t11b, orac_t11b);
  add(v, "T1.1c", CheckSource::theorem, 1, 2, none,
      "sum(4^k/((2k-1)binom(2k,k)), k=1..(p-1)/2) == E_{p-3} + "
      "(-1)^((p-1)/2) - 1 (mod p)",
      any_odd, fast_t11c, orac_t11c);
  add(v, "T1.1d", CheckSource::theorem, 2, 3, none,
      "sum(binom(2k,k)/((2k+1)16^k), k=0..(p-3)/2) == 0 (mod p^2)",
      gt3, fast_t11d, orac_t11d);
  add(v, "T1.1e", CheckSource::theorem, 2, 3, none,
      "sum over p/2<k<p of binom(2k,k)/((2k+1)16^k) == (p/3) E_{p-3} "
      "(mod p^2)",
      gt3, fast_t11e, orac_t11e);
  add(v, "T1.1f", CheckSource::theorem, 1, 2, none,
      "sum(16^k/(k(2k-1)binom(2k,k)), k=1..(p-1)/2) == (8/3) E_{p-3} (mod p)",
      gt3, fast_t11f, orac_t11f);
  add(v, "T1.2a", CheckSource::theorem, 1, 2, none,
      "sum(k^3 binom(2k,k)^3/64^k, k<p) == 0 or -(1/640)((p+1)/4)!^{-4} "
      "(mod p) by p mod 4",
      any_odd, fast_t12a, orac_t12a);
  add(v, "T1.2b", CheckSource::theorem, 2, 3, none,
      "sum(binom(p-1,k)binom(2k,k)^3/(-64)^k, k<p) == 0 (mod p^2), "
      "p == 3 (mod 4)",
      [](int64_t p) { return p > 3 && p % 4 == 3; }, fast_t12b, orac_t12b);
  add(v, "T1.2c", CheckSource::theorem, 1, 2, none,
      "sum(C_k^2/16^k, k<p) == -3 (mod p)",
      any_odd, fast_t12c, orac_t12c);
  add(v, "T1.2d", CheckSource::theorem, 1, 2, none,
      "sum(C_k^3/64^k, k<p) == 7 or 7 - (3/2)((p+1)/4)!^{-4} (mod p) by "
      "p mod 4",
      any_odd, fast_t12d, orac_t12d);
  add(v, "T1.2e", CheckSource::theorem, 2, 3, none,
      "sum(binom(2k,k) C_k/32^k, k<p) == p (mod p^2), p == 1 (mod 4)",
      one_mod4, fast_t12e, orac_t12e);
  add(v, "T1.2e-3mod4", CheckSource::reconstruction, 2, 3, none,
      "sum(binom(2k,k) C_k/32^k, k<p) == p + (4p+2^p-6) "
      "binom((p-3)/2,(p-3)/4) (mod p^2), p == 3 (mod 4); reconstructed "
      "reading (leading term of the source display is corrupted)",
      three_mod4, fast_t12e3, orac_t12e3);

  return v;
}

CheckResult skip_result(const CheckDefinition& def, int64_t p) {
  CheckResult r;
  r.id = def.id;
  r.p = p;
  r.status = CheckStatus::skip;
  mpz_ui_pow_ui(r.modulus.get_mpz_t(), static_cast<unsigned long>(p),
                def.target_e);
  return r;
}

}  // namespace

const std::vector<CheckDefinition>& catalog() {
  static const std::vector<CheckDefinition> defs = build_catalog();
  return defs;
}

const CheckDefinition* find_check(const std::string& id) {
  for (const auto& d : catalog())
    if (d.id == id) return &d;
  return nullptr;
}

CheckResult evaluate_check(const CheckDefinition& def, CheckContext& ctx,
                           bool timings) {
  if (!def.applicable(ctx.p())) return skip_result(def, ctx.p());
  CheckResult r;
  r.id = def.id;
  r.p = ctx.p();
  mpz_ui_pow_ui(r.modulus.get_mpz_t(), static_cast<unsigned long>(ctx.p()),
                def.target_e);
  auto t0 = std::chrono::steady_clock::now();
  EvalOutcome o = def.eval(ctx);
  if (timings) {
    auto t1 = std::chrono::steady_clock::now();
    r.elapsed_us =
        std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
  }
  r.lhs = std::move(o.lhs);
  r.rhs = std::move(o.rhs);
  r.status = o.pass ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

CheckResult evaluate_check(const std::string& id, int64_t p) {
  const CheckDefinition* def = find_check(id);
  if (!def) throw ConfigError("unknown check id: " + id);
  if (!def->applicable(p)) return skip_result(*def, p);
  CheckContext ctx(p);
  return evaluate_check(*def, ctx, false);
}

namespace {

struct Reading {
  std::string text;
  bool catalog_reading;
  std::function<bool(int64_t)> holds;
};

std::vector<Reading> t12e3_readings() {
  auto lhs_residue = [](int64_t p) {
    PrimeModulus M(p, 2);
    return rational_to_residue(t12e_lhs_exact(p), M, 2);
  };
  // The explicit return type matters: gmpxx operator* yields a lazy
  // expression referencing its operands, which must not outlive them.
  auto correction = [](int64_t p) -> Rational {
    return Rational(4 * mpz_class(p) + pow_z(2, p) - 6) *
           Rational(binomial_exact((p - 3) / 2, (p - 3) / 4));
  };
  std::vector<Reading> r;
  r.push_back({"p + (4p+2^p-6) binom((p-3)/2,(p-3)/4) (mod p^2)", true,
               [=](int64_t p) {
                 PrimeModulus M(p, 2);
                 return lhs_residue(p) ==
                        rational_to_residue(Rational(p) + correction(p), M, 2);
               }});
  r.push_back({"p (mod p^2) (the p == 1 (mod 4) right side applied verbatim)",
               false, [=](int64_t p) {
                 PrimeModulus M(p, 2);
                 return lhs_residue(p) ==
                        rational_to_residue(Rational(p), M, 2);
               }});
  r.push_back({"p - (4p+2^p-6) binom((p-3)/2,(p-3)/4) (mod p^2)", false,
               [=](int64_t p) {
                 PrimeModulus M(p, 2);
                 return lhs_residue(p) ==
                        rational_to_residue(Rational(p) - correction(p), M, 2);
               }});
  return r;
}

std::vector<Reading> c52b_readings() {
  auto sum_exact = [](int64_t p) {
    Rational s(0);
    for (int64_t k = 1; k < p; ++k)
      s += frac(pow_z(2, k), mpz_class(k) * k * central_binomial_exact(k));
    return s;
  };
  auto rhs_exact = [](int64_t p) -> Rational {
    return Rational(-qp_exact(p, 2)) +
           frac(mpz_class(p) * p, 16) * bernoulli_exact(p - 3);
  };
  std::vector<Reading> r;
  r.push_back({"p sum(2^k/(k^2 binom(2k,k))) == -q_p(2) + (p^2/16) B_{p-3} "
               "(mod p^3)",
               true, [=](int64_t p) {
                 PrimeModulus M(p, 3);
                 return rational_to_residue(Rational(p) * sum_exact(p), M, 3) ==
                        rational_to_residue(rhs_exact(p), M, 3);
               }});
  r.push_back({"sum(2^k/(k^2 binom(2k,k))) == -q_p(2) + (p^2/16) B_{p-3} "
               "(mod p^3) (no prefactor)",
               false, [=](int64_t p) {
                 PrimeModulus M(p, 3);
                 return rational_to_residue(sum_exact(p), M, 3) ==
                        rational_to_residue(rhs_exact(p), M, 3);
               }});
  r.push_back({"p sum(2^k/(k^2 binom(2k,k))) == q_p(2) - (p^2/16) B_{p-3} "
               "(mod p^3) (opposite sign)",
               false, [=](int64_t p) {
                 PrimeModulus M(p, 3);
                 return rational_to_residue(Rational(p) * sum_exact(p), M, 3) ==
                        rational_to_residue(Rational(-1) * rhs_exact(p), M, 3);
               }});
  return r;
}

}  // namespace

std::vector<ReconstructionCandidate> reconstruct_candidates(
    const std::string& id, const std::vector<int64_t>& sample_primes) {
  std::vector<Reading> readings;
  if (id == "T1.2e-3mod4") {
    for (int64_t p : sample_primes)
      if (!is_prime(p) || p % 4 != 3)
        throw ConfigError("sample prime must be a prime == 3 (mod 4): " +
                          std::to_string(p));
    readings = t12e3_readings();
  } else if (id == "C5.2b") {
    for (int64_t p : sample_primes)
      if (!is_prime(p) || p <= 3)
        throw ConfigError("sample prime must be a prime > 3: " +
                          std::to_string(p));
    readings = c52b_readings();
  } else {
    throw NotApplicableError("no reconstruction for check id: " + id);
  }

  std::vector<ReconstructionCandidate> out;
  for (const auto& rd : readings) {
    ReconstructionCandidate c;
    c.check_id = id;
    c.reading = rd.text;
    bool all = true;
    for (int64_t p : sample_primes) {
      bool ok = false;
      try {
        ok = rd.holds(p);
      } catch (const Error&) {
        ok = false;  // e.g. negative valuation: the reading cannot even reduce
      }
      c.outcomes.emplace_back(p, ok);
      all = all && ok;
    }
    c.promoted = rd.catalog_reading && all;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace cbsum
