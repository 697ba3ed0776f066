#include "cbsum/forms.hpp"

#include "cbsum/special_values.hpp"

namespace cbsum {

std::optional<mpz_class> sqrt_mod_prime(const mpz_class& a, int64_t p) {
  mpz_class pz(p);
  mpz_class r = mod_reduce(a, pz);
  if (r == 0) return mpz_class(0);
  if (legendre_symbol(r, p) != 1) return std::nullopt;
  if (p % 4 == 3) return mod_pow(r, (pz + 1) / 4, pz);
  // Tonelli-Shanks for p == 1 (mod 4): p - 1 = q 2^s with q odd.
  mpz_class q = pz - 1;
  unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
  mpz_class z = 2;
  while (legendre_symbol(z, p) != -1) ++z;
  mpz_class c = mod_pow(z, q, pz);
  mpz_class x = mod_pow(r, (q + 1) / 2, pz);
  mpz_class t = mod_pow(r, q, pz);
  unsigned long m = s;
  while (t != 1) {
    mpz_class t2 = t;
    unsigned long i = 0;
    while (t2 != 1 && i < m) {
      t2 = mod_reduce(t2 * t2, pz);
      ++i;
    }
    mpz_class b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = mod_reduce(b * b, pz);
    x = mod_reduce(x * b, pz);
    c = mod_reduce(b * b, pz);
    t = mod_reduce(t * c, pz);
    m = i;
  }
  return x;
}

namespace {

// Classical Cornacchia for prime p = x^2 + d y^2: start from a square root r
// of -d mod p with p/2 < r < p, run the Euclidean descent until b <= sqrt(p).
std::optional<QuadraticRepresentation> cornacchia_prime(int d,
                                                        const mpz_class& p) {
  mpz_class md = mod_reduce(mpz_class(-d), p);
  std::optional<mpz_class> r0 = sqrt_mod_prime(md, p.get_si());
  if (!r0) return std::nullopt;
  mpz_class b = *r0;
  if (2 * b < p) b = p - b;
  mpz_class a = p, l = int_sqrt(p);
  while (b > l) {
    mpz_class t = mod_reduce(a, b);
    a = b;
    b = t;
  }
  mpz_class rem = p - b * b;
  if (rem % d != 0) return std::nullopt;
  mpz_class y;
  if (!is_perfect_square(rem / d, &y)) return std::nullopt;
  return QuadraticRepresentation{d, b, y};
}

// Modified Cornacchia (Cohen, Algorithm 1.5.3) for 4p = x^2 + d y^2 with d
// odd: the square root of -d mod p is lifted to an odd representative so it
// is a root of -d mod 4p; descend from (2p, r) until b <= 2 sqrt(p).
std::optional<QuadraticRepresentation> cornacchia_four_p(int d,
                                                         const mpz_class& p) {
  mpz_class md = mod_reduce(mpz_class(-d), p);
  std::optional<mpz_class> r0 = sqrt_mod_prime(md, p.get_si());
  if (!r0) return std::nullopt;
  mpz_class r = *r0;
  if (mpz_odd_p(r.get_mpz_t()) == 0) r = p - r;
  mpz_class fourp = 4 * p;
  mpz_class a = 2 * p, b = r, l = int_sqrt(fourp);
  while (b > l) {
    mpz_class t = mod_reduce(a, b);
    a = b;
    b = t;
  }
  mpz_class rem = fourp - b * b;
  if (rem % d != 0) return std::nullopt;
  mpz_class y;
  if (!is_perfect_square(rem / d, &y)) return std::nullopt;
  return QuadraticRepresentation{d, b, y};
}

}  // namespace

std::optional<QuadraticRepresentation> cornacchia(int d, const mpz_class& N) {
  if (d != 1 && d != 7 && d != 11)
    throw ConfigError("cornacchia supports d in {1, 7, 11}");
  if (d == 11) {
    if (N % 4 != 0) throw ConfigError("d = 11 expects N = 4p");
    mpz_class p = N / 4;
    if (p == 11) return QuadraticRepresentation{11, 0, 2};
    return cornacchia_four_p(d, p);
  }
  if (N == d) return QuadraticRepresentation{d, 0, 1};
  return cornacchia_prime(d, N);
}

std::optional<QuadraticRepresentation> quadratic_representation_search(
    int d, const mpz_class& N) {
  for (mpz_class y = 0; d * y * y <= N; ++y) {
    mpz_class x;
    if (is_perfect_square(N - d * y * y, &x))
      return QuadraticRepresentation{d, x, y};
  }
  return std::nullopt;
}

QuadraticRepresentation normalize_representation(QuadraticRepresentation r,
                                                 NormalizationRule rule) {
  switch (rule) {
    case NormalizationRule::none:
      return r;
    case NormalizationRule::x_mod4_eq1: {
      if (r.d != 1)
        throw RuleInapplicableError("x_mod4_eq1 applies to d = 1 only");
      // Exactly one coordinate of an odd p = x^2 + y^2 is odd; it becomes x.
      mpz_class a = r.x, b = r.y;
      if (mpz_odd_p(a.get_mpz_t()) == 0) std::swap(a, b);
      if (mpz_odd_p(a.get_mpz_t()) == 0)
        throw RuleInapplicableError("no odd coordinate to sign-fix");
      if (mod_reduce(a, mpz_class(4)) != 1) a = -a;
      return {1, a, abs(b)};
    }
    case NormalizationRule::x_mod11_eq2: {
      if (r.d != 11)
        throw RuleInapplicableError("x_mod11_eq2 applies to d = 11 only");
      mpz_class m = mod_reduce(r.x, mpz_class(11));
      if (m == 2) return r;
      if (m == 9) return {11, mpz_class(-r.x), abs(r.y)};
      throw RuleInapplicableError("x is not +-2 mod 11");
    }
  }
  throw ConfigError("unknown normalization rule");
}

ParameterCheckResult jacobi_parameter_check(int64_t p) {
  if (p % 11 != 1)
    throw NotApplicableError("parameter check needs p == 1 (mod 11)");
  int64_t f = (p - 1) / 11;
  auto rep = cornacchia(11, mpz_class(4) * p);
  if (!rep) throw NotApplicableError("no 4p = x^2 + 11 y^2 representation");
  QuadraticRepresentation nr =
      normalize_representation(*rep, NormalizationRule::x_mod11_eq2);
  mpz_class pz(p);
  // binomials with arguments at most 6f < p: plain factorial quotients mod p.
  std::vector<mpz_class> fact(static_cast<size_t>(6 * f) + 1);
  fact[0] = 1;
  for (size_t i = 1; i < fact.size(); ++i)
    fact[i] = mod_reduce(fact[i - 1] * static_cast<long>(i), pz);
  auto binom = [&](int64_t n, int64_t k) {
    return mod_reduce(fact[static_cast<size_t>(n)] *
                          mod_inv(mod_reduce(fact[static_cast<size_t>(k)] *
                                                 fact[static_cast<size_t>(
                                                     n - k)],
                                             pz),
                                  pz),
                      pz);
  };
  ParameterCheckResult out;
  out.lhs = mod_reduce(binom(6 * f, 3 * f) * binom(3 * f, f) %
                           pz * mod_inv(binom(4 * f, 2 * f), pz),
                       pz);
  out.rhs = mod_reduce(nr.x, pz);
  out.pass = out.lhs == out.rhs;
  return out;
}

IntegerSeries eta_quartic_sixth_series(size_t n_max) {
  IntegerSeries s;
  s.a.assign(n_max + 1, mpz_class(0));
  if (n_max >= 1) s.a[1] = 1;
  // (1 - t)^6 = 1 - 6t + 15t^2 - 20t^3 + 15t^4 - 6t^5 + t^6 applied at
  // t = q^(4m); descending index keeps the update in place.
  static const long c[7] = {1, -6, 15, -20, 15, -6, 1};
  for (size_t m = 4; m + 1 <= n_max; m += 4) {
    for (size_t n = n_max + 1; n-- > 1;) {
      mpz_class acc = 0;
      for (int j = 1; j <= 6; ++j) {
        size_t off = m * static_cast<size_t>(j);
        if (off > n) break;
        acc += c[j] * s.a[n - off];
      }
      s.a[n] += acc;
    }
  }
  return s;
}

}  // namespace cbsum
