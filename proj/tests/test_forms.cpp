#include "doctest.h"

#include "cbsum/combinatorics.hpp"
#include "cbsum/forms.hpp"

using namespace cbsum;

TEST_CASE("square roots modulo p") {
  auto r = sqrt_mod_prime(12, 13);
  REQUIRE(r.has_value());
  CHECK(mod_reduce(*r * *r, 13) == 12);
  CHECK(*r == 8);
  CHECK_FALSE(sqrt_mod_prime(2, 3).has_value());
  CHECK(sqrt_mod_prime(0, 11) == mpz_class(0));
  // Every quadratic residue gets a genuine root (both branches of the
  // Tonelli-Shanks split: 41 == 1 (mod 4), 43 == 3 (mod 4)).
  for (int64_t p : {41, 43}) {
    for (int64_t a = 1; a < p; ++a) {
      auto root = sqrt_mod_prime(a, p);
      if (legendre_symbol(a, p) == 1) {
        REQUIRE(root.has_value());
        CHECK(mod_reduce(*root * *root, p) == a);
      } else {
        CHECK_FALSE(root.has_value());
      }
    }
  }
}

TEST_CASE("cornacchia fixtures") {
  auto r = cornacchia(1, 13);
  REQUIRE(r.has_value());
  CHECK(r->x == 3);
  CHECK(r->y == 2);
  r = cornacchia(7, 29);
  REQUIRE(r.has_value());
  CHECK(r->x == 1);
  CHECK(r->y == 2);
  CHECK_FALSE(cornacchia(7, 13).has_value());
  r = cornacchia(11, 92);
  REQUIRE(r.has_value());
  CHECK(r->x == 9);
  CHECK(r->y == 1);
  r = cornacchia(11, 20);
  REQUIRE(r.has_value());
  CHECK(r->x == 3);
  CHECK(r->y == 1);
  r = cornacchia(11, 124);
  REQUIRE(r.has_value());
  CHECK(r->x == 5);
  CHECK(r->y == 3);
  r = cornacchia(11, 212);
  REQUIRE(r.has_value());
  CHECK(r->x == 6);
  CHECK(r->y == 4);
  // Degenerate self-representations.
  r = cornacchia(7, 7);
  REQUIRE(r.has_value());
  CHECK(r->x == 0);
  CHECK(r->y == 1);
  r = cornacchia(11, 44);
  REQUIRE(r.has_value());
  CHECK(r->x == 0);
  CHECK(r->y == 2);
  CHECK_THROWS_AS(cornacchia(3, 13), ConfigError);
  CHECK_THROWS_AS(cornacchia(11, 93), ConfigError);
}

TEST_CASE("cornacchia agrees with the exhaustive search") {
  for (int64_t p : sieve_primes(3, 500)) {
    for (int d : {1, 7, 11}) {
      mpz_class N = d == 11 ? mpz_class(4 * p) : mpz_class(p);
      auto fast = cornacchia(d, N);
      auto slow = quadratic_representation_search(d, N);
      CHECK(fast.has_value() == slow.has_value());
      if (fast && slow) {
        CHECK(fast->x * fast->x + d * fast->y * fast->y == N);
        CHECK(slow->x * slow->x + d * slow->y * slow->y == N);
      }
    }
  }
}

TEST_CASE("representation by x^2 + 7y^2 is essentially unique") {
  // For primes p != 7 with (p/7) = 1 the positive solution is unique.
  for (int64_t p : sieve_primes(11, 2000)) {
    auto rep = quadratic_representation_search(7, mpz_class(p));
    if (!rep) continue;
    int count = 0;
    for (mpz_class y = 1; 7 * y * y < p; ++y) {
      mpz_class x;
      if (is_perfect_square(p - 7 * y * y, &x) && x > 0) ++count;
    }
    CHECK(count == 1);
  }
}

TEST_CASE("normalization rules") {
  QuadraticRepresentation r{1, 3, 2};
  QuadraticRepresentation n = normalize_representation(r, NormalizationRule::none);
  CHECK(n.x == 3);
  n = normalize_representation(r, NormalizationRule::x_mod4_eq1);
  CHECK(mod_reduce(n.x, 4) == 1);
  CHECK(n.x == -3);
  // Even x / odd y swap so the odd coordinate carries the sign condition.
  QuadraticRepresentation s{1, 2, 3};
  n = normalize_representation(s, NormalizationRule::x_mod4_eq1);
  CHECK(mod_reduce(n.x, 4) == 1);
  CHECK(n.x * n.x + n.y * n.y == 13);

  QuadraticRepresentation t{11, 9, 1};
  n = normalize_representation(t, NormalizationRule::x_mod11_eq2);
  CHECK(n.x == -9);
  CHECK(mod_reduce(n.x, 11) == 2);
  QuadraticRepresentation bad{11, 6, 4};
  CHECK_THROWS_AS(normalize_representation(bad, NormalizationRule::x_mod11_eq2),
                  RuleInapplicableError);
}

TEST_CASE("binomial-product parameter check for 4p = x^2 + 11y^2") {
  ParameterCheckResult r = jacobi_parameter_check(23);
  CHECK(r.pass);
  CHECK(r.lhs == 14);  // binom(12,6) binom(6,2) / binom(8,4) = 198 == 14
  CHECK(r.rhs == 14);  // x = -9 from 92 = 81 + 11, sign-fixed mod 11
  for (int64_t p : sieve_primes(23, 2000)) {
    if (p % 11 != 1) continue;
    ParameterCheckResult c = jacobi_parameter_check(p);
    CHECK(c.pass);
    CHECK(c.lhs == c.rhs);
  }
}

TEST_CASE("eta series opening coefficients") {
  IntegerSeries s = eta_quartic_sixth_series(30);
  CHECK(s.at(0) == 0);
  CHECK(s.at(1) == 1);
  CHECK(s.at(5) == -6);
  CHECK(s.at(9) == 9);
  CHECK(s.at(13) == 10);
  CHECK(s.at(17) == -30);
  CHECK(s.at(25) == 11);
  CHECK(s.at(29) == 42);
  CHECK_THROWS_AS(s.at(31), IndexOutOfRangeError);
}

TEST_CASE("eta series against direct product expansion") {
  // q prod (1 - q^(4n))^6 multiplied out with dense polynomials.
  const size_t bound = 400;
  std::vector<mpz_class> poly(bound + 1, 0);
  poly[0] = 1;
  for (size_t n = 1; 4 * n <= bound; ++n) {
    for (int rep = 0; rep < 6; ++rep) {
      // poly *= (1 - q^(4n)), truncated.
      for (size_t j = bound + 1; j-- > 4 * n;) poly[j] -= poly[j - 4 * n];
    }
  }
  IntegerSeries s = eta_quartic_sixth_series(bound);
  REQUIRE(s.a.size() >= bound + 1);
  CHECK(s.a[0] == 0);
  for (size_t j = 0; j + 1 <= bound; ++j) CHECK(s.a[j + 1] == poly[j]);
}

TEST_CASE("eta series support and CM structure") {
  const size_t bound = 1013;
  IntegerSeries s = eta_quartic_sixth_series(bound);
  for (size_t n = 0; n <= bound; ++n)
    if (n % 4 != 1) CHECK(s.a[n] == 0);
  for (int64_t p : sieve_primes(3, 1000)) {
    if (p % 4 == 3) {
      CHECK(s.a[static_cast<size_t>(p)] == 0);
    } else if (p % 4 == 1) {
      // a(p) = 2(x^2 - y^2) with p = x^2 + y^2, x odd.
      auto rep = cornacchia(1, mpz_class(p));
      REQUIRE(rep.has_value());
      mpz_class x = rep->x, y = rep->y;
      if (mpz_odd_p(x.get_mpz_t()) == 0) std::swap(x, y);
      CHECK(s.a[static_cast<size_t>(p)] == 2 * (x * x - y * y));
    }
  }
}
