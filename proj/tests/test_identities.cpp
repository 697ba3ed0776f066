#include "doctest.h"

#include "cbsum/combinatorics.hpp"
#include "cbsum/identities.hpp"

#include <set>

using namespace cbsum;

TEST_CASE("identity catalog is ordered and well-formed") {
  const auto& cat = identity_catalog();
  REQUIRE(!cat.empty());
  std::set<std::string> seen;
  std::string prev;
  for (const auto& d : cat) {
    CHECK(prev < d.id);
    prev = d.id;
    CHECK(seen.insert(d.id).second);
    CHECK_FALSE(d.description.empty());
    CHECK(bool(d.applicable));
    CHECK(bool(d.eval));
  }
  for (const char* id : {"ALT0", "CHU", "D4.1", "G2.9", "L2.1a", "L2.1b",
                         "L2.4", "L2.5a", "L2.5b", "L4.3", "R2.1", "SIG1",
                         "SIG2", "SIG3", "U2N", "W4.2"})
    CHECK(seen.count(id) == 1);
}

TEST_CASE("identity base cases") {
  auto val = [](const char* id, long n) {
    IdentityCase c = verify_identity(id, n);
    REQUIRE(c.pass);
    CHECK(c.lhs == c.rhs);
    return c.lhs;
  };
  CHECK(val("G2.9", 0) == 0);
  CHECK(val("G2.9", 1) == 1);
  CHECK(val("G2.9", 2) == Rational(5, 3));
  CHECK(val("G2.9", 3) == Rational(11, 5));
  CHECK(val("L2.1a", 1) == Rational(-1, 3));
  CHECK(val("L2.1b", 1) == Rational(2, 3));
  CHECK(val("L2.1b", 2) == Rational(1, 5));
  CHECK(val("D4.1", 1) == -6);
  CHECK(val("D4.1", 2) == 90);
  CHECK(val("D4.1", 3) == -1680);
  CHECK(val("W4.2", 1) == -1);
  CHECK(val("W4.2", 3) == Rational(35, 3));
  CHECK(val("R2.1", 0) == 1);
  CHECK(val("R2.1", 1) == Rational(1, 3));
  CHECK(val("R2.1", 2) == Rational(-1, 5));
  CHECK(val("L2.4", 0) == 1);
  CHECK(val("L2.4", 1) == Rational(8, 9));
  CHECK(val("L2.4", 2) == Rational(128, 75));
  CHECK(val("L4.3", 1) == Rational(1, 2));
  CHECK(val("L4.3", 2) == 0);
  CHECK(val("L4.3", 3) == Rational(-1, 8));
  CHECK(val("SIG1", 2) == Rational(184, 225));
  CHECK(val("SIG2", 2) == Rational(13, 12));
  CHECK(val("SIG3", 2) == 2);
  CHECK(val("SIG3", 3) == Rational(1, 4));
  CHECK(val("CHU", 3) == 20);
  CHECK(val("ALT0", 1) == 0);
  CHECK(val("ALT0", 3) == 0);
  CHECK(val("L2.5a", 2) == -1);
  CHECK(val("L2.5b", 3) == Rational(7, 64));
  CHECK(val("U2N", 1) == Rational(51, 49));
  CHECK(val("U2N", 2) == Rational(-2299, 2401));
}

TEST_CASE("every identity passes over its small range") {
  for (const auto& d : identity_catalog()) {
    long bound = d.cubic ? 30 : 60;
    int evaluated = 0;
    for (long n = 0; n <= bound; ++n) {
      if (!d.applicable(n)) continue;
      IdentityCase c = d.eval(n);
      CHECK(c.pass);
      CHECK(c.lhs == c.rhs);
      CHECK(c.id == d.id);
      CHECK(c.n == n);
      ++evaluated;
    }
    CHECK(evaluated > 0);
  }
}

TEST_CASE("unknown ids and out-of-domain indices are rejected") {
  CHECK_THROWS_AS(verify_identity("NOPE", 1), NotApplicableError);
  CHECK_THROWS_AS(verify_identity("G2.9", -1), NotApplicableError);
  CHECK_THROWS_AS(verify_identity("W4.2", 2), NotApplicableError);  // odd only
  CHECK_THROWS_AS(verify_identity("SIG3", 1), NotApplicableError);  // n >= 2
  CHECK_THROWS_AS(verify_recurrence("NOPE", 3), NotApplicableError);
  CHECK_THROWS_AS(verify_recurrence("L2.4", -1), NotApplicableError);
  CHECK_THROWS_AS(verify_recurrence("L4.3", 0), NotApplicableError);
}

TEST_CASE("certifying recurrences hold") {
  for (long n = 0; n <= 150; ++n) CHECK(verify_recurrence("L2.4", n));
  for (long n = 1; n <= 150; ++n) CHECK(verify_recurrence("L4.3", n));
}

TEST_CASE("partial fractions split the reduced sum exactly") {
  // sum 4^k/(k(2k-1) b_k) = 2 sum 4^k/((2k-1) b_k) - sum 4^k/(k b_k),
  // b_k = binom(2k, k): the 1/(k(2k-1)) kernel splits linearly.
  Rational lhs(0), r1(0), r2(0);
  mpz_class four_k(1);
  for (long k = 1; k <= 200; ++k) {
    four_k *= 4;
    mpz_class b = central_binomial_exact(static_cast<unsigned long>(k));
    Rational t1(four_k, (2 * k - 1) * b);
    t1.canonicalize();
    Rational t2(four_k, k * b);
    t2.canonicalize();
    Rational t0(four_k, k * (2 * k - 1) * b);
    t0.canonicalize();
    lhs += t0;
    r1 += t1;
    r2 += t2;
    CHECK(lhs == Rational(2) * r1 - r2);
  }
}
