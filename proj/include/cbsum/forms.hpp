// Quadratic representations N = x^2 + d y^2 (d = 1, 7, 11), their
// normalizations, the binomial-product parameter check for d = 11, and the
// sparse eta-product series q * prod (1 - q^(4n))^6.
#pragma once

#include "cbsum/arith.hpp"

#include <optional>

namespace cbsum {

// Square root of a modulo odd prime p (Tonelli-Shanks); nullopt when a is a
// non-residue.
std::optional<mpz_class> sqrt_mod_prime(const mpz_class& a, int64_t p);

struct QuadraticRepresentation {
  int d = 1;
  mpz_class x, y;  // x may turn negative after normalization; y stays >= 0
};

// Solve N = x^2 + d y^2 by Cornacchia descent.  For d = 1, 7 the expected N
// is an odd prime p; for d = 11 it is 4p and x is kept odd.  Returns nullopt
// when no representation exists.
std::optional<QuadraticRepresentation> cornacchia(int d, const mpz_class& N);

// Brute-force oracle: scan y = 0..sqrt(N/d).  Returns the representation
// with the smallest y (both coordinates nonnegative).
std::optional<QuadraticRepresentation> quadratic_representation_search(
    int d, const mpz_class& N);

enum class NormalizationRule { none, x_mod4_eq1, x_mod11_eq2 };

// Sign-fix x per rule (d = 1: make the odd coordinate x with x == 1 mod 4;
// d = 11: make x == 2 mod 11).  Throws RuleInapplicableError when the rule
// cannot apply (e.g. x not congruent to +-2 mod 11).
QuadraticRepresentation normalize_representation(QuadraticRepresentation r,
                                                 NormalizationRule rule);

// For p == 1 (mod 11), f = (p-1)/11: checks
//   binom(6f,3f) binom(3f,f) / binom(4f,2f) == x (mod p)
// against the x == 2 (mod 11) normalization of 4p = x^2 + 11 y^2.
struct ParameterCheckResult {
  bool pass = false;
  mpz_class lhs, rhs;  // residues mod p
};
ParameterCheckResult jacobi_parameter_check(int64_t p);

// Coefficients a(0..n_max) of q * prod_{n>=1} (1 - q^(4n))^6; the support
// lies in n == 1 (mod 4).
struct IntegerSeries {
  std::vector<mpz_class> a;
  const mpz_class& at(size_t n) const {
    if (n >= a.size()) throw IndexOutOfRangeError("series index past bound");
    return a[n];
  }
};
IntegerSeries eta_quartic_sixth_series(size_t n_max);

}  // namespace cbsum
