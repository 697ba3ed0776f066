// The check registry: every congruence in scope as an executable definition
// pairing a fast evaluator (Padic streams and shared per-prime tables) with
// an independent exact-rational oracle, plus the candidate-reading validator
// for the two statements that required editorial reconstruction.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cbsum/forms.hpp"
#include "cbsum/padic.hpp"
#include "cbsum/special_values.hpp"

namespace cbsum {

enum class CheckSource {
  theorem,
  lemma,
  derived,
  conjecture,
  reconstruction,
  background,
};

enum class CheckStatus { pass, fail, skip };

const char* to_string(CheckSource s);
const char* to_string(CheckStatus s);

// Per-prime evaluation workspace shared by all checks at one prime: the
// SpecialValues bundle plus lazily built moduli, binomial streams, row
// binomials, inverse tables, and quadratic-form representations, cached by
// precision exponent so checks with a common working exponent share work.
class CheckContext {
 public:
  explicit CheckContext(int64_t p);
  CheckContext(const CheckContext&) = delete;
  CheckContext& operator=(const CheckContext&) = delete;

  int64_t p() const { return p_; }
  const SpecialValues& sv() const { return sv_; }

  const PrimeModulus& modulus(unsigned e);

  // binom(2k,k), k = 0..count-1, as exact-unit Padics at exponent e.
  const std::vector<Padic>& central_binomials(unsigned e, unsigned long count);
  // binom(3k,k) likewise.
  const std::vector<Padic>& trinomial_edges(unsigned e, unsigned long count);
  // binom(p-1,k) mod p^e, indexed by k = 0..p-1.
  const std::vector<mpz_class>& row_binomials(unsigned e);
  // k^{-1} mod p^e, indexed directly by k = 1..p-1 ([0] unused).
  const std::vector<mpz_class>& unit_inverses(unsigned e);
  // Inverses of the central-stream units, aligned with
  // central_binomials(e, count)[k].unit().
  const std::vector<mpz_class>& central_unit_inverses(unsigned e,
                                                      unsigned long count);
  // Representation for x^2 + d y^2 = N (N = p for d in {1,7}, 4p for d=11),
  // normalized x == 1 (mod 4) for d = 1; nullptr when p is not represented.
  const QuadraticRepresentation* representation(int d);

 private:
  int64_t p_;
  SpecialValues sv_;
  std::map<unsigned, PrimeModulus> mods_;
  std::map<unsigned, CentralBinomialStream> central_streams_;
  std::map<unsigned, std::vector<Padic>> central_;
  std::map<unsigned, TrinomialEdgeStream> trinomial_streams_;
  std::map<unsigned, std::vector<Padic>> trinomial_;
  std::map<unsigned, std::vector<mpz_class>> rows_;
  std::map<unsigned, std::vector<mpz_class>> invs_;
  std::map<unsigned, std::vector<mpz_class>> central_invs_;
  std::map<int, std::optional<QuadraticRepresentation>> reps_;
};

// Residues of both sides modulo p^target_e.  Aggregate checks (PFB, PF4,
// C5.5d) report the first mismatching member pair on failure and a combined
// representative on success, so pass == (lhs == rhs) always holds.
struct EvalOutcome {
  mpz_class lhs, rhs;
  bool pass = false;
};

struct CheckDefinition {
  std::string id;
  CheckSource source = CheckSource::theorem;
  // Confidence class for selection: proven statements (theorems, lemmas,
  // derived facts, background results, and the reconstructed theorem branch)
  // versus open conjectures (including the reconstructed conjecture display).
  bool conjectural = false;
  unsigned target_e = 1;   // the claim is a congruence mod p^target_e
  unsigned working_e = 2;  // internal exponent (headroom for lost digits)
  // Sweep ceiling for entries whose cost grows superlinearly (conjecture
  // sweeps are bounded); primes above the cap are reported as skips.
  std::optional<int64_t> prime_cap;
  std::string description;
  std::function<bool(int64_t)> applicable;  // includes prime_cap
  std::function<EvalOutcome(CheckContext&)> eval;
  // Independent brute-force reference over exact rationals; used by the
  // cross-oracle audit and tests on small primes.
  std::function<EvalOutcome(int64_t)> eval_oracle;
};

struct CheckResult {
  std::string id;
  int64_t p = 0;
  CheckStatus status = CheckStatus::skip;
  mpz_class lhs, rhs, modulus;
  int64_t elapsed_us = 0;
};

// All definitions, ordered by id.
const std::vector<CheckDefinition>& catalog();
// nullptr when the id is unknown.
const CheckDefinition* find_check(const std::string& id);

// Evaluate one check at the context's prime.  Non-applicable primes yield
// status = skip.  Precision loss inside an evaluator propagates as
// PrecisionLossError: a check is never silently passed or skipped for lack
// of digits.  elapsed_us is recorded only when `timings` is set, keeping
// default reports byte-stable across runs and worker counts.
CheckResult evaluate_check(const CheckDefinition& def, CheckContext& ctx,
                           bool timings = false);
CheckResult evaluate_check(const std::string& id, int64_t p);

// One candidate reading of a typographically corrupted statement, evaluated
// by the exact oracle on sample primes.  Exactly one candidate per id is
// promoted into the catalog (source = reconstruction); the rejected
// alternatives document why.
struct ReconstructionCandidate {
  std::string check_id;
  std::string reading;
  bool promoted = false;
  std::vector<std::pair<int64_t, bool>> outcomes;  // (p, candidate holds)
};

// id in {"T1.2e-3mod4", "C5.2b"}; throws NotApplicableError otherwise.
// Sample primes must satisfy the branch condition of the statement.
std::vector<ReconstructionCandidate> reconstruct_candidates(
    const std::string& id, const std::vector<int64_t>& sample_primes);

}  // namespace cbsum
