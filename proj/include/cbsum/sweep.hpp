// Prime-range sweeps over the check catalog (parallel, deterministic merge)
// and the cross-oracle audit that compares every fast method against its
// independent brute-force counterpart.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cbsum/catalog.hpp"

namespace cbsum {

struct SweepConfig {
  int64_t prime_min = 3;
  int64_t prime_max = 100;
  // Selector tokens: explicit check ids, "all", "theorems" (every
  // non-conjectural entry), or "conjectures".  Empty means all.
  std::vector<std::string> checks;
  unsigned jobs = 1;  // 0 = hardware concurrency
  bool fail_fast = false;
  bool timings = false;
};

// Expand selector tokens into concrete check ids in catalog order, without
// duplicates.  Throws ConfigError on an unknown token.
std::vector<std::string> resolve_check_selection(
    const std::vector<std::string>& tokens);

struct SweepSummary {
  // One result per (prime, selected check), ordered by (p, id); identical
  // bytes regardless of worker count (elapsed_us stays 0 unless timings).
  std::vector<CheckResult> results;
  size_t passed = 0;
  size_t failed = 0;
  size_t skipped = 0;
};

// Evaluate the selected checks at every odd prime in [prime_min, prime_max].
// Workers claim primes atomically; each prime's results are produced by a
// single worker from one shared CheckContext and merged in prime order.
// With fail_fast, workers stop claiming new primes after the first failure
// (results for primes already claimed are kept, so output remains a prefix-
// closed set of primes).  Throws ConfigError for an empty range.
SweepSummary run_sweep(const SweepConfig& cfg);

struct AuditDiscrepancy {
  std::string section;
  int64_t p = 0;
  std::string detail;
};

struct AuditReport {
  int64_t bound = 0;
  size_t comparisons = 0;
  std::vector<AuditDiscrepancy> discrepancies;
  bool clean() const { return discrepancies.empty(); }
};

// Compare fast and brute-force routes over all odd primes <= bound:
//   euler:     E_{p-3} mod p, table route vs. the defining recursion
//   bernoulli: B_{p-3}, B_{p-5} mod p, power-sum route vs. exact rationals
//   harmonic:  H_{p-1} mod p^5 and H_{(p-1)/2} mod p^3 vs. exact sums
//   streams:   central/trinomial ratio recurrences vs. exact binomials
//   forms:     Cornacchia vs. exhaustive y-scan for d = 1, 7, 11
//   catalog:   every applicable check's fast evaluator vs. its oracle
//              (primes capped at 31; the oracles are exact-rational sums)
// The bound must lie in [5, 500]; larger values would push the exact
// oracles out of their intended brute-force regime.
AuditReport cross_oracle_audit(int64_t bound);

}  // namespace cbsum
