// cbsweep: verify central-binomial congruence families over prime ranges.
//
// Modes (mutually exclusive):
//   default          sweep the selected checks over [--primes-min, --primes-max]
//   --identities     verify the exact identity suite up to --max-n
//   --audit          cross-validate fast methods against brute-force oracles
//   --reconstruct ID validate candidate readings of a reconstructed statement
//   --list-checks    print the check roster
//
// Results stream to stdout (json lines by default); a short human summary
// goes to stderr.  Exit status: 0 everything verified, 1 at least one
// failure, 2 usage or configuration error.
#include "CLI11.hpp"

#include "cbsum/report.hpp"
#include "cbsum/sweep.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

namespace {

using namespace cbsum;

std::vector<std::string> split_tokens(const std::string& csv) {
  std::vector<std::string> tokens;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) tokens.push_back(tok);
  return tokens;
}

int sweep_mode(const SweepConfig& cfg, ReportFormat fmt) {
  SweepSummary s = run_sweep(cfg);
  emit_check_results(std::cout, s.results, fmt);
  std::cerr << "checks: " << s.passed << " passed, " << s.failed
            << " failed, " << s.skipped << " skipped\n";
  return s.failed ? 1 : 0;
}

int identities_mode(long max_n, long max_n_cubic, ReportFormat fmt) {
  std::vector<IdentityCase> cases;
  size_t failed = 0;
  for (const auto& d : identity_catalog()) {
    const long bound = d.cubic ? max_n_cubic : max_n;
    for (long n = 0; n <= bound; ++n) {
      if (!d.applicable(n)) continue;
      IdentityCase c = d.eval(n);
      if (!c.pass) ++failed;
      cases.push_back(std::move(c));
    }
  }
  size_t rec_checked = 0, rec_failed = 0;
  for (long n = 0; n + 2 <= max_n; ++n) {
    ++rec_checked;
    if (!verify_recurrence("L2.4", n)) ++rec_failed;
  }
  for (long n = 1; n + 2 <= max_n; ++n) {
    ++rec_checked;
    if (!verify_recurrence("L4.3", n)) ++rec_failed;
  }
  emit_identity_cases(std::cout, cases, fmt);
  std::cerr << "identities: " << (cases.size() - failed) << " passed, "
            << failed << " failed; recurrence instances: " << rec_checked
            << " checked, " << rec_failed << " failed\n";
  return (failed || rec_failed) ? 1 : 0;
}

int audit_mode(int64_t bound, ReportFormat fmt) {
  AuditReport rep = cross_oracle_audit(bound);
  emit_audit_report(std::cout, rep, fmt);
  std::cerr << "audit: " << rep.comparisons << " comparisons, "
            << rep.discrepancies.size() << " discrepancies\n";
  return rep.clean() ? 0 : 1;
}

int reconstruct_mode(const std::string& id, int64_t pmin, int64_t pmax,
                     ReportFormat fmt) {
  std::function<bool(int64_t)> admit;
  if (id == "T1.2e-3mod4") {
    admit = [](int64_t p) { return p % 4 == 3; };
  } else if (id == "C5.2b") {
    admit = [](int64_t p) { return p > 3; };
  } else {
    throw NotApplicableError("no reconstruction for check id: " + id);
  }
  std::vector<int64_t> samples;
  for (int64_t p : sieve_primes(std::max<int64_t>(3, pmin), pmax))
    if (admit(p)) samples.push_back(p);
  if (samples.empty())
    throw ConfigError("no admissible sample primes in range");
  auto candidates = reconstruct_candidates(id, samples);
  emit_reconstructions(std::cout, candidates, fmt);
  bool promoted = false;
  for (const auto& c : candidates) promoted = promoted || c.promoted;
  std::cerr << (promoted
                    ? "promoted reading validated on all sample primes\n"
                    : "no candidate reading promoted\n");
  return promoted ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact verification of congruences for central binomial coefficients"};
  int64_t pmin = 3, pmax = 100, bound = 199;
  std::string checks = "all", reconstruct_id, format = "json";
  long max_n = 300, max_n_cubic = 150;
  unsigned jobs = 1;
  bool identities = false, audit = false, fail_fast = false, timings = false,
       list_checks = false;

  app.add_option("--primes-min", pmin, "Lower prime bound, inclusive")
      ->capture_default_str();
  app.add_option("--primes-max", pmax, "Upper prime bound, inclusive")
      ->capture_default_str();
  app.add_option("--checks", checks,
                 "Comma-separated check ids or selectors (all, theorems, "
                 "conjectures)")
      ->capture_default_str();
  app.add_flag("--identities", identities,
               "Verify the exact identity suite instead of sweeping primes");
  app.add_option("--max-n", max_n, "Identity index bound")
      ->capture_default_str();
  app.add_option("--max-n-cubic", max_n_cubic,
                 "Index bound for the cubic identities")
      ->capture_default_str();
  app.add_flag("--audit", audit,
               "Cross-validate fast methods against brute-force oracles");
  app.add_option("--bound", bound, "Audit prime bound, 5..500")
      ->capture_default_str();
  app.add_option("--reconstruct", reconstruct_id,
                 "Validate candidate readings for a reconstructed check id");
  app.add_option("--format", format, "Output format: json, csv, table")
      ->capture_default_str();
  app.add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)")
      ->capture_default_str();
  app.add_flag("--fail-fast", fail_fast,
               "Stop claiming new primes after the first failure");
  app.add_flag("--timings", timings,
               "Record per-check elapsed microseconds (output no longer "
               "byte-deterministic)");
  app.add_flag("--list-checks", list_checks, "Print the check roster");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ReportFormat fmt = parse_report_format(format);
    int modes = static_cast<int>(identities) + static_cast<int>(audit) +
                static_cast<int>(!reconstruct_id.empty()) +
                static_cast<int>(list_checks);
    if (modes > 1)
      throw ConfigError(
          "choose at most one of --identities, --audit, --reconstruct, "
          "--list-checks");
    if (list_checks) {
      emit_check_roster(std::cout, fmt);
      return 0;
    }
    if (audit) return audit_mode(bound, fmt);
    if (identities) return identities_mode(max_n, max_n_cubic, fmt);
    if (!reconstruct_id.empty())
      return reconstruct_mode(reconstruct_id, pmin, pmax, fmt);

    SweepConfig cfg;
    cfg.prime_min = pmin;
    cfg.prime_max = pmax;
    cfg.checks = split_tokens(checks);
    cfg.jobs = jobs;
    cfg.fail_fast = fail_fast;
    cfg.timings = timings;
    return sweep_mode(cfg, fmt);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "engine error: " << e.what() << '\n';
    return 2;
  }
}
