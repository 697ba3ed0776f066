#include "cbsum/sweep.hpp"

#include "cbsum/combinatorics.hpp"
#include "cbsum/rational.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <thread>

namespace cbsum {

std::vector<std::string> resolve_check_selection(
    const std::vector<std::string>& tokens) {
  std::set<std::string> picked;
  auto add_if = [&](auto pred) {
    for (const auto& d : catalog())
      if (pred(d)) picked.insert(d.id);
  };
  if (tokens.empty()) {
    add_if([](const CheckDefinition&) { return true; });
  } else {
    for (const auto& t : tokens) {
      if (t == "all") {
        add_if([](const CheckDefinition&) { return true; });
      } else if (t == "theorems") {
        add_if([](const CheckDefinition& d) { return !d.conjectural; });
      } else if (t == "conjectures") {
        add_if([](const CheckDefinition& d) { return d.conjectural; });
      } else if (find_check(t)) {
        picked.insert(t);
      } else {
        throw ConfigError("unknown check id or selector: " + t);
      }
    }
  }
  std::vector<std::string> ids;
  for (const auto& d : catalog())
    if (picked.count(d.id)) ids.push_back(d.id);
  return ids;
}

SweepSummary run_sweep(const SweepConfig& cfg) {
  if (cfg.prime_min > cfg.prime_max)
    throw ConfigError("empty prime range: min exceeds max");
  auto ids = resolve_check_selection(cfg.checks);
  std::vector<const CheckDefinition*> defs;
  defs.reserve(ids.size());
  for (const auto& id : ids) defs.push_back(find_check(id));

  auto primes = sieve_primes(std::max<int64_t>(3, cfg.prime_min),
                             cfg.prime_max);
  unsigned jobs = cfg.jobs ? cfg.jobs : std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;
  jobs = static_cast<unsigned>(
      std::min<size_t>(jobs, std::max<size_t>(primes.size(), 1)));

  std::vector<std::vector<CheckResult>> per_prime(primes.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> stop{false};
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (;;) {
          if (stop.load(std::memory_order_relaxed)) break;
          size_t i = next.fetch_add(1, std::memory_order_relaxed);
          if (i >= primes.size()) break;
          CheckContext ctx(primes[i]);
          auto& out = per_prime[i];
          out.reserve(defs.size());
          for (const CheckDefinition* d : defs) {
            CheckResult r = evaluate_check(*d, ctx, cfg.timings);
            bool failed = r.status == CheckStatus::fail;
            out.push_back(std::move(r));
            if (failed && cfg.fail_fast) {
              stop.store(true, std::memory_order_relaxed);
              break;
            }
          }
        }
      } catch (...) {
        errors[w] = std::current_exception();
        stop.store(true, std::memory_order_relaxed);
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  SweepSummary s;
  for (auto& v : per_prime) {
    for (auto& r : v) {
      switch (r.status) {
        case CheckStatus::pass: ++s.passed; break;
        case CheckStatus::fail: ++s.failed; break;
        case CheckStatus::skip: ++s.skipped; break;
      }
      s.results.push_back(std::move(r));
    }
  }
  return s;
}

namespace {

mpz_class rat_residue(const Rational& q, int64_t p, unsigned e) {
  PrimeModulus M(p, e);
  return rational_to_residue(q, M, e);
}

}  // namespace

AuditReport cross_oracle_audit(int64_t bound) {
  if (bound < 5 || bound > 500)
    throw ConfigError("audit bound must lie in [5, 500]");
  AuditReport rep;
  rep.bound = bound;
  auto note = [&](std::string section, int64_t p, std::string detail) {
    rep.discrepancies.push_back({std::move(section), p, std::move(detail)});
  };
  auto primes = sieve_primes(3, bound);

  for (int64_t p : primes) {
    const mpz_class pz(p);

    if (p > 3) {
      ++rep.comparisons;
      if (euler_number_mod_p(p) != mod_reduce(euler_exact(p - 3), pz))
        note("euler", p, "E_{p-3} mod p: quarter-sum route != recursion");
    }

    if (p > 3) {
      ++rep.comparisons;
      if (bernoulli_mod_p(p, p - 3) !=
          rat_residue(bernoulli_exact(p - 3), p, 1))
        note("bernoulli", p, "B_{p-3} mod p: power-sum route != recursion");
    }
    if (p > 5) {
      ++rep.comparisons;
      if (bernoulli_mod_p(p, p - 5) !=
          rat_residue(bernoulli_exact(p - 5), p, 1))
        note("bernoulli", p, "B_{p-5} mod p: power-sum route != recursion");
    }

    ++rep.comparisons;
    if (harmonic_mod(p, p - 1, 5) != rat_residue(harmonic_exact(p - 1), p, 5))
      note("harmonic", p, "H_{p-1} mod p^5: batched route != exact sum");
    ++rep.comparisons;
    if (harmonic_mod(p, (p - 1) / 2, 3) !=
        rat_residue(harmonic_exact((p - 1) / 2), p, 3))
      note("harmonic", p, "H_{(p-1)/2} mod p^3: batched route != exact sum");

    {
      PrimeModulus M(p, 2);
      CentralBinomialStream cs(M);
      TrinomialEdgeStream ts(M);
      for (int64_t k = 0; k < p; ++k) {
        ++rep.comparisons;
        auto want_c = remove_prime_power(central_binomial_exact(k), p);
        if (cs.value().valuation() != static_cast<long>(want_c.v) ||
            cs.value().unit() != mod_reduce(want_c.unit, M.m()))
          note("streams", p,
               "central stream k=" + std::to_string(k) + " != exact binomial");
        ++rep.comparisons;
        auto want_t =
            remove_prime_power(binomial_exact(mpz_class(3 * k), k), p);
        if (ts.value().valuation() != static_cast<long>(want_t.v) ||
            ts.value().unit() != mod_reduce(want_t.unit, M.m()))
          note("streams", p,
               "trinomial stream k=" + std::to_string(k) +
                   " != exact binomial");
        cs.advance();
        ts.advance();
      }
    }

    for (int d : {1, 7, 11}) {
      mpz_class N = d == 11 ? mpz_class(4 * p) : pz;
      auto fast = cornacchia(d, N);
      auto slow = quadratic_representation_search(d, N);
      ++rep.comparisons;
      if (fast.has_value() != slow.has_value()) {
        note("forms", p,
             "d=" + std::to_string(d) + ": Cornacchia and y-scan disagree on "
             "representability");
      } else if (fast) {
        mpz_class fx = abs(fast->x), fy = abs(fast->y);
        mpz_class sx = abs(slow->x), sy = abs(slow->y);
        bool same = d == 1 ? (std::minmax(fx, fy) == std::minmax(sx, sy))
                           : (fx == sx && fy == sy);
        if (!same)
          note("forms", p,
               "d=" + std::to_string(d) + ": representations differ");
      }
    }
  }

  for (int64_t p : primes) {
    if (p > 31) break;
    CheckContext ctx(p);
    for (const auto& d : catalog()) {
      if (!d.applicable(p)) continue;
      ++rep.comparisons;
      EvalOutcome fast = d.eval(ctx);
      EvalOutcome slow = d.eval_oracle(p);
      if (fast.lhs != slow.lhs || fast.rhs != slow.rhs ||
          fast.pass != slow.pass)
        note("catalog", p,
             d.id + ": fast (" + fast.lhs.get_str() + " vs " +
                 fast.rhs.get_str() + ") != oracle (" + slow.lhs.get_str() +
                 " vs " + slow.rhs.get_str() + ")");
    }
  }

  return rep;
}

}  // namespace cbsum
