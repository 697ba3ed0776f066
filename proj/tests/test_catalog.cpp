#include "doctest.h"

#include "cbsum/catalog.hpp"

#include <set>
#include <string>

using namespace cbsum;

namespace {

// Frozen (id, p) -> (lhs, rhs, modulus) fixtures.  Each value was computed
// independently (exact rational sums reduced by hand or with a one-off
// script) before being pinned here; a change in any engine component that
// shifts one of these residues is a regression, not a re-baseline.
struct Fixture {
  const char* id;
  int64_t p;
  long lhs, rhs, modulus;
};

const Fixture kFixtures[] = {
    {"T1.1a", 3, 1, 1, 9},        {"T1.1a", 7, 9, 9, 49},
    {"T1.1a", 29, 492, 492, 841}, {"T1.1b", 3, 3, 3, 9},
    {"T1.1b", 7, 35, 35, 49},     {"T1.1c", 7, 3, 3, 7},
    {"T1.1d", 5, 0, 0, 25},       {"T1.1d", 29, 0, 0, 841},
    {"T1.1e", 5, 15, 15, 25},     {"T1.1e", 13, 156, 156, 169},
    {"T1.1f", 5, 4, 4, 5},        {"T1.1f", 29, 21, 21, 29},
    {"T1.2a", 3, 2, 2, 3},        {"T1.2a", 7, 1, 1, 7},
    {"T1.2b", 7, 0, 0, 49},       {"T1.2b", 11, 0, 0, 121},
    {"T1.2c", 5, 2, 2, 5},        {"T1.2c", 29, 26, 26, 29},
    {"T1.2d", 5, 2, 2, 5},        {"T1.2d", 13, 7, 7, 13},
    {"T1.2e", 5, 5, 5, 25},       {"T1.2e", 13, 13, 13, 169},
    {"T1.2e-3mod4", 3, 8, 8, 9},  {"T1.2e-3mod4", 7, 13, 13, 49},
    {"T1.2e-3mod4", 11, 64, 64, 121},
    {"D1.7", 5, 3, 3, 5},         {"D1.7", 13, 2, 2, 13},
    {"D1.8", 5, 1, 1, 5},         {"D1.8", 7, 3, 3, 7},
    {"D1.8", 11, 5, 5, 11},       {"D1.8", 29, 18, 18, 29},
    {"D1.9", 5, 4, 4, 5},         {"D1.9", 11, 3, 3, 11},
    {"L2.3", 3, 2, 2, 3},         {"L2.3", 7, 3, 3, 7},
    {"L2.3s", 5, 85, 85, 125},    {"L2.3s", 7, 208, 208, 343},
    {"L2.6", 5, 0, 0, 5},         {"L2.6", 13, 9, 9, 13},
    {"R2.1c", 5, 24, 24, 25},     {"R2.1c", 7, 1, 1, 49},
    {"P3.1", 3, 2, 2, 3},         {"P3.1", 11, 9, 9, 11},
    {"PFB", 5, 3, 3, 5},          {"PFB", 13, 6, 6, 13},
    {"PF4", 5, 0, 0, 25},         {"PF4", 29, 0, 0, 841},
    {"BKG1", 3, 0, 0, 9},         {"BKG1", 5, 19, 19, 25},
    {"BKG1", 13, 10, 10, 169},    {"BKG2", 7, 323, 323, 343},
    {"BKG2", 13, 924, 924, 2197}, {"BKG3", 5, 75, 75, 125},
    {"BKG3", 11, 726, 726, 1331}, {"BKG4", 11, 4, 4, 11},
    {"BKG5", 7, 4, 4, 7},         {"BKG5", 29, 23, 23, 29},
    {"C5.1a", 7, 10094, 10094, 16807},
    {"C5.1b", 7, 79, 79, 343},    {"C5.1c", 7, 175, 175, 343},
    {"C5.1d", 11, 110, 110, 121}, {"C5.2a", 3, 22, 22, 27},
    {"C5.2a", 5, 18, 18, 125},    {"C5.2b", 5, 22, 22, 125},
    {"C5.2b", 7, 236, 236, 343},  {"C5.2c", 5, 2, 2, 5},
    {"C5.2d", 5, 101, 101, 125},  {"C5.2e", 5, 1, 1, 125},
    {"C5.2e", 7, 138, 138, 343},  {"C5.3", 3, 0, 0, 9},
    {"C5.3", 11, 115, 115, 121},  {"C5.3", 29, 787, 787, 841},
    {"C5.4", 3, 4, 4, 9},         {"C5.4", 5, 24, 24, 25},
    {"C5.4", 7, 0, 0, 49},        {"C5.5a", 5, 13, 13, 25},
    {"C5.5b", 5, 13, 13, 25},     {"C5.5c", 5, 12, 12, 25},
    {"C5.5c", 13, 137, 137, 169}, {"C5.5d", 7, 0, 0, 49},
    {"C5.5e", 3, 3, 3, 27},       {"C5.5e", 7, 112, 112, 343},
    {"R1.2a1", 13, 0, 0, 169},    {"R1.2a2", 13, 0, 0, 28561},
    {"R1.2b", 7, 12, 12, 49},     {"R1.2c", 5, 8, 8, 25},
    {"R1.2c", 29, 8, 8, 841},
};

const std::set<std::string> kConjectureIds = {
    "C5.1a", "C5.1b", "C5.1c", "C5.1d", "C5.2a", "C5.2b", "C5.2c",
    "C5.2d", "C5.2e", "C5.3",  "C5.4",  "C5.5a", "C5.5b", "C5.5c",
    "C5.5d", "C5.5e", "R1.2a1", "R1.2a2", "R1.2b", "R1.2c"};

}  // namespace

TEST_CASE("catalog roster is ordered, unique, and complete") {
  const auto& cat = catalog();
  CHECK(cat.size() == 47);
  std::string prev;
  for (const auto& d : cat) {
    CHECK(prev < d.id);
    prev = d.id;
    CHECK_FALSE(d.description.empty());
    CHECK(d.target_e >= 1);
    CHECK(d.working_e >= d.target_e);
    CHECK(bool(d.applicable));
    CHECK(bool(d.eval));
    CHECK(bool(d.eval_oracle));
  }
  CHECK(find_check("T1.1a") != nullptr);
  CHECK(find_check("nonsense") == nullptr);
}

TEST_CASE("source and confidence classification") {
  int reconstructions = 0;
  for (const auto& d : catalog()) {
    CHECK(d.conjectural == (kConjectureIds.count(d.id) == 1));
    if (d.source == CheckSource::reconstruction) {
      ++reconstructions;
      CHECK((d.id == "T1.2e-3mod4" || d.id == "C5.2b"));
    }
    if (d.id.rfind("T1.", 0) == 0 && d.id != "T1.2e-3mod4")
      CHECK(d.source == CheckSource::theorem);
    if (d.id.rfind("BKG", 0) == 0)
      CHECK(d.source == CheckSource::background);
    if (d.id.rfind("C5.", 0) == 0 && d.id != "C5.2b")
      CHECK(d.source == CheckSource::conjecture);
  }
  CHECK(reconstructions == 2);
  CHECK(find_check("T1.2e-3mod4")->conjectural == false);
  CHECK(find_check("C5.2b")->conjectural == true);
}

TEST_CASE("to_string names") {
  CHECK(std::string(to_string(CheckSource::theorem)) == "theorem");
  CHECK(std::string(to_string(CheckSource::lemma)) == "lemma");
  CHECK(std::string(to_string(CheckSource::derived)) == "derived");
  CHECK(std::string(to_string(CheckSource::conjecture)) == "conjecture");
  CHECK(std::string(to_string(CheckSource::reconstruction)) ==
        "reconstruction");
  CHECK(std::string(to_string(CheckSource::background)) == "background");
  CHECK(std::string(to_string(CheckStatus::pass)) == "pass");
  CHECK(std::string(to_string(CheckStatus::fail)) == "fail");
  CHECK(std::string(to_string(CheckStatus::skip)) == "skip");
}

TEST_CASE("frozen residue fixtures") {
  for (const Fixture& f : kFixtures) {
    CAPTURE(f.id);
    CAPTURE(f.p);
    CheckResult r = evaluate_check(f.id, f.p);
    CHECK(r.status == CheckStatus::pass);
    CHECK(r.lhs == f.lhs);
    CHECK(r.rhs == f.rhs);
    CHECK(r.modulus == f.modulus);
    CHECK(r.p == f.p);
    CHECK(r.id == f.id);
    CHECK(r.elapsed_us == 0);
  }
}

TEST_CASE("applicability filters produce skips, not context work") {
  // Wrong residue class, below-floor primes, and capped primes all skip.
  CheckResult r = evaluate_check("T1.2e", 7);  // needs p == 1 (mod 4)
  CHECK(r.status == CheckStatus::skip);
  CHECK(r.lhs == 0);
  CHECK(r.rhs == 0);
  CHECK(r.modulus == 49);

  r = evaluate_check("T1.2e-3mod4", 13);
  CHECK(r.status == CheckStatus::skip);

  r = evaluate_check("T1.1d", 3);  // needs p > 3
  CHECK(r.status == CheckStatus::skip);

  r = evaluate_check("R1.2a2", 101);  // cap 100
  CHECK(r.status == CheckStatus::skip);
  CHECK(r.modulus == mpz_class(101) * 101 * 101 * 101);

  r = evaluate_check("BKG1", 1009);  // cap 1000
  CHECK(r.status == CheckStatus::skip);

  r = evaluate_check("C5.1a", 2003);  // conjecture cap 2000
  CHECK(r.status == CheckStatus::skip);

  // p = 2 never reaches a context (PrimeModulus would reject it).
  for (const auto& d : catalog()) CHECK_FALSE(d.applicable(2));

  CHECK_THROWS_AS(evaluate_check("nonsense", 7), ConfigError);
}

TEST_CASE("fast evaluators agree with their oracles at p = 11 and 13") {
  for (int64_t p : {int64_t{11}, int64_t{13}}) {
    CheckContext ctx(p);
    for (const auto& d : catalog()) {
      if (!d.applicable(p)) continue;
      CAPTURE(d.id);
      CAPTURE(p);
      EvalOutcome fast = d.eval(ctx);
      EvalOutcome slow = d.eval_oracle(p);
      CHECK(fast.lhs == slow.lhs);
      CHECK(fast.rhs == slow.rhs);
      CHECK(fast.pass == slow.pass);
    }
  }
}

TEST_CASE("check context shares tables across exponents") {
  CheckContext ctx(13);
  CHECK(ctx.p() == 13);
  CHECK(ctx.sv().p == 13);
  const PrimeModulus& M2 = ctx.modulus(2);
  CHECK(M2.m() == 169);
  CHECK(&ctx.modulus(2) == &M2);  // cached, not rebuilt

  const auto& central = ctx.central_binomials(2, 10);
  REQUIRE(central.size() >= 10);
  CHECK(central[4].unit() == 70 % 169);
  const auto& more = ctx.central_binomials(2, 20);
  REQUIRE(more.size() >= 20);
  CHECK(more[4].unit() == 70 % 169);

  const auto& inv = ctx.unit_inverses(2);
  for (int64_t k = 1; k < 13; ++k)
    CHECK(mod_reduce(inv[static_cast<size_t>(k)] * k, M2.m()) == 1);

  const auto& cinv = ctx.central_unit_inverses(2, 10);
  REQUIRE(cinv.size() >= 10);
  for (size_t k = 0; k < 10; ++k)
    CHECK(mod_reduce(cinv[k] * central[k].unit(), M2.m()) == 1);

  const auto& row = ctx.row_binomials(2);
  CHECK(row[0] == 1);
  CHECK(row[12] == 1);

  // 13 = x^2 + y^2 with x == 1 (mod 4): (-3)^2 + 2^2.
  const QuadraticRepresentation* rep = ctx.representation(1);
  REQUIRE(rep != nullptr);
  CHECK(rep->x == -3);
  CHECK(rep->y == 2);
  // (13/7) = -1: no x^2 + 7y^2 representation.
  CHECK(ctx.representation(7) == nullptr);
  CHECK_THROWS_AS(ctx.representation(3), ConfigError);
}

TEST_CASE("reconstruction candidates for the corrupted displays") {
  SUBCASE("odd-branch central-product statement") {
    auto cands = reconstruct_candidates("T1.2e-3mod4", {3, 7, 11, 19, 23});
    REQUIRE(cands.size() == 3);
    int promoted = 0;
    for (const auto& c : cands) {
      CHECK(c.check_id == "T1.2e-3mod4");
      REQUIRE(c.outcomes.size() == 5);
      if (c.promoted) {
        ++promoted;
        for (const auto& [p, ok] : c.outcomes) CHECK(ok);
        CHECK(c.reading.find("4p+2^p-6") != std::string::npos);
      } else {
        // Both rejected readings fail at every sample prime.
        for (const auto& [p, ok] : c.outcomes) CHECK_FALSE(ok);
      }
    }
    CHECK(promoted == 1);
    CHECK_THROWS_AS(reconstruct_candidates("T1.2e-3mod4", {5}), ConfigError);
    CHECK_THROWS_AS(reconstruct_candidates("T1.2e-3mod4", {9}), ConfigError);
  }

  SUBCASE("prefactor placement in the inverse-square statement") {
    auto cands = reconstruct_candidates("C5.2b", {5, 7, 11, 13});
    REQUIRE(cands.size() == 3);
    int promoted = 0;
    for (const auto& c : cands) {
      REQUIRE(c.outcomes.size() == 4);
      if (c.promoted) {
        ++promoted;
        for (const auto& [p, ok] : c.outcomes) CHECK(ok);
      } else {
        for (const auto& [p, ok] : c.outcomes) CHECK_FALSE(ok);
      }
    }
    CHECK(promoted == 1);
    CHECK_THROWS_AS(reconstruct_candidates("C5.2b", {3}), ConfigError);
    CHECK_THROWS_AS(reconstruct_candidates("C5.2b", {10}), ConfigError);
  }

  SUBCASE("only the two corrupted ids reconstruct") {
    CHECK_THROWS_AS(reconstruct_candidates("T1.1a", {7}), NotApplicableError);
    CHECK_THROWS_AS(reconstruct_candidates("zzz", {7}), NotApplicableError);
  }
}

TEST_CASE("reconstructed statements are wired into the catalog") {
  const CheckDefinition* a = find_check("T1.2e-3mod4");
  REQUIRE(a != nullptr);
  CHECK(a->source == CheckSource::reconstruction);
  CHECK(a->target_e == 2);
  const CheckDefinition* b = find_check("C5.2b");
  REQUIRE(b != nullptr);
  CHECK(b->source == CheckSource::reconstruction);
  CHECK(b->target_e == 3);
}

TEST_CASE("prime caps are recorded on the expensive entries") {
  CHECK(find_check("R1.2a2")->prime_cap == int64_t{100});
  CHECK(find_check("BKG1")->prime_cap == int64_t{1000});
  CHECK(find_check("C5.1a")->prime_cap == int64_t{2000});
  CHECK(find_check("R1.2a1")->prime_cap == int64_t{2000});
  CHECK_FALSE(find_check("T1.1a")->prime_cap.has_value());
  CHECK_FALSE(find_check("BKG2")->prime_cap.has_value());
}
