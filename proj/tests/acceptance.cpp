// Acceptance run: one PASS/FAIL line per criterion over the default catalog.

#include <chrono>
#include <cstdio>
#include <string>

#include "fcr/classifier.hpp"
#include "fcr/expr.hpp"
#include "fcr/report.hpp"
#include "fcr/suites.hpp"

using namespace fcr;

namespace {

// Pinned thresholds.
constexpr std::size_t kModuleBudget = 200;
constexpr double kSvnrSeconds = 300.0;
constexpr std::uint64_t kMinTrueOutsideUnits = 3;
constexpr std::uint64_t kMinFalseWithWitness = 3;
constexpr std::uint64_t kMinHomologicalChecks = 500;
constexpr std::uint64_t kMinTrivialPairs = 50;
constexpr std::uint64_t kMinProjectivityChecks = 1000;
constexpr std::uint64_t kDeterminismSeed = 7;

int failures = 0;

void line(int id, const std::string& what, bool ok, const std::string& detail) {
  std::printf("AC%d %-28s %s  %s\n", id, what.c_str(), ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::uint64_t stat(const SuiteReport& r, const std::string& k) {
  auto it = r.stats.find(k);
  return it == r.stats.end() ? 0 : it->second;
}

std::string num(std::uint64_t v) { return std::to_string(v); }

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

std::size_t first_failure_count(const SuiteReport& r) { return r.count(Status::Fail); }

/// The authoritative S-perfect verdict of a pinned instance.
Verdict pinned(Classifier& c, const std::string& ring, const std::string& s) {
  const RingPtr r = ring_from_text(ring);
  return s_perfect_routes(c.analysis(r), mset_from_text(s, r)).primary();
}

}  // namespace

int main() {
  CatalogSpec spec = CatalogSpec::defaults();
  spec.module_budget = kModuleBudget;
  SuiteContext ctx(spec);
  std::size_t pairs = 0;
  for (const auto& e : ctx.catalog()) pairs += e.msets.size();
  std::printf("catalog: %zu rings, %zu pairs, module budget %zu\n", ctx.catalog().size(), pairs, kModuleBudget);

  {
    const SuiteReport r = run_suite("svnr-equiv", ctx);
    std::size_t min_pool = SIZE_MAX;
    for (const auto& e : r.entries)
      for (const auto& v : e.verdicts)
        if (v.pool_size) min_pool = std::min(min_pool, v.pool_size);
    const bool ok = r.passed() && stat(r, "pairs") == pairs && r.wall_seconds <= kSvnrSeconds;
    line(1, "svnr-equiv", ok,
         "pairs=" + num(stat(r, "pairs")) + "/" + num(pairs) + " disagreements=" + num(first_failure_count(r)) +
             " budget=" + num(kModuleBudget) + " min_pool=" + num(min_pool) + " time=" + seconds(r.wall_seconds) +
             " (<= " + seconds(kSvnrSeconds) + ")");
  }
  {
    const SuiteReport r = run_suite("sperfect-equiv", ctx);
    Classifier c;
    std::string pins;
    bool pins_ok = true;
    for (const auto& [ring, s, want] : std::vector<std::tuple<std::string, std::string, bool>>{
             {"Z/6", "S{3}", true}, {"Z/12", "S{9}", true}, {"Z/12", "S{4}", false}, {"Z/12", "S{2}", false}}) {
      const Verdict v = pinned(c, ring, s);
      const bool ok = v.holds() == want && (want || v.witness.has_value());
      pins_ok = pins_ok && ok;
      pins += " " + ring + " " + s + "=" + (v.holds() ? "T" : "F");
    }
    const bool ok = r.passed() && stat(r, "pairs") == pairs && stat(r, "true_outside_units") >= kMinTrueOutsideUnits &&
                    stat(r, "false_with_witness") >= kMinFalseWithWitness && pins_ok;
    line(2, "sperfect-equiv", ok,
         "pairs=" + num(stat(r, "pairs")) + " disagreements=" + num(first_failure_count(r)) +
             " true_outside_units=" + num(stat(r, "true_outside_units")) + " (>= " + num(kMinTrueOutsideUnits) +
             ") false_with_witness=" + num(stat(r, "false_with_witness")) + " (>= " + num(kMinFalseWithWitness) +
             ") pinned:" + pins);
  }
  {
    const SuiteReport r = run_suite("paper-examples", ctx);
    const std::vector<std::string> want_pass = {"perfect-not-s-perfect", "semisimple-support", "field-times-local",
                                                "trivial-extension-divisibility", "nontrivial-set-exists"};
    bool ok = r.passed() && r.count(Status::Pass) == want_pass.size() && r.count(Status::Skipped) == 1;
    for (const auto& id : want_pass) {
      bool seen = false;
      for (const auto& e : r.entries) seen = seen || (e.assertion.rfind(id + ":", 0) == 0 && e.status == Status::Pass);
      ok = ok && seen;
    }
    bool skipped_infinite = false;
    for (const auto& e : r.entries)
      skipped_infinite = skipped_infinite || (e.status == Status::Skipped && e.detail.rfind("SKIPPED(infinite)", 0) == 0);
    line(3, "example reproduction", ok && skipped_infinite,
         "pass=" + num(r.count(Status::Pass)) + " skipped(infinite)=" + num(r.count(Status::Skipped)) +
             " fail=" + num(r.count(Status::Fail)));
  }
  {
    const SuiteReport r = run_suite("homological", ctx);
    const bool ok = r.passed() && stat(r, "checks") >= kMinHomologicalChecks && stat(r, "pairs_with_violation") >= 1;
    line(4, "homological", ok,
         "checks=" + num(stat(r, "checks")) + " (>= " + num(kMinHomologicalChecks) + ") mismatches=" +
             num(first_failure_count(r)) + " non_s_perfect_with_violation=" + num(stat(r, "pairs_with_violation")) +
             " dims_checked_on=" + num(stat(r, "s_perfect_pairs")) +
             " minus_infinity_normalized=" + num(stat(r, "minus_infinity_normalized")));
  }
  {
    const SuiteReport r = run_suite("trivial-extension", ctx);
    const bool ok = r.passed() && stat(r, "pairs") >= kMinTrivialPairs;
    line(5, "trivial-extension", ok,
         "pairs=" + num(stat(r, "pairs")) + " (>= " + num(kMinTrivialPairs) + ") three_way=" +
             num(stat(r, "split_pairs")) + " mismatches=" + num(first_failure_count(r)));
  }
  {
    const SuiteReport r = run_suite("oracle-integrity", ctx);
    const bool ok = r.passed() && stat(r, "projectivity_completed") >= kMinProjectivityChecks &&
                    stat(r, "fraction_pairs") == pairs;
    line(6, "oracle-integrity", ok,
         "projectivity_completed=" + num(stat(r, "projectivity_completed")) + " (>= " + num(kMinProjectivityChecks) +
             ") inconclusive=" + num(stat(r, "projectivity_inconclusive")) + " sflat_three_route=" +
             num(stat(r, "sflat_three_route")) + " fraction_pairs=" + num(stat(r, "fraction_pairs")) +
             " disagreements=" + num(first_failure_count(r)));
  }
  {
    const SuiteReport r = run_suite("monotonicity", ctx);
    const bool ok = r.passed() && stat(r, "violations") == 0;
    line(7, "monotonicity", ok,
         "nested_pairs=" + num(stat(r, "nested_pairs")) + " violations=" + num(stat(r, "violations")));
  }
  {
    auto run_all = [] {
      CatalogSpec s = CatalogSpec::defaults();
      s.seed = kDeterminismSeed;
      SuiteContext c(s);
      std::vector<SuiteReport> reps;
      for (const auto& id : suite_ids()) reps.push_back(run_suite(id, c));
      return dump(run_json("verify-all", c, reps, false));
    };
    const auto t0 = std::chrono::steady_clock::now();
    const std::string a = run_all();
    const std::string b = run_all();
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    line(8, "determinism", a == b,
         "verify-all seed=" + num(kDeterminismSeed) + " twice: " + num(a.size()) + " bytes, " +
             (a == b ? "identical" : "different") + " (" + seconds(dt) + ")");
  }
  return failures == 0 ? 0 : 1;
}
