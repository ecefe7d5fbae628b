#include <cstdio>
#include <fstream>

#include <gtest/gtest.h>

#include "fcr/catalog.hpp"
#include "fcr/error.hpp"
#include "fcr/report.hpp"
#include "fcr/suites.hpp"
#include "util.hpp"

using namespace fcr;
using namespace fcr::test;

TEST(Parser, RingForms) {
  EXPECT_EQ(print_expr(parse_ring_expr("Z/12")), "Z/12");
  EXPECT_EQ(ring("Z/12")->size(), 12u);
  EXPECT_EQ(ring("triv(Z/2, Z/2)")->size(), 4u);
  EXPECT_TRUE(ring_class(ring("triv(Z/2, Z/2)")).is_local);
  EXPECT_EQ(ring("Z/12/(4)")->size(), 4u);
  EXPECT_EQ(ring("Z/2 x Z/2 x Z/3")->size(), 12u);
  EXPECT_EQ(ring("GF(2,x^2+x+1)")->size(), 4u);
}

TEST(Parser, MultSetForms) {
  const RingPtr r = ring("Z/12");
  EXPECT_EQ(labels(*r, mset(r, "S{9}").members()), (std::set<std::string>{"1", "9"}));
  EXPECT_EQ(mset(r, "S=U").size(), 4u);
  EXPECT_EQ(mset(r, "S=1").size(), 1u);
  EXPECT_THROW(mset(r, "S{0}"), ZeroAbsorbed);
}

TEST(Parser, ModuleForms) {
  const RingPtr r = ring("Z/12");
  EXPECT_EQ(mod(r, "free(2)")->size(), 144u);
  EXPECT_EQ(mod(r, "R/(4)")->size(), 4u);
  EXPECT_EQ(mod(r, "R/(2) (+) R/(3)")->size(), 6u);
  EXPECT_EQ(mod(r, "coker[[2]]")->size(), 2u);
  EXPECT_EQ(mod(r, "via(Z/12/(3), free(1))")->size(), 3u);
}

TEST(Parser, ErrorsCarryPositions) {
  try {
    parse_ring_expr("Z/12 x ");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_GE(e.position(), 5u);
  }
  EXPECT_THROW(parse_mset_expr("S{1"), ParseError);
  EXPECT_THROW(parse_module_expr("free("), ParseError);
  EXPECT_THROW(ring("Z/1"), ConstructionError);
}

TEST(Parser, CanonicalFormsRoundTrip) {
  for (const char* t : {"Z/12", "Z/2 x Z/4", "GF(2,x^2+x+1)", "triv(Z/2, Z/2)", "triv(Z/2 x Z/2, R/((0,1)))",
                        "Z/12/(4)", "(Z/2 x Z/2)/((1,0))", "mutate(Z/4, mul, 2, 2, 1)"}) {
    const std::string once = print_expr(parse_ring_expr(t));
    EXPECT_EQ(print_expr(parse_ring_expr(once)), once) << t;
  }
  for (const char* t : {"S{9}", "S=U", "S=1", "S{(0,1),(1,1)}"}) {
    const std::string once = print_expr(parse_mset_expr(t));
    EXPECT_EQ(print_expr(parse_mset_expr(once)), once) << t;
  }
  for (const char* t : {"free(2)", "R/(2) (+) R/(3)", "coker[[2,4],[0,6]]", "via(Z/12/(3), free(1))"}) {
    const std::string once = print_expr(parse_module_expr(t));
    EXPECT_EQ(print_expr(parse_module_expr(once)), once) << t;
  }
}

TEST(Parser, ProvenancesReparse) {
  const RingPtr r = ring("Z/2 x Z/4");
  SampleOptions o;
  o.budget = 80;
  for (const auto& m : sample_modules(r, o).modules) {
    if (m->is_zero()) continue;
    const ModulePtr again = mod(r, m->provenance());
    EXPECT_EQ(again->size(), m->size()) << m->provenance();
  }
  for (const auto& s : enumerate_mult_sets(r)) EXPECT_EQ(mset(r, s.literal()), s);
}

TEST(Catalog, DefaultShapeAndDeterminism) {
  CatalogSpec spec = CatalogSpec::defaults();
  const auto a = build_catalog(spec);
  const auto b = build_catalog(spec);
  ASSERT_EQ(a.size(), b.size());
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].expr, b[i].expr);
    EXPECT_TRUE(a[i].error.empty()) << a[i].expr << ": " << a[i].error;
    EXPECT_LE(a[i].ring->size(), 16u);
    pairs += a[i].msets.size();
  }
  EXPECT_EQ(a.front().expr, "Z/2");
  EXPECT_GT(pairs, 250u);
}

TEST(Catalog, RejectsZeroBudgets) {
  CatalogSpec spec = CatalogSpec::defaults();
  spec.module_budget = 0;
  EXPECT_THROW(build_catalog(spec), ConstructionError);
}

TEST(Catalog, ProductRecipes) {
  CatalogSpec spec;
  spec.max_size = 12;
  spec.include_zmod = false;
  spec.include_trivial = false;
  spec.product_depth = 2;
  std::set<std::string> exprs;
  for (const auto& e : build_catalog(spec)) exprs.insert(e.expr);
  EXPECT_TRUE(exprs.count("Z/2 x Z/2"));
  EXPECT_TRUE(exprs.count("Z/3 x Z/4"));
  EXPECT_FALSE(exprs.count("Z/4 x Z/4"));
}

namespace {

CatalogSpec small_spec(std::vector<std::string> rings) {
  CatalogSpec spec = CatalogSpec::defaults();
  spec.only_rings = std::move(rings);
  spec.module_budget = 60;
  return spec;
}

}  // namespace

TEST(Suites, EveryIdRunsOnAFewRings) {
  SuiteContext ctx(small_spec({"Z/6", "Z/12", "Z/2 x Z/4", "triv(Z/2, Z/2)"}));
  for (const auto& id : suite_ids()) {
    const SuiteReport r = run_suite(id, ctx);
    EXPECT_TRUE(r.passed()) << id;
    EXPECT_FALSE(r.entries.empty()) << id;
    EXPECT_FALSE(r.anchor.empty()) << id;
    for (const auto& e : r.entries)
      if (e.status == Status::Fail) ADD_FAILURE() << id << " " << e.assertion << " " << e.instance << " " << e.detail;
  }
  EXPECT_THROW(run_suite("no-such-suite", ctx), std::invalid_argument);
}

TEST(Suites, ShardedRunMatchesSequential) {
  SuiteContext one(small_spec({"Z/4", "Z/6", "Z/12", "Z/2 x Z/4"}), 1);
  SuiteContext many(small_spec({"Z/4", "Z/6", "Z/12", "Z/2 x Z/4"}), 3);
  for (const char* id : {"svnr-equiv", "homological", "oracle-integrity"})
    EXPECT_EQ(dump(run_json("x", one, {run_suite(id, one)}, false)),
              dump(run_json("x", many, {run_suite(id, many)}, false)))
        << id;
}

TEST(Report, EmptySuiteGivesValidReport) {
  CatalogSpec spec = CatalogSpec::defaults();
  spec.include_zmod = false;
  spec.include_trivial = false;
  spec.extras.clear();
  SuiteContext ctx(spec);
  const SuiteReport r = run_suite("svnr-equiv", ctx);
  EXPECT_TRUE(r.entries.empty());
  const Json j = Json::parse(dump(run_json("check svnr-equiv", ctx, {r}, false)));
  EXPECT_EQ(j["schema"], kReportSchema);
  EXPECT_EQ(j["summary"]["status"], "PASS");
  EXPECT_EQ(j["suites"][0]["entries"].size(), 0u);
}

TEST(Report, CJAnchorInSPerfectReportOnZ12) {
  SuiteContext ctx(small_spec({"Z/12"}));
  const std::string out = dump(run_json("check sperfect-equiv", ctx, {run_suite("sperfect-equiv", ctx)}, false));
  EXPECT_NE(out.find("\"criterion\":\"CJ\",\"anchor\":\"the Jacobson radical J(R) is S-divisible\""),
            std::string::npos);
  EXPECT_EQ(out.find("wall_seconds"), std::string::npos);
  EXPECT_NE(dump(run_json("x", ctx, {run_suite("sperfect-equiv", ctx)}, true)).find("wall_seconds"),
            std::string::npos);
}

TEST(Report, TextCarriesAnchors) {
  SuiteContext ctx(small_spec({"Z/6"}));
  const std::string text = run_text({run_suite("svnr-equiv", ctx)}, false);
  EXPECT_NE(text.find("anchor: every S-flat module flat <=> forall s in S: R/Rs von Neumann regular"),
            std::string::npos);
}

TEST(FaultInjection, MutatedTableFailsWithReplay) {
  const std::string bad = "mutate(Z/4, mul, 2, 2, 1)";
  SuiteContext ctx(small_spec({bad}));
  const SuiteReport r = run_suite("ring-invariants", ctx);
  ASSERT_FALSE(r.passed());
  const SuiteEntry* fail = nullptr;
  for (const auto& e : r.entries)
    if (e.status == Status::Fail) fail = &e;
  ASSERT_NE(fail, nullptr);
  EXPECT_NE(fail->detail.find("axiom"), std::string::npos);
  // Replay: the instance re-parses and re-fails the same assertion.
  const Instance inst = parse_instance(fail->instance);
  EXPECT_EQ(inst.ring, bad);
  SuiteContext again(small_spec({inst.ring}));
  const SuiteReport r2 = run_suite("ring-invariants", again);
  EXPECT_FALSE(r2.passed());
  EXPECT_EQ(r2.entries.front().assertion, fail->assertion);
  // The other suites report the broken ring rather than crashing.
  EXPECT_FALSE(run_suite("svnr-equiv", ctx).passed());
}

TEST(CounterexampleDb, AppendOnlyAndDeduplicated) {
  const std::string path = ::testing::TempDir() + "fcr_db_test.jsonl";
  std::remove(path.c_str());
  SuiteContext ctx(small_spec({"mutate(Z/4, mul, 2, 2, 1)", "Z/12"}));
  const std::vector<SuiteReport> reps = {run_suite("ring-invariants", ctx), run_suite("sperfect-equiv", ctx)};
  const DbSummary first = append_counterexamples(path, reps);
  EXPECT_GE(first.added, 2u);
  const DbSummary second = append_counterexamples(path, reps);
  EXPECT_EQ(second.added, 0u);
  EXPECT_EQ(second.already_present, first.added);
  std::ifstream in(path);
  std::string line;
  std::size_t lines = 0, failures = 0;
  while (std::getline(in, line)) {
    const Json j = Json::parse(line);
    ++lines;
    if (j["kind"] == "failure") {
      ++failures;
      EXPECT_NO_THROW(parse_instance(j["instance"].get<std::string>()));
    }
    EXPECT_EQ(j["key"], counterexample_key(j["suite"], j["assertion"].get<std::string>() +
                                                           (j["kind"] == "witness" ? "#witness" : ""),
                                           j["instance"]));
  }
  EXPECT_EQ(lines, first.added);
  // The broken ring fails once per suite.
  EXPECT_EQ(failures, 2u);
  std::remove(path.c_str());
}

TEST(Instances, RoundTrip) {
  const Instance i = parse_instance("ring=Z/12; mset=S{4}; module=R/(2)");
  EXPECT_EQ(i.ring, "Z/12");
  EXPECT_EQ(i.mset, "S{4}");
  EXPECT_EQ(i.module, "R/(2)");
  EXPECT_EQ(parse_instance(instance_string(i)).module, "R/(2)");
}
