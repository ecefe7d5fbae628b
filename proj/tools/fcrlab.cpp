// fcrlab: classify finite commutative rings with multiplicative sets and run the theorem suites.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fcr/classifier.hpp"
#include "fcr/error.hpp"
#include "fcr/expr.hpp"
#include "fcr/fraction.hpp"
#include "fcr/report.hpp"
#include "fcr/suites.hpp"

namespace {

using fcr::Json;

struct Args {
  std::size_t max_size = 16;
  std::size_t budget = 200;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string db;
  std::string ring;
  std::string mset;
  std::string module;
  std::string suite;
  std::string replay;
  bool timing = false;
  std::size_t jobs = 1;
};

void common(CLI::App* cmd, Args& a) {
  cmd->add_option("--max-size", a.max_size, "largest catalog ring")->check(CLI::PositiveNumber);
  cmd->add_option("--budget", a.budget, "sampled modules per ring")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", a.seed, "sampling seed");
  cmd->add_option("--format", a.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--db", a.db, std::string("counterexample database (default $") + fcr::kDbEnv + ")");
  cmd->add_option("--ring", a.ring, "ring expression");
  cmd->add_option("--mset", a.mset, "multiplicative set expression");
  cmd->add_option("--module", a.module, "module expression");
  cmd->add_flag("--timing", a.timing, "include wall times");
  cmd->add_option("--jobs", a.jobs, "worker threads")->check(CLI::PositiveNumber);
}

fcr::ClassifyOptions classify_options(const Args& a) {
  fcr::ClassifyOptions o;
  o.budget = a.budget;
  o.seed = a.seed;
  return o;
}

std::string db_path(const Args& a) {
  if (!a.db.empty()) return a.db;
  if (const char* env = std::getenv(fcr::kDbEnv)) return env;
  return {};
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

void print(const Json& doc, const std::string& text, const Args& a) {
  if (a.format == "json")
    std::cout << fcr::dump(doc);
  else
    std::cout << text;
}

Json elements(const fcr::FiniteRing& R, const std::vector<fcr::Elem>& xs) {
  Json j = Json::array();
  for (auto x : xs) j.push_back(R.label(x));
  return j;
}

Json ring_json(const fcr::RingPtr& ring) {
  const fcr::FiniteRing& R = *ring;
  const fcr::RingClass cls = fcr::ring_class(ring);
  Json j;
  j["provenance"] = R.provenance();
  j["size"] = R.size();
  j["field"] = cls.is_field;
  j["local"] = cls.is_local;
  j["semisimple"] = cls.is_semisimple;
  j["vnr"] = cls.is_vnr_ring;
  j["perfect"] = cls.is_perfect;
  j["perfect_justification"] = cls.perfect_justification;
  j["units"] = elements(R, R.units());
  j["idempotents"] = elements(R, R.idempotents());
  j["jacobson_radical"] = elements(R, fcr::jacobson_radical(ring).members());
  Json maxes = Json::array();
  for (const auto& m : fcr::maximal_ideals(ring)) maxes.push_back(m.literal());
  j["maximal_ideals"] = std::move(maxes);
  Json factors = Json::array();
  for (const auto& f : fcr::local_decomposition(R).factors) {
    Json x;
    x["idempotent"] = R.label(f.idempotent());
    x["ring"] = f.ring()->provenance();
    x["size"] = f.ring()->size();
    x["field"] = f.is_field;
    x["residue_size"] = f.residue_size;
    factors.push_back(std::move(x));
  }
  j["local_factors"] = std::move(factors);
  return j;
}

Json module_json(const fcr::ModulePtr& m) {
  Json j;
  j["provenance"] = m->provenance();
  j["size"] = m->size();
  j["minimal_generators"] = fcr::minimal_generators(*m).size();
  j["projective"] = fcr::verdict_json(fcr::is_projective(*m));
  j["flat"] = fcr::verdict_json(fcr::is_flat(*m));
  j["pd"] = fcr::to_string(fcr::pd(*m));
  j["fd"] = fcr::to_string(fcr::fd(*m));
  return j;
}

std::string route_text(const fcr::RouteSet& rs) {
  std::string out = rs.question + ": " + fcr::to_string(rs.primary().result) + (rs.agree() ? "" : "  (DISAGREEMENT)") + "\n";
  for (const auto& v : rs.routes) {
    out += "  " + v.criterion + " " + fcr::to_string(v.result) + (v.authoritative ? " [authoritative]" : "") +
           "  anchor: " + v.anchor;
    if (v.witness) out += "  witness " + v.witness->kind + " " + v.witness->value;
    if (v.pool_size) out += "  pool " + std::to_string(v.pool_size);
    out += "\n";
  }
  return out;
}

int cmd_describe(const Args& a) {
  if (a.ring.empty()) throw CLI::ValidationError("--ring", "describe needs --ring");
  const fcr::RingPtr ring = fcr::ring_from_text(a.ring);
  Json j;
  j["schema"] = fcr::kReportSchema;
  j["command"] = "describe";
  j["ring"] = ring_json(ring);
  std::string text = "ring " + ring->provenance() + ", " + std::to_string(ring->size()) + " elements\n";
  for (const auto& [k, v] : j["ring"].items())
    if (k != "provenance" && k != "size") text += "  " + k + ": " + v.dump() + "\n";
  if (!a.mset.empty()) {
    const fcr::MultSet s = fcr::mset_from_text(a.mset, ring);
    j["mset"] = {{"literal", s.literal()}, {"members", elements(*ring, s.members())}, {"within_units", s.within_units()}};
    text += "mset " + s.literal() + ": " + j["mset"]["members"].dump() + "\n";
  } else {
    const auto all = fcr::enumerate_mult_sets(ring);
    Json ms = Json::array();
    for (const auto& s : all) ms.push_back(s.literal());
    j["mult_sets"] = std::move(ms);
    text += "  mult_sets: " + std::to_string(all.size()) + "\n";
  }
  if (!a.module.empty()) {
    j["module"] = module_json(fcr::module_from_text(a.module, ring));
    text += "module: " + j["module"].dump() + "\n";
  }
  print(j, text, a);
  return 0;
}

int cmd_classify(const Args& a) {
  if (a.ring.empty() || a.mset.empty()) throw CLI::ValidationError("--ring/--mset", "classify needs --ring and --mset");
  const fcr::RingPtr ring = fcr::ring_from_text(a.ring);
  const fcr::MultSet s = fcr::mset_from_text(a.mset, ring);
  fcr::Classifier c(classify_options(a));
  fcr::RingAnalysis& an = c.analysis(ring);
  const fcr::RouteSet v = fcr::s_weakly_vnr_routes(an, s);
  const fcr::RouteSet p = fcr::s_perfect_routes(an, s);
  const fcr::StructureReport st = fcr::structure_report(s);
  Json j;
  j["schema"] = fcr::kReportSchema;
  j["command"] = "classify";
  j["instance"] = "ring=" + ring->provenance() + "; mset=" + s.literal();
  j["s_weakly_vnr"] = fcr::route_set_json(v);
  j["s_perfect"] = fcr::route_set_json(p);
  Json factors = Json::array();
  for (const auto& f : st.factors)
    factors.push_back({{"index", f.index},
                       {"idempotent", ring->label(f.idempotent)},
                       {"ring", f.ring},
                       {"field", f.is_field},
                       {"status", fcr::to_string(f.status)},
                       {"admissible", f.admissible}});
  j["structure"] = {{"factors", std::move(factors)}, {"classification", st.classification}};
  const bool agree = v.agree() && p.agree();
  j["agree"] = agree;
  std::string text = j["instance"].get<std::string>() + "\n" + route_text(v) + route_text(p) +
                     "structure: " + st.classification + "\n";
  print(j, text, a);
  return agree ? 0 : 1;
}

int cmd_localize(const Args& a) {
  if (a.ring.empty() || a.mset.empty()) throw CLI::ValidationError("--ring/--mset", "localize needs --ring and --mset");
  const fcr::RingPtr ring = fcr::ring_from_text(a.ring);
  const fcr::MultSet s = fcr::mset_from_text(a.mset, ring);
  const fcr::LocalizationResult loc = fcr::localize_ring(s);
  const fcr::LocalizationCheck chk = fcr::compare_localizations(s);
  Json j;
  j["schema"] = fcr::kReportSchema;
  j["command"] = "localize";
  j["instance"] = "ring=" + ring->provenance() + "; mset=" + s.literal();
  j["localized_ring"] = ring_json(loc.localized_ring);
  j["surviving_idempotent"] = ring->label(loc.surviving_idempotent);
  j["survives"] = loc.survives;
  Json pi = Json::object();
  for (fcr::Elem x = 0; x < ring->size(); ++x) pi[ring->label(x)] = loc.localized_ring->label(loc.pi(x));
  j["pi"] = std::move(pi);
  const bool ring_ok = chk.ok();
  j["fraction_check"] = {{"sizes_match", chk.sizes_match},
                         {"isomorphic", chk.isomorphic ? Json(*chk.isomorphic) : Json("inconclusive")},
                         {"kernels_match", chk.kernels_match}};
  std::string text = j["instance"].get<std::string>() + "\nR_S = e R with e = " + ring->label(loc.surviving_idempotent) +
                     ", " + std::to_string(loc.localized_ring->size()) + " elements; fraction check " +
                     bool_text(ring_ok) + "\n";
  bool module_ok = true;
  if (!a.module.empty()) {
    const fcr::ModulePtr m = fcr::module_from_text(a.module, ring);
    const fcr::ModuleLocalization ml = fcr::localize_module(m, loc);
    const fcr::LocalizationCheck mc = fcr::compare_module_localizations(m, s);
    module_ok = mc.ok();
    j["module"] = module_json(m);
    j["localized_module"] = module_json(ml.over_ring);
    j["module_fraction_check"] = {{"sizes_match", mc.sizes_match},
                                  {"isomorphic", mc.isomorphic ? Json(*mc.isomorphic) : Json("inconclusive")},
                                  {"kernels_match", mc.kernels_match}};
    text += "M_S: " + std::to_string(ml.over_ring->size()) + " elements, projective " +
            fcr::to_string(fcr::is_projective(*ml.over_ring).result) + "; fraction check " + bool_text(module_ok) + "\n";
  }
  print(j, text, a);
  return ring_ok && module_ok ? 0 : 1;
}

int run_suites(const Args& a, const std::string& command, const std::vector<std::string>& ids, bool empty_catalog) {
  fcr::CatalogSpec spec = fcr::CatalogSpec::defaults();
  spec.max_size = a.max_size;
  spec.module_budget = a.budget;
  spec.seed = a.seed;
  if (empty_catalog) {
    spec.include_zmod = false;
    spec.include_trivial = false;
    spec.extras.clear();
  }
  if (!a.ring.empty()) {
    fcr::parse_ring_expr(a.ring);
    spec.only_rings = {a.ring};
  }
  if (!a.mset.empty()) {
    fcr::parse_mset_expr(a.mset);
    spec.only_mset = a.mset;
  }
  fcr::SuiteContext ctx(spec, a.jobs);
  std::vector<fcr::SuiteReport> reports;
  for (const auto& id : ids) reports.push_back(fcr::run_suite(id, ctx));
  print(fcr::run_json(command, ctx, reports, a.timing), fcr::run_text(reports, a.timing), a);
  if (const std::string path = db_path(a); !path.empty()) {
    const fcr::DbSummary sum = fcr::append_counterexamples(path, reports);
    std::cerr << "counterexample database " << path << ": " << sum.added << " added, " << sum.already_present
              << " already present\n";
  }
  for (const auto& r : reports)
    if (!r.passed()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fcrlab: finite commutative rings with multiplicative sets"};
  app.require_subcommand(1);
  Args a;
  auto* describe = app.add_subcommand("describe", "ring invariants, mult sets and optional module facts");
  auto* classify = app.add_subcommand("classify", "S-weakly VNR and S-perfect routes for one pair");
  auto* localize = app.add_subcommand("localize", "localization of the ring and an optional module");
  auto* check = app.add_subcommand("check", "run one theorem suite over the catalog");
  auto* verify = app.add_subcommand("verify-all", "run every suite over the catalog");
  auto* repro = app.add_subcommand("repro-examples", "finite instances of the separating examples");
  for (auto* c : {describe, classify, localize, check, verify, repro}) common(c, a);
  check->add_option("suite", a.suite, "suite id")->required()->check(CLI::IsMember(fcr::suite_ids()));
  check->add_option("--replay", a.replay, "instance string from a report or the database");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*describe) return cmd_describe(a);
    if (*classify) return cmd_classify(a);
    if (*localize) return cmd_localize(a);
    if (*check && !a.replay.empty()) {
      const fcr::Instance inst = fcr::parse_instance(a.replay);
      a.ring = inst.ring;
      a.mset = inst.mset;
    }
    if (*check) return run_suites(a, "check " + a.suite, {a.suite}, false);
    if (*verify) return run_suites(a, "verify-all", fcr::suite_ids(), false);
    if (*repro) return run_suites(a, "repro-examples", {"paper-examples"}, true);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const fcr::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const fcr::ZeroAbsorbed& e) {
    std::cerr << "invalid multiplicative set: " << e.what() << "\n";
    return 2;
  } catch (const fcr::ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const fcr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
