#include "fcr/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <thread>

#include "fcr/constructions.hpp"
#include "fcr/error.hpp"
#include "fcr/fraction.hpp"
#include "fcr/homological.hpp"

namespace fcr {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Skipped:
      return "SKIPPED";
  }
  return "FAIL";
}

std::size_t SuiteReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [s](const SuiteEntry& e) { return e.status == s; }));
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "svnr-equiv",   "sperfect-equiv", "sperfect-almost",   "homological",   "trivial-extension",
      "product-theorem", "hom-transfer", "ring-invariants", "localization",  "monotonicity",
      "implication-chain", "sflat-closure", "oracle-integrity", "paper-examples"};
  return ids;
}

bool is_suite(const std::string& id) {
  const auto& ids = suite_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

SuiteContext::SuiteContext(CatalogSpec spec, std::size_t jobs)
    : spec_(std::move(spec)), catalog_(build_catalog(spec_)), jobs_(std::max<std::size_t>(1, jobs)) {
  ClassifyOptions o;
  o.budget = spec_.module_budget;
  o.seed = spec_.seed;
  for (std::size_t i = 0; i < catalog_.size(); ++i) classifiers_.push_back(std::make_unique<Classifier>(o));
  // One more for work that is not tied to a catalog ring.
  classifiers_.push_back(std::make_unique<Classifier>(o));
}

namespace {

struct RingResult {
  std::vector<SuiteEntry> entries;
  std::map<std::string, std::uint64_t> stats;
  /// First instance with a given property, in catalog order after merging.
  std::map<std::string, std::string> firsts;
};

using PerRing = std::function<void(const CatalogEntry&, Classifier&, RingResult&)>;

std::string instance(const CatalogEntry& e, const MultSet* s = nullptr, const FiniteModule* m = nullptr) {
  std::string out = "ring=" + e.expr;
  if (s) out += "; mset=" + s->literal();
  if (m) out += "; module=" + m->provenance();
  return out;
}

SuiteEntry entry(std::string assertion, std::string anchor, std::string inst, bool ok, std::string detail = {}) {
  SuiteEntry e;
  e.assertion = std::move(assertion);
  e.anchor = std::move(anchor);
  e.instance = std::move(inst);
  e.status = ok ? Status::Pass : Status::Fail;
  e.detail = std::move(detail);
  return e;
}

/// A false verdict carries a witness; an authoritative verdict is decided.
std::string verdict_problems(const RouteSet& rs) {
  std::string out;
  for (const auto& v : rs.routes) {
    if (v.fails() && !v.witness) out += v.criterion + " false without witness; ";
    if (v.authoritative && !v.decided()) out += v.criterion + " authoritative but inconclusive; ";
  }
  return out;
}

std::string route_summary(const RouteSet& rs) {
  std::string out;
  for (const auto& v : rs.routes) {
    if (!out.empty()) out += " ";
    out += v.criterion + "=" + to_string(v.result);
  }
  return out;
}

void record_failure(RingResult& r, const std::string& assertion, const std::string& anchor, const std::string& inst,
                    const std::exception& e) {
  r.entries.push_back(entry(assertion, anchor, inst, false, std::string("error: ") + e.what()));
}

void note_first(RingResult& r, const std::string& key, const std::string& value) { r.firsts.emplace(key, value); }

HomologicalDim normalized(HomologicalDim d) { return d == HomologicalDim::MinusInfinity ? HomologicalDim::Zero : d; }

bool restricted(const SuiteContext& ctx) { return !ctx.spec().only_rings.empty() || ctx.spec().only_mset; }

SuiteEntry threshold(const std::string& assertion, const std::string& anchor, std::uint64_t have, std::uint64_t need,
                     const SuiteContext& ctx) {
  SuiteEntry e = entry(assertion, anchor, "", have >= need,
                       std::to_string(have) + " found, " + std::to_string(need) + " required");
  if (restricted(ctx) && have < need) {
    e.status = Status::Skipped;
    e.detail += "; catalog restricted";
  }
  return e;
}

void run_per_ring(SuiteContext& ctx, SuiteReport& rep, const PerRing& fn) {
  const auto& cat = ctx.catalog();
  std::vector<RingResult> results(cat.size());
  auto work = [&](std::size_t i) {
    const CatalogEntry& e = cat[i];
    if (!e.error.empty() || !e.ring) {
      results[i].entries.push_back(
          entry("catalog entry builds", "every catalog expression evaluates", "ring=" + e.expr, false, e.error));
      return;
    }
    try {
      fn(e, ctx.classifier(i), results[i]);
    } catch (const std::exception& ex) {
      record_failure(results[i], "ring-level run", rep.anchor, "ring=" + e.expr, ex);
    }
  };
  if (ctx.jobs() <= 1) {
    for (std::size_t i = 0; i < cat.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(ctx.jobs(), cat.size()); ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cat.size(); i = next++) work(i);
      });
    for (auto& th : pool) th.join();
  }
  std::map<std::string, std::string> firsts;
  for (auto& r : results) {
    for (auto& e : r.entries) rep.entries.push_back(std::move(e));
    for (const auto& [k, v] : r.stats) rep.stats[k] += v;
    for (const auto& [k, v] : r.firsts) firsts.emplace(k, v);
  }
  // Firsts travel as pseudo-entries until the caller takes them.
  for (const auto& [k, v] : firsts) {
    SuiteEntry e;
    e.assertion = "first:" + k;
    e.instance = v;
    e.status = Status::Pass;
    rep.entries.push_back(std::move(e));
  }
}

/// Pops the "first:" pseudo-entries produced by run_per_ring.
std::map<std::string, std::string> take_firsts(SuiteReport& rep) {
  std::map<std::string, std::string> out;
  auto it = std::remove_if(rep.entries.begin(), rep.entries.end(), [&](const SuiteEntry& e) {
    if (e.assertion.rfind("first:", 0) != 0) return false;
    out.emplace(e.assertion.substr(6), e.instance);
    return true;
  });
  rep.entries.erase(it, rep.entries.end());
  return out;
}

// ---- suites ----

void suite_svnr(SuiteContext& ctx, SuiteReport& rep) {
  rep.anchor = "every S-flat module flat <=> forall s in S: R/Rs von Neumann regular";
  run_per_ring(ctx, rep, [&](const CatalogEntry& e, Classifier& c, RingResult& r) {
    RingAnalysis& a = c.analysis(e.ring);
    for (const auto& s : e.msets) {
      const std::string inst = instance(e, &s);
      try {
        RouteSet rs = s_weakly_vnr_routes(a, s);
        const std::string problems = verdict_problems(rs);
        const bool ok = rs.agree() && problems.empty();
        SuiteEntry en = entry("five routes agree", rep.anchor, inst, ok,
                              route_summary(rs) + (ok ? "" : "; dissent or invariant: " + problems));
        en.verdicts = rs.routes;
        r.entries.push_back(std::move(en));
        ++r.stats["pairs"];
        ++r.stats[rs.primary().holds() ? "true" : "false"];
        r.stats["sampled_modules"] += rs.routes.back().pool_size;
      } catch (const std::exception& ex) {
        record_failure(r, "five routes agree", rep.anchor, inst, ex);
      }
    }
  });
}

void suite_sperfect(SuiteContext& ctx, SuiteReport& rep) {
  rep.anchor = "every S-flat module projective <=> R perfect and J(R) S-divisible";
  run_per_ring(ctx, rep, [&](const CatalogEntry& e, Classifier& c, RingResult& r) {
    RingAnalysis& a = c.analysis(e.ring);
    for (const auto& s : e.msets) {
      const std::string inst = instance(e, &s);
      try {
        RouteSet rs = s_perfect_routes(a, s);
        const std::string problems = verdict_problems(rs);
        const bool ok = rs.agree() && problems.empty();
        SuiteEntry en = entry("five routes agree", rep.anchor, inst, ok,
                              route_summary(rs) + (ok ? "" : "; dissent or invariant: " + problems));
        en.verdicts = rs.routes;
        r.entries.push_back(std::move(en));
        ++r.stats["pairs"];
        const Verdict& p = rs.primary();
        if (p.holds() && !s.within_units()) ++r.stats["true_outside_units"];
        if (p.fails() && p.witness) ++r.stats["false_with_witness"];
        if (p.holds()) ++r.stats["true"];
        if (p.fails()) ++r.stats["false"];
      } catch (const std::exception& ex) {
        record_failure(r, "five routes agree", rep.anchor, inst, ex);
      }
    }
  });
  take_firsts(rep);
  rep.entries.push_back(threshold("true instances with S not inside U(R)", rep.anchor,
                                  rep.stats["true_outside_units"], 3, ctx));
  rep.entries.push_back(
      threshold("false instances carrying witnesses", rep.anchor, rep.stats["false_with_witness"], 3, ctx));
}

void suite_almost(SuiteContext& ctx, SuiteReport& rep) {
  rep.anchor = "S-perfect <=> S-weakly VNR and S-almost perfect and R_S projective";
  run_per_ring(ctx, rep, [&](const CatalogEntry& e, Classifier& c, RingResult& r) {
    RingAnalysis& a = c.analysis(e.ring);
    const FiniteRing& R = *e.ring;
    for (const auto& s : e.msets) {
      const std::string inst = instance(e, &s);
      try {
        const Verdict p = s_perfect_routes(a, s).primary();
        const Verdict v = s_weakly_vnr_routes(a, s).primary();
        const Verdict ap = is_s_almost_perfect(s);
        const ModuleLocalization rs = localize_module(free_module(e.ring, 1), a.localization(s));
        const bool rs_projective = is_projective(*rs.over_ring).holds();
        const bool form = p.holds() == (v.holds() && ap.holds() && rs_projective);
        const bool collapse = p.holds() == v.holds();
        bool regular = true;
        for (Elem t : s.members()) regular = regular && R.is_regular(t);
        const bool reg_clause = !regular || v.holds() == s.within_units();
        std::string detail = std::string("S-perfect ") + to_string(p.result) + ", S-weakly VNR " +
                             to_string(v.result) + ", almost perfect " + to_string(ap.result) +
                             ", R_S projective " + (rs_projective ? "true" : "false");
        if (regular) detail += ", S regular: S in U(R) " + std::string(s.within_units() ? "true" : "false");
        SuiteEntry en = entry("almost-perfect form, collapse and regular-set clause", rep.anchor, inst,
                              form && collapse && reg_clause && ap.holds(), detail);
        en.verdicts = {p, v, ap};
        r.entries.push_back(std::move(en));
        ++r.stats["pairs"];
        if (regular) ++r.stats["regular_sets"];
      } catch (const std::exception& ex) {
        record_failure(r, "almost-perfect form", rep.anchor, inst, ex);
      }
    }
  });
}

void suite_homological(SuiteContext& ctx, SuiteReport& rep) {
  rep.anchor = "S-perfect <=> pd_R(M) = fd_R(M_S) for all M";
  run_per_ring(ctx, rep, [&](const CatalogEntry& e, Classifier& c, RingResult& r) {
    RingAnalysis& a = c.analysis(e.ring);
    const SamplePool& pool = a.pool();
    for (const auto& s : e.msets) {
      const std::string inst = instance(e, &s);
      try {
        const bool sp = s_perfect_routes(a, s).primary().holds();
        const auto& mods = a.localized_modules(s);
        std::size_t mismatches = 0;
        std::string first_bad;
        for (std::size_t i = 0; i < pool.modules.size(); ++i) {
          const HomologicalDim raw_l = pd(*pool.modules[i]), raw_r = fd(*mods[i].over_ring);
          const HomologicalDim lhs = normalized(raw_l), rhs = normalized(raw_r);
          // Zero module against a projective one: equal once -inf is read as 0; counted, not hidden.
          if (raw_l != raw_r && lhs == rhs) ++r.stats["minus_infinity_normalized"];
          if (lhs != rhs) {
            ++mismatches;
            if (first_bad.empty())
              first_bad = pool.modules[i]->provenance() + " (pd " + to_string(lhs) + ", fd(M_S) " + to_string(rhs) + ")";
          }
        }
        if (sp) {
          r.stats["checks"] += pool.modules.size();
          ++r.stats["s_perfect_pairs"];
          const LocalizationResult& loc = a.localization(s);
          const HomologicalDim g = gldim(e.ring), w = wdim(e.ring);
          const HomologicalDim gs = gldim(loc.localized_ring), ws = wdim(loc.localized_ring);
          const bool dims = g == w && w == gs && gs == ws;
          r.entries.push_back(entry("pd = fd(M_S) and gldim = wdim = gldim(R_S) = wdim(R_S)", rep.anchor, inst,
                                    mismatches == 0 && dims,
                                    std::to_string(pool.modules.size()) + " modules, " + std::to_string(mismatches) +
                                        " mismatches" + (first_bad.empty() ? "" : ", first " + first_bad) +
                                        "; dims " + to_string(g) + " " + to_string(w) + " " + to_string(gs) + " " +
                                        to_string(ws)));
        } else {
          ++r.stats["other_pairs"];
          if (mismatches) {
            ++r.stats["pairs_with_violation"];
            const std::size_t at = first_bad.find(" (");
            note_first(r, "violation", inst + "; module=" + first_bad.substr(0, at));
          }
          r.entries.push_back(entry("sampled violation search on a non-S-perfect pair", rep.anchor, inst, true,
                                    mismatches ? "violation " + first_bad : "no sampled violation"));
        }
      } catch (const std::exception& ex) {
        record_failure(r, "pd = fd(M_S)", rep.anchor, inst, ex);
      }
    }
  });
  const auto firsts = take_firsts(rep);
  rep.entries.push_back(threshold("(M, pair) checks on S-perfect pairs", rep.anchor, rep.stats["checks"], 500, ctx));
  SuiteEntry v = threshold("a non-S-perfect pair exhibits a sampled violation", rep.anchor,
                           rep.stats["pairs_with_violation"], 1, ctx);
  if (auto it = firsts.find("violation"); it != firsts.end()) v.instance = it->second;
  rep.entries.push_back(std::move(v));
}

void suite_trivial(SuiteContext& ctx, SuiteReport& rep) {
  rep.anchor = "R x| M S-perfect <=> R S1-perfect and M S1-divisible; S' x| N form <=> S' x| 0 form";
  run_per_ring(ctx, rep, [&](const CatalogEntry& e, Classifier& c, RingResult& r) {
    if (!e.ring->trivial_tag()) return;
    for (const auto& s : e.msets) {
      const std::string inst = instance(e, &s);
      try {
        const Verdict v = check_trivial_extension_theorem(c, s);
        SuiteEntry en = entry("biconditional and three-way form", rep.anchor, inst, v.holds(), v.note);
        en.verdicts = {v};
        r.entries.push_back(std::move(en));
        ++r.stats["pairs"];
        if (split_trivial_extension_mult_set(s)) ++r.stats["split_pairs"];
      } catch (const std::exception& ex) {
        record_failure(r, "biconditional and three-way form", rep.anchor, inst, ex);
      }
    }
  });
  rep.entries.push_back(threshold("trivial-extension pairs", rep.anchor, rep.stats["pairs"], 50, ctx));
}

void suite_product(SuiteContext& ctx, SuiteReport& rep) {
  rep.anchor = "product S-perfect <=> each factor: 0 in e_iS and R_i semisimple, or R_i e_iS-perfect";
  run_per_ring(ctx, rep, [&](const CatalogEntry& e, Classifier& c, RingResult& r) {
    // Tagged products directly; every other ring through its local decomposition.
    std::optional<Reassembly> re;
    if (!e.ring->product_tag()) re = reassemble(e.ring);
    for (const auto& s : e.msets) {
      const std::string inst = instance(e, &s);
      try {
        const MultSet target = re ? pushforward_mult_set(re->iso, s) : s;
        const Verdict v = check_product_theorem(c, target);
        SuiteEntry en = entry(re ? "factorwise clause on the local decomposition" : "factorwise clause", rep.anchor,
                              inst, v.holds(), v.note);
        en.verdicts = {v};
        r.entries.push_back(std::move(en));
        ++r.stats[re ? "decomposed_pairs" : "tagged_pairs"];
      } catch (const std::exception& ex) {
        record_failure(r, "factorwise clause", rep.anchor, inst, ex);
      }
    }
  });
}

RingHom diagonal(const RingPtr& ring, const RingPtr& square) {
  std::vector<Elem> image(ring->size());
  for (Elem x = 0; x < ring->size(); ++x) {
    const Elem parts[] = {x, x};
    image[x] = square->product_tag()->compose(parts);
  }
  return RingHom::create(ring, square, std::move(image));
}

void suite_hom(SuiteContext& ctx, SuiteReport& rep) {
  rep.anchor = "R' f.g. flat over R and R' S-perfect => R S-perfect; M_S = M_{f(S)} as R-modules";
  run_per_ring(ctx, rep, [&](const CatalogEntry& e, Classifier& c, RingResult& r) {
    const RingPtr& R = e.ring;
    auto run = [&](const std::string& what, const RingHom& f, const MultSet& s, std::size_t lemma) {
      const std::string inst = instance(e, &s) + "; map=" + what;
      try {
        const HomTransferReport h = check_hom_transfer(c, f, s, lemma);
        std::string detail = h.verdict.note;
        if (!h.precondition_met) detail = "precondition unmet: " + h.precondition_detail + "; " + detail;
        SuiteEntry en = entry(what, rep.anchor, inst, h.verdict.holds(), detail);
        en.verdicts = {h.verdict};
        r.entries.push_back(std::move(en));
        ++r.stats[h.precondition_met ? "transfer_checked" : "precondition_unmet"];
        r.stats["isomorphisms"] += h.lemma_checks;
      } catch (const std::exception& ex) {
        record_failure(r, what, rep.anchor, inst, ex);
      }
    };
    if (!e.msets.empty()) {
      run("identity", RingHom::identity(R), e.msets.front(), 3);
      run("identity", RingHom::identity(R), e.msets.back(), 3);
    }
    if (R->size() <= 8) {
      const RingPtr rings[] = {R, R};
      const RingPtr square = direct_product(rings).ring;
      const RingHom f = diagonal(R, square);
      for (const auto& s : e.msets) run("diagonal R -> R x R", f, s, 3);
    }
    if (R->size() <= 12) {
      // Canonical surjections onto R/Rs for the non-unit, non-zero generators of single ideals.
      for (Elem x = 0; x < R->size(); ++x) {
        if (x == R->zero() || R->is_unit(x)) continue;
        const QuotientRing q = quotient_ring(principal_ideal(R, x));
        for (const auto& s : e.msets) run("surjection onto R/(" + R->label(x) + ")", q.map, s, 2);
        break;
      }
    }
  });
}

void suite_ring_invariants(SuiteContext& ctx, SuiteReport& rep) {
  rep.anchor = "R = prod of local corners; J(R) = nilradical = intersection of maximal ideals; vnr = unit * idempotent";
  run_per_ring(ctx, rep, [&](const CatalogEntry& e, Classifier&, RingResult& r) {
    const RingPtr& ring = e.ring;
    const FiniteRing& R = *ring;
    const std::string inst = instance(e);
    std::vector<std::string> bad;
    if (auto v = ring_axiom_violation(R.tables())) bad.push_back("axiom: " + *v);
    if (bad.empty()) {
      reassemble(ring);
      const Ideal j = jacobson_radical(ring);
      if (!(j == nilradical(ring))) bad.push_back("J != nilradical");
      const auto maxes = maximal_ideals(ring);
      const Elem one[] = {R.one()};
      Ideal meet = ideal_generated(ring, one);
      for (const auto& m : maxes) meet = intersect(meet, m);
      if (!(meet == j)) bad.push_back("J != intersection of maximal ideals");
      const auto& dec = local_decomposition(R);
      Elem sum = R.zero();
      bool all_fields = true;
      for (std::size_t i = 0; i < dec.factors.size(); ++i) {
        const Elem ei = dec.factors[i].idempotent();
        sum = R.add(sum, ei);
        for (std::size_t k = i + 1; k < dec.factors.size(); ++k)
          if (R.mul(ei, dec.factors[k].idempotent()) != R.zero()) bad.push_back("idempotents not orthogonal");
        if (maximal_ideals(dec.factors[i].ring()).size() != 1) bad.push_back("factor not local");
        all_fields = all_fields && dec.factors[i].is_field;
      }
      if (sum != R.one()) bad.push_back("idempotents do not sum to 1");
      for (Elem x = 0; x < R.size(); ++x) {
        if (R.is_vnr(x) != vnr_factorization(R, x).has_value()) bad.push_back("vnr != unit * idempotent at " + R.label(x));
        if (R.is_unit(x) != R.inverse(x).has_value()) bad.push_back("unit flag at " + R.label(x));
        if (R.is_unit(x) && R.is_nilpotent(x)) bad.push_back("nilpotent unit " + R.label(x));
      }
      const RingClass cls = ring_class(ring);
      if (cls.is_semisimple != cls.is_vnr_ring || cls.is_semisimple != all_fields)
        bad.push_back("semisimple, VNR and all-fields disagree");
      for (std::size_t i = 0; i < e.msets.size(); ++i) {
        const MultSet& s = e.msets[i];
        if (!s.contains(R.one()) || s.contains(R.zero())) bad.push_back("invalid mult set " + s.literal());
        if (!(mult_closure(ring, s.generators()) == s)) bad.push_back("generators of " + s.literal() + " do not close to it");
        const MultSet* prev = i ? &e.msets[i - 1] : nullptr;
        if (prev && !(prev->size() < s.size() || (prev->size() == s.size() && prev->members() < s.members())))
          bad.push_back("mult sets out of order");
      }
      r.stats["mult_sets"] += e.msets.size();
    }
    std::string detail;
    for (const auto& b : bad) detail += (detail.empty() ? "" : "; ") + b;
    r.entries.push_back(entry("ring invariants", rep.anchor, inst, bad.empty(), detail));
    ++r.stats["rings"];
  });
}

void suite_localization(SuiteContext& ctx, SuiteReport& rep) {
  rep.anchor = "R_S = eR with e the sum of the idempotents of factors on which S is invertible";
  run_per_ring(ctx, rep, [&](const CatalogEntry& e, Classifier& c, RingResult& r) {
    RingAnalysis& a = c.analysis(e.ring);
    const FiniteRing& R = *e.ring;
    const SamplePool& pool = a.pool();
    for (const auto& s : e.msets) {
      const std::string inst = instance(e, &s);
      try {
        std::vector<std::string> bad;
        const LocalizationCheck chk = compare_localizations(s);
        if (!chk.ok()) bad.push_back("fraction ring differs");
        const LocalizationResult& loc = a.localization(s);
        if (!loc.pi.surjective()) bad.push_back("R -> R_S not onto");
        if (loc.localized_ring->is_zero_ring()) bad.push_back("R_S is zero");
        for (Elem x = 0; x < R.size(); ++x) {
          bool torsion = false;
          for (Elem t : s.members()) torsion = torsion || R.mul(t, x) == R.zero();
          if (torsion != (loc.pi(x) == loc.localized_ring->zero())) bad.push_back("kernel != S-torsion at " + R.label(x));
        }
        if (s.within_units() && loc.localized_ring->size() != R.size()) bad.push_back("S in U(R) but R_S != R");
        std::size_t modules = 0;
        for (const auto& m : pool.modules) {
          if (modules >= 8) break;
          if (m->size() > 64) continue;
          ++modules;
          const LocalizationCheck mc = compare_module_localizations(m, s);
          if (!mc.ok()) bad.push_back("module fractions differ for " + m->provenance());
          if (!mc.isomorphic) ++r.stats["module_iso_inconclusive"];
        }
        r.stats["module_checks"] += modules;
        ++r.stats["pairs"];
        if (!chk.isomorphic) ++r.stats["ring_iso_inconclusive"];
        std::string detail = "|R_S| = " + std::to_string(loc.localized_ring->size()) + ", e = " +
                             R.label(loc.surviving_idempotent) + ", " + std::to_string(modules) + " modules";
        for (const auto& b : bad) detail += "; " + b;
        r.entries.push_back(entry("fractions = idempotent model", rep.anchor, inst, bad.empty(), detail));
      } catch (const std::exception& ex) {
        record_failure(r, "fractions = idempotent model", rep.anchor, inst, ex);
      }
    }
  });
}

void suite_monotonicity(SuiteContext& ctx, SuiteReport& rep) {
  rep.anchor = "S' in S and R S-perfect => R S'-perfect";
  run_per_ring(ctx, rep, [&](const CatalogEntry& e, Classifier& c, RingResult& r) {
    RingAnalysis& a = c.analysis(e.ring);
    std::vector<int> d;
    for (const auto& s : e.msets) d.push_back(s_perfect_routes(a, s).primary().holds() ? 1 : 0);
    std::size_t nested = 0, violations = 0;
    for (std::size_t i = 0; i < e.msets.size(); ++i)
      for (std::size_t j = 0; j < e.msets.size(); ++j) {
        if (i == j || !e.msets[j].subset_of(e.msets[i])) continue;
        ++nested;
        if (d[i] && !d[j]) {
          ++violations;
          r.entries.push_back(entry("nested pair", rep.anchor, instance(e, &e.msets[j]), false,
                                    "S-perfect for " + e.msets[i].literal() + " but not for the subset"));
        }
      }
    r.stats["nested_pairs"] += nested;
    r.stats["violations"] += violations;
    r.entries.push_back(entry("no violation among nested pairs", rep.anchor, instance(e), violations == 0,
                              std::to_string(nested) + " nested pairs"));
  });
}

void suite_chain(SuiteContext& ctx, SuiteReport& rep) {
  rep.anchor = "semisimple => S-perfect => perfect => R_S perfect";
  run_per_ring(ctx, rep, [&](const CatalogEntry& e, Classifier& c, RingResult& r) {
    RingAnalysis& a = c.analysis(e.ring);
    const RingClass& cls = a.ring_class();
    for (const auto& s : e.msets) {
      const std::string inst = instance(e, &s);
      try {
        const bool sp = s_perfect_routes(a, s).primary().holds();
        const bool rs_perfect = ring_class(a.localization(s).localized_ring).is_perfect;
        const bool ok = (!cls.is_semisimple || sp) && (!sp || cls.is_perfect) && (!cls.is_perfect || rs_perfect);
        r.entries.push_back(entry("implication chain", rep.anchor, inst, ok,
                                  std::string("semisimple ") + (cls.is_semisimple ? "true" : "false") +
                                      ", S-perfect " + (sp ? "true" : "false") + ", perfect " +
                                      (cls.is_perfect ? "true" : "false") + ", R_S perfect " +
                                      (rs_perfect ? "true" : "false")));
        if (sp && !cls.is_semisimple) note_first(r, "s-perfect-not-semisimple", inst);
        if (cls.is_perfect && !sp) note_first(r, "perfect-not-s-perfect", inst);
        ++r.stats["pairs"];
      } catch (const std::exception& ex) {
        record_failure(r, "implication chain", rep.anchor, inst, ex);
      }
    }
  });
  const auto firsts = take_firsts(rep);
  auto sep = [&](const std::string& key, const std::string& what) {
    auto it = firsts.find(key);
    SuiteEntry en = entry(what, rep.anchor, it == firsts.end() ? "" : it->second, it != firsts.end(),
                          it == firsts.end() ? "no separating pair in the catalog" : "");
    if (it == firsts.end() && restricted(ctx)) en.status = Status::Skipped;
    rep.entries.push_back(std::move(en));
  };
  sep("s-perfect-not-semisimple", "a pair separates S-perfect from semisimple");
  sep("perfect-not-s-perfect", "a pair separates perfect from S-perfect");
  SuiteEntry last = entry("a pair separates R_S perfect from perfect", rep.anchor, "", true,
                          "inseparable here: every finite ring and every localization of one is perfect");
  last.status = Status::Skipped;
  rep.entries.push_back(std::move(last));
}

void suite_sflat_closure(SuiteContext& ctx, SuiteReport& rep) {
  rep.anchor = "flat => S-flat; S-torsion => S-flat; S-projective = S-flat; S-flat closed under finite sums";
  run_per_ring(ctx, rep, [&](const CatalogEntry& e, Classifier& c, RingResult& r) {
    RingAnalysis& a = c.analysis(e.ring);
    const SamplePool& pool = a.pool();
    const std::size_t sum_base = std::min<std::size_t>(pool.modules.size(), 6);
    for (const auto& s : e.msets) {
      const std::string inst = instance(e, &s);
      try {
        const auto& facts = a.localized_facts(s);
        std::vector<std::string> bad;
        for (std::size_t i = 0; i < pool.modules.size(); ++i) {
          const auto& f = facts[i];
          const std::string& name = pool.modules[i]->provenance();
          if (a.flat(i) && !f.s_flat) bad.push_back("flat but not S-flat: " + name);
          if (f.torsion && !f.s_flat) bad.push_back("S-torsion but not S-flat: " + name);
          if (f.s_flat != f.s_flat_localized) bad.push_back("M_S flat over R != over R_S: " + name);
        }
        for (std::size_t i = 0; i < sum_base; ++i) {
          for (std::size_t j = i; j < sum_base; ++j) {
            const auto& mi = pool.modules[i];
            const auto& mj = pool.modules[j];
            if (mi->size() * mj->size() > 256) continue;
            const ModulePtr sum = direct_sum(mi, mj).module;
            const bool flat_sum = is_s_flat(sum, s).holds();
            if (flat_sum != (facts[i].s_flat && facts[j].s_flat))
              bad.push_back("sum rule fails for " + sum->provenance());
            const bool proj = is_s_projective(sum, s).holds();
            if (proj != flat_sum) bad.push_back("S-projective != S-flat for " + sum->provenance());
            ++r.stats["sums"];
          }
        }
        r.stats["module_checks"] += pool.modules.size();
        ++r.stats["pairs"];
        std::string detail = std::to_string(pool.modules.size()) + " modules";
        for (const auto& b : bad) detail += "; " + b;
        r.entries.push_back(entry("S-flat closure rules", rep.anchor, inst, bad.empty(), detail));
      } catch (const std::exception& ex) {
        record_failure(r, "S-flat closure rules", rep.anchor, inst, ex);
      }
    }
  });
}

void suite_oracles(SuiteContext& ctx, SuiteReport& rep) {
  rep.anchor = "size test = section search; three S-flat routes agree; fractions = idempotent model";
  run_per_ring(ctx, rep, [&](const CatalogEntry& e, Classifier& c, RingResult& r) {
    RingAnalysis& a = c.analysis(e.ring);
    const SamplePool& pool = a.pool();
    const std::size_t nf = local_decomposition(*e.ring).factors.size();
    std::vector<std::string> bad;
    std::size_t done = 0, open = 0;
    for (std::size_t i = 0; i < pool.modules.size(); ++i) {
      const auto split = a.split_projective(i);
      if (!split) {
        ++open;
        continue;
      }
      ++done;
      if (*split != a.flat(i)) bad.push_back("projectivity oracles differ on " + pool.modules[i]->provenance());
    }
    r.stats["projectivity_completed"] += done;
    r.stats["projectivity_inconclusive"] += open;
    std::size_t probes = 0;
    for (std::size_t i = 0; i < pool.modules.size() && probes < 30; ++i) {
      if (pool.modules[i]->size() > 64) continue;
      ++probes;
      try {
        resolution_probe(pool.modules[i]);
      } catch (const ConsistencyError& ex) {
        bad.push_back(std::string("resolution: ") + ex.what());
      }
    }
    r.stats["resolution_probes"] += probes;
    r.entries.push_back(entry("projectivity oracles agree; resolutions consistent", rep.anchor, instance(e),
                              bad.empty(),
                              std::to_string(done) + " completed, " + std::to_string(open) + " inconclusive" +
                                  (bad.empty() ? "" : "; " + bad.front())));

    for (const auto& s : e.msets) {
      const std::string inst = instance(e, &s);
      try {
        std::vector<std::string> sbad;
        const auto& facts = a.localized_facts(s);
        const LocalizationResult& loc = a.localization(s);
        std::size_t agree = 0, undecided = 0;
        for (std::size_t i = 0; i < pool.modules.size(); ++i) {
          std::optional<bool> route_c = true;
          for (std::size_t f = 0; f < nf && route_c; ++f) {
            if (!loc.survives[f]) continue;
            const auto v = a.ideal_criterion(i, f);
            if (!v)
              route_c.reset();
            else if (!*v)
              route_c = false;
          }
          const bool ra = facts[i].s_flat, rb = facts[i].s_flat_localized;
          if (ra != rb || (route_c && *route_c != ra))
            sbad.push_back("S-flat routes differ on " + pool.modules[i]->provenance());
          if (route_c) ++agree;
          else ++undecided;
        }
        // The library entry point on a few modules.
        for (std::size_t i = 0; i < std::min<std::size_t>(3, pool.modules.size()); ++i) {
          const RouteSet rs = s_flat_routes(pool.modules[i], s);
          if (!rs.agree()) sbad.push_back("s_flat_routes disagree on " + pool.modules[i]->provenance());
        }
        const LocalizationCheck chk = compare_localizations(s);
        if (!chk.ok()) sbad.push_back("fraction localization differs");
        r.stats["sflat_three_route"] += agree;
        r.stats["sflat_route_c_inconclusive"] += undecided;
        r.stats["fraction_pairs"] += 1;
        std::string detail = std::to_string(agree) + " three-route, " + std::to_string(undecided) + " two-route";
        for (const auto& b : sbad) detail += "; " + b;
        r.entries.push_back(entry("S-flat routes agree; fractions match", rep.anchor, inst, sbad.empty(), detail));
      } catch (const std::exception& ex) {
        record_failure(r, "S-flat routes agree; fractions match", rep.anchor, inst, ex);
      }
    }
  });
  rep.entries.push_back(threshold("completed projectivity checks", rep.anchor, rep.stats["projectivity_completed"],
                                  1000, ctx));
}

void suite_examples(SuiteContext& ctx, SuiteReport& rep) {
  rep.anchor = "finite instances of the separating examples";
  Classifier& c = ctx.classifier(ctx.catalog().size());
  for (const auto& ex : reproduce_examples(c)) {
    SuiteEntry en;
    en.assertion = ex.id + ": " + ex.claim;
    en.anchor = rep.anchor;
    en.instance = ex.replay;
    en.detail = ex.detail;
    en.status = ex.status == "PASS" ? Status::Pass : ex.status == "FAIL" ? Status::Fail : Status::Skipped;
    if (en.status == Status::Skipped) en.detail = ex.status + ": " + en.detail;
    rep.entries.push_back(std::move(en));
  }
}

}  // namespace

SuiteReport run_suite(const std::string& id, SuiteContext& ctx) {
  static const std::map<std::string, void (*)(SuiteContext&, SuiteReport&)> table = {
      {"svnr-equiv", suite_svnr},
      {"sperfect-equiv", suite_sperfect},
      {"sperfect-almost", suite_almost},
      {"homological", suite_homological},
      {"trivial-extension", suite_trivial},
      {"product-theorem", suite_product},
      {"hom-transfer", suite_hom},
      {"ring-invariants", suite_ring_invariants},
      {"localization", suite_localization},
      {"monotonicity", suite_monotonicity},
      {"implication-chain", suite_chain},
      {"sflat-closure", suite_sflat_closure},
      {"oracle-integrity", suite_oracles},
      {"paper-examples", suite_examples},
  };
  const auto it = table.find(id);
  if (it == table.end()) throw std::invalid_argument("unknown suite '" + id + "'");
  SuiteReport rep;
  rep.suite = id;
  const auto t0 = std::chrono::steady_clock::now();
  it->second(ctx, rep);
  take_firsts(rep);
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace fcr
