#pragma once

// Classification of a ring with a multiplicative set: S-weakly von Neumann
// regular and S-perfect, each through independent routes, plus the theorem
// checks that relate them across products, trivial extensions and ring maps.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fcr/homological.hpp"
#include "fcr/ideal.hpp"
#include "fcr/multset.hpp"
#include "fcr/verdict.hpp"

namespace fcr {

struct ClassifyOptions {
  /// Module sample budget per ring.
  std::size_t budget = 200;
  std::uint64_t seed = 0;
  std::size_t max_module_size = 256;
};

/// Facts about one sampled module relative to one localization e.
struct LocalizedFacts {
  /// M_S = eM flat over R.
  bool s_flat = false;
  /// eM flat over R_S = eR.
  bool s_flat_localized = false;
  /// (1 - e)M flat.
  bool kernel_flat = false;
  /// The kernel of pi_M, computed from the map, flat.
  bool pi_kernel_flat = false;
  bool pi_onto = false;
  /// M_S = 0.
  bool torsion = false;
  std::size_t localized_size = 0;
};

/// Sampled pool of one ring with cached per-module facts. Not thread-safe; one per worker.
class RingAnalysis {
 public:
  RingAnalysis(RingPtr ring, ClassifyOptions options);

  const RingPtr& ring() const noexcept { return ring_; }
  const ClassifyOptions& options() const noexcept { return options_; }
  const RingClass& ring_class() const noexcept { return class_; }
  const Ideal& radical() const noexcept { return radical_; }

  const SamplePool& pool();
  /// M flat over R, for pool member i.
  bool flat(std::size_t i);
  /// Projectivity of pool member i by section search; nullopt when the search gives up.
  std::optional<bool> split_projective(std::size_t i);
  /// Localization of the ring at S, shared by every S with the same surviving idempotent.
  const LocalizationResult& localization(const MultSet& s);
  /// Facts for every pool member at S.
  const std::vector<LocalizedFacts>& localized_facts(const MultSet& s);
  /// Localized modules eM for every pool member at S, built on first use.
  const std::vector<ModuleLocalization>& localized_modules(const MultSet& s);

  struct QuotientFacts {
    std::string provenance;
    std::size_t size = 0;
    bool vnr = false;
    bool semisimple = false;
  };
  /// Classification of R/Rs, cached per element.
  const QuotientFacts& quotient(Elem s);

  /// Ideal criterion on local factor f for pool member i, cached.
  std::optional<bool> ideal_criterion(std::size_t i, std::size_t factor, std::uint64_t* cost = nullptr);

 private:
  struct PerIdempotent {
    LocalizationResult loc;
    std::vector<ModuleLocalization> modules;
    std::vector<LocalizedFacts> facts;
    bool have_facts = false;
  };
  PerIdempotent& slot(const MultSet& s);

  RingPtr ring_;
  ClassifyOptions options_;
  RingClass class_;
  Ideal radical_;
  std::optional<SamplePool> pool_;
  std::vector<signed char> flat_;
  std::vector<signed char> split_;
  std::map<Elem, PerIdempotent> by_idempotent_;
  std::map<Elem, QuotientFacts> quotients_;
  std::map<std::pair<std::size_t, std::size_t>, std::optional<bool>> criterion_;
};

/// Owns one RingAnalysis per ring it has seen.
class Classifier {
 public:
  explicit Classifier(ClassifyOptions options = {}) : options_(options) {}
  const ClassifyOptions& options() const noexcept { return options_; }
  RingAnalysis& analysis(const RingPtr& ring);

 private:
  ClassifyOptions options_;
  std::map<const FiniteRing*, std::pair<RingPtr, std::unique_ptr<RingAnalysis>>> analyses_;
};

struct FactorReport {
  std::size_t index = 0;
  Elem idempotent = 0;
  std::string ring;
  bool is_field = false;
  FactorStatus status = FactorStatus::Other;
  /// Field where 0 in e_iS, units-only elsewhere.
  bool admissible = false;
};

struct StructureReport {
  std::vector<FactorReport> factors;
  bool s_perfect = false;
  /// "S-perfect" or "not S-perfect".
  std::string classification;
};
/// Per-factor status of e_iS; ConsistencyError when Other appears (impossible for finite rings).
StructureReport structure_report(const MultSet& s);

/// Routes C3 [authoritative], C4, C5, C2, Cdef. Never throws on disagreement.
RouteSet s_weakly_vnr_routes(RingAnalysis& a, const MultSet& s);
/// Routes CJ [authoritative], CQ, CS, CW, Cdef. Never throws on disagreement.
RouteSet s_perfect_routes(RingAnalysis& a, const MultSet& s);

/// Throw ConsistencyError when a decided route disagrees with the authoritative one.
RouteSet is_s_weakly_vnr(RingAnalysis& a, const MultSet& s);
RouteSet is_s_perfect(RingAnalysis& a, const MultSet& s);
RouteSet is_s_weakly_vnr(const MultSet& s, const ClassifyOptions& options = {});
RouteSet is_s_perfect(const MultSet& s, const ClassifyOptions& options = {});

/// R_S perfect and every R/sR perfect: true for every finite ring, kept for the almost-perfect form.
Verdict is_s_almost_perfect(const MultSet& s);

/// The S-perfect decision of the authoritative route alone, without sampling.
bool s_perfect_decision(const MultSet& s);

/// Both sides of the product criterion on a tagged product; ConsistencyError on mismatch.
Verdict check_product_theorem(Classifier& c, const MultSet& s);

/// S-perfectness of R x| M against (R S1-perfect and M S1-divisible); for S = S' x| N also the
/// three-way form with S' x| 0. ConsistencyError on mismatch.
Verdict check_trivial_extension_theorem(Classifier& c, const MultSet& s);

struct HomTransferReport {
  Verdict verdict;
  /// f injective and R' finitely generated flat over R.
  bool precondition_met = false;
  std::string precondition_detail;
  /// Codomain modules for which M_S = M_{f(S)} was exhibited.
  std::size_t lemma_checks = 0;
  /// Lemma skipped because 0 lies in f(S).
  bool image_absorbs_zero = false;
};
/// Throws PreconditionUnmet unless f is injective and the codomain is f.g. flat over the domain.
void require_transfer_preconditions(const RingHom& f);
/// Transfer clause when the preconditions hold, isomorphism clause on sampled codomain modules.
/// ConsistencyError when a clause fails.
HomTransferReport check_hom_transfer(Classifier& c, const RingHom& f, const MultSet& s,
                                     std::size_t lemma_modules = 12, std::size_t budget = 2'000'000);

struct ExampleResult {
  std::string id;
  std::string claim;
  /// "PASS", "FAIL" or "SKIPPED(infinite)".
  std::string status;
  std::string replay;
  std::string detail;
};
/// Finite instances of the separating examples, each checked against its stated conclusion.
std::vector<ExampleResult> reproduce_examples(Classifier& c);

}  // namespace fcr
