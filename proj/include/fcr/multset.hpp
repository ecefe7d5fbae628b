#pragma once

// Multiplicative subsets, localization at them, S-torsion and S-divisibility,
// and transport of multiplicative subsets along maps and decompositions.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fcr/ideal.hpp"
#include "fcr/module.hpp"
#include "fcr/ring.hpp"

namespace fcr {

/// Contains one, closed under products, never contains zero.
class MultSet {
 public:
  /// Validates; ZeroAbsorbed if zero is a member, StructureError on other failures.
  static MultSet from_members(RingPtr ring, std::vector<Elem> members, std::vector<Elem> generators = {});

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Elem>& members() const noexcept { return members_; }
  const std::vector<Elem>& generators() const noexcept { return generators_; }
  bool contains(Elem x) const { return mask_[x] != 0; }
  std::size_t size() const noexcept { return members_.size(); }
  bool subset_of(const MultSet& other) const;
  bool within_units() const;
  /// "S{g1,...}" in ring labels; "S=1" for the trivial set.
  std::string literal() const;

  friend bool operator==(const MultSet& a, const MultSet& b) { return a.members_ == b.members_; }

 private:
  friend MultSet mult_closure(const RingPtr&, std::span<const Elem>);
  MultSet(RingPtr ring, std::vector<Elem> members, std::vector<Elem> generators);
  RingPtr ring_;
  std::vector<Elem> members_;
  std::vector<Elem> generators_;
  std::vector<char> mask_;
};

/// Least multiplicative set containing 1 and `gens`; ZeroAbsorbed if it reaches zero.
MultSet mult_closure(const RingPtr& ring, std::span<const Elem> gens);
MultSet trivial_mult_set(const RingPtr& ring);
MultSet unit_mult_set(const RingPtr& ring);

/// Every multiplicative set, ordered by size then members. BudgetExceeded past `budget`.
std::vector<MultSet> enumerate_mult_sets(const RingPtr& ring, std::size_t budget = 100'000);

struct LocalizationResult {
  RingPtr localized_ring;
  RingHom pi;
  Elem surviving_idempotent = 0;
  /// Per local factor of the base ring, in decomposition order.
  std::vector<bool> survives;
  /// The corner eR realizing the localized ring.
  CornerRing corner;
};

/// A local factor survives when S projects into its units; R_S is eR for e the sum of survivors.
LocalizationResult localize_ring(const MultSet& s);

struct ModuleLocalization {
  /// e M with the R-action.
  ModulePtr over_ring;
  /// m -> e m.
  ModuleHom pi;
  /// e M with the action of R_S.
  ModulePtr over_localized;
  Elem idempotent = 0;
};
ModuleLocalization localize_module(const ModulePtr& m, const MultSet& s);
ModuleLocalization localize_module(const ModulePtr& m, const LocalizationResult& loc);

struct TorsionReport {
  bool is_s_torsion = false;
  Submodule torsion;
  bool is_s_divisible = false;
  /// Some s with sM != M, when not divisible.
  std::optional<Elem> divisibility_witness;
  /// Some m killed by no s, when not torsion.
  std::optional<Elem> torsion_witness;
};
TorsionReport s_torsion_and_divisibility(const ModulePtr& m, const MultSet& s);
bool is_s_divisible(const FiniteModule& m, const MultSet& s);
/// sI = I for all s, computed on ring elements.
std::optional<Elem> ideal_divisibility_witness(const Ideal& ideal, const MultSet& s);

/// Image closure of f(S); ZeroAbsorbed when 0 is in f(S).
MultSet pushforward_mult_set(const RingHom& f, const MultSet& s);

/// First coordinates of members of S on a tagged trivial extension.
MultSet extract_s1(const MultSet& s);

/// S' x N := {(s, n) : s in S', n in N} on a tagged trivial extension, for N a submodule.
MultSet trivial_extension_mult_set(const RingPtr& extension, const MultSet& base, const Submodule& part);
/// Whether S has the form S' x N for some multiplicative S' and submodule N; returns S' and N.
std::optional<std::pair<MultSet, Submodule>> split_trivial_extension_mult_set(const MultSet& s);

/// e_i S inside factor i of a tagged product.
struct ProjectedSet {
  RingPtr factor;
  std::vector<Elem> members;
  bool contains_zero = false;
  std::optional<MultSet> set;
};
ProjectedSet project_to_product_factor(const MultSet& s, std::size_t i);

/// e_i S in local factor i of the decomposition.
enum class FactorStatus { ContainsZero, UnitsOnly, Other };
const char* to_string(FactorStatus status);
std::vector<FactorStatus> local_factor_status(const MultSet& s);

/// S \cap J(R).
std::vector<Elem> meet_radical(const MultSet& s);

}  // namespace fcr
