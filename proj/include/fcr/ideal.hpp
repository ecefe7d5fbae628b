#pragma once

// Ideals, the Jacobson radical, maximal ideals and the decomposition of a
// finite commutative ring into local corner rings.

#include <span>
#include <string>
#include <vector>

#include "fcr/ring.hpp"

namespace fcr {

class Ideal {
 public:
  /// Checks the ideal axioms on `members`; StructureError otherwise.
  static Ideal from_members(RingPtr ring, std::vector<Elem> members, std::vector<Elem> generators = {});

  const RingPtr& ring() const noexcept { return ring_; }
  /// Sorted carrier indices.
  const std::vector<Elem>& members() const noexcept { return members_; }
  const std::vector<Elem>& generators() const noexcept { return generators_; }
  bool contains(Elem x) const { return mask_[x] != 0; }
  std::size_t size() const noexcept { return members_.size(); }
  bool is_zero() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == ring_->size(); }
  /// "(g1,g2,...)" in ring labels.
  std::string literal() const;

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.members_ == b.members_; }

 private:
  friend Ideal ideal_generated(const RingPtr&, std::span<const Elem>);
  Ideal(RingPtr ring, std::vector<Elem> members, std::vector<Elem> generators);
  RingPtr ring_;
  std::vector<Elem> members_;
  std::vector<Elem> generators_;
  std::vector<char> mask_;
};

/// Least ideal containing `gens`, by closure to a fixpoint.
Ideal ideal_generated(const RingPtr& ring, std::span<const Elem> gens);
Ideal principal_ideal(const RingPtr& ring, Elem a);
Ideal zero_ideal(const RingPtr& ring);
Ideal intersect(const Ideal& a, const Ideal& b);

/// Every ideal of the ring, ordered by size then members. Throws BudgetExceeded past `budget`.
std::vector<Ideal> enumerate_ideals(const RingPtr& ring, std::size_t budget = 100'000);

bool is_prime_ideal(const Ideal& ideal);

/// The set of nilpotent elements.
Ideal nilradical(const RingPtr& ring);
/// Nilradical, cross-checked against the intersection of maximal ideals (ConsistencyError on mismatch).
Ideal jacobson_radical(const RingPtr& ring);
/// Kernels of the residue maps of the local factors.
std::vector<Ideal> maximal_ideals(const RingPtr& ring);

/// The ring eR with unit e.
struct CornerRing {
  RingPtr ring;
  Elem idempotent = 0;
  /// Ambient index x -> corner index of e*x.
  std::vector<Elem> to_corner;
  /// Corner index -> ambient index.
  std::vector<Elem> from_corner;
};
CornerRing corner_ring(const FiniteRing& ring, Elem idempotent);
/// x -> e*x as a ring homomorphism onto the corner.
RingHom corner_projection(const RingPtr& ring, const CornerRing& corner);

struct LocalFactor {
  CornerRing corner;
  /// Maximal ideal of the factor, as ambient indices.
  std::vector<Elem> maximal;
  std::size_t residue_size = 0;
  bool is_field = false;

  const RingPtr& ring() const noexcept { return corner.ring; }
  Elem idempotent() const noexcept { return corner.idempotent; }
};

/// Primitive idempotents are orthogonal and sum to one; every factor is local.
struct LocalDecomposition {
  std::vector<LocalFactor> factors;

  std::vector<Elem> components(Elem x) const;
};

/// Same as ring.decomposition(): primitive idempotents by exhaustive search, in index order.
const LocalDecomposition& local_decomposition(const FiniteRing& ring);

/// Direct product of the local factors and the isomorphism R -> product.
struct Reassembly {
  ProductRing product;
  RingHom iso;
};
Reassembly reassemble(const RingPtr& ring);

struct RingClass {
  bool is_field = false;
  bool is_local = false;
  bool is_semisimple = false;
  bool is_vnr_ring = false;
  bool is_perfect = false;
  std::string perfect_justification;
};
RingClass ring_class(const RingPtr& ring);

inline constexpr const char* kPerfectJustification = "finite => artinian => perfect";

}  // namespace fcr
