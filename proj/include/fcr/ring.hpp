#pragma once

// Table-backed finite commutative unital rings, ring homomorphisms and the
// elementary constructions (Z/n, F_p[x]/(f), direct products).

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fcr/error.hpp"

namespace fcr {

/// Carrier index of a ring or module element.
using Elem = std::uint32_t;

class FiniteRing;
class FiniteModule;
struct LocalDecomposition;
using RingPtr = std::shared_ptr<const FiniteRing>;
using ModulePtr = std::shared_ptr<const FiniteModule>;

/// Process-wide size caps. Set once at startup, before any worker threads run.
struct Limits {
  std::size_t ring_cap = 256;
  std::size_t module_cap = 1024;
  /// Largest |R|^k enumerated when working with coordinate vectors in R^k.
  std::size_t coordinate_cap = 1'000'000;
};
Limits& limits();

/// Raw tables for a ring: add/mul are row-major size x size.
struct RingTables {
  std::size_t size = 0;
  std::vector<Elem> add;
  std::vector<Elem> mul;
  Elem zero = 0;
  Elem one = 0;
  std::vector<std::string> labels;
  std::string provenance;
};

/// Present on rings built by direct_product: coordinates of every element.
struct ProductTag {
  std::vector<RingPtr> factors;
  /// e_i: 1 in slot i, 0 elsewhere.
  std::vector<Elem> idempotents;
  /// components[x][i] is the i-th coordinate of x.
  std::vector<std::vector<Elem>> components;

  Elem compose(std::span<const Elem> parts) const;
};

/// Present on rings built by trivial_extension: R x M with (r,m)(r',m') = (rr', rm' + r'm).
struct TrivialExtensionTag {
  RingPtr base;
  ModulePtr part;
  std::size_t part_size = 0;
  /// pairs[x] = (r, m).
  std::vector<std::pair<Elem, Elem>> pairs;

  Elem index_of(Elem r, Elem m) const;
};

struct ElementFlags {
  bool unit = false;
  bool regular = false;
  bool nilpotent = false;
  bool idempotent = false;
  bool vnr = false;

  friend bool operator==(const ElementFlags&, const ElementFlags&) = default;
};

/// First violated ring axiom, or nullopt when the tables define a commutative unital ring.
std::optional<std::string> ring_axiom_violation(const RingTables& tables);

class FiniteRing {
 public:
  struct Options {
    bool allow_zero_ring = false;
    /// Skip the axiom check. Only for fault injection.
    bool unchecked = false;
    std::optional<ProductTag> product;
    std::shared_ptr<const TrivialExtensionTag> trivial;
  };

  /// Validates the tables and throws StructureError / ConstructionError on failure.
  static RingPtr create(RingTables tables, Options options);
  static RingPtr create(RingTables tables) { return create(std::move(tables), Options{}); }

  FiniteRing(const FiniteRing&) = delete;
  FiniteRing& operator=(const FiniteRing&) = delete;

  std::size_t size() const noexcept { return size_; }
  Elem zero() const noexcept { return zero_; }
  Elem one() const noexcept { return one_; }
  bool is_zero_ring() const noexcept { return size_ == 1; }

  Elem add(Elem a, Elem b) const { return add_[a * size_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * size_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, std::size_t k) const;
  /// n * 1.
  Elem from_integer(long long n) const;

  const ElementFlags& flags(Elem a) const { return flags_[a]; }
  bool is_unit(Elem a) const { return flags_[a].unit; }
  bool is_nilpotent(Elem a) const { return flags_[a].nilpotent; }
  bool is_idempotent(Elem a) const { return flags_[a].idempotent; }
  bool is_vnr(Elem a) const { return flags_[a].vnr; }
  bool is_regular(Elem a) const { return flags_[a].regular; }
  std::optional<Elem> inverse(Elem a) const;
  std::size_t additive_order(Elem a) const;

  const std::vector<Elem>& units() const noexcept { return units_; }
  const std::vector<Elem>& idempotents() const noexcept { return idempotents_; }

  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Resolves a label; plain integers fall back to n * 1.
  std::optional<Elem> parse_element(const std::string& text) const;
  const std::string& provenance() const noexcept { return provenance_; }

  const ProductTag* product_tag() const noexcept { return product_ ? &*product_ : nullptr; }
  const TrivialExtensionTag* trivial_tag() const noexcept { return trivial_.get(); }

  const std::vector<Elem>& add_table() const noexcept { return add_; }
  const std::vector<Elem>& mul_table() const noexcept { return mul_; }
  RingTables tables() const;

  /// Decomposition into local factors, computed once (see ideal.hpp).
  const LocalDecomposition& decomposition() const;

 private:
  FiniteRing() = default;

  std::size_t size_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  Elem zero_ = 0;
  Elem one_ = 0;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Elem> label_index_;
  std::string provenance_;
  std::vector<ElementFlags> flags_;
  std::vector<Elem> inverse_;
  std::vector<Elem> units_;
  std::vector<Elem> idempotents_;
  std::optional<ProductTag> product_;
  std::shared_ptr<const TrivialExtensionTag> trivial_;

  mutable std::once_flag decomposition_once_;
  mutable std::shared_ptr<const LocalDecomposition> decomposition_;
};

/// Structure-preserving map between rings, checked on construction over the full table.
class RingHom {
 public:
  static RingHom create(RingPtr domain, RingPtr codomain, std::vector<Elem> image);
  static RingHom identity(const RingPtr& ring);

  Elem operator()(Elem x) const { return image_[x]; }
  const RingPtr& domain() const noexcept { return domain_; }
  const RingPtr& codomain() const noexcept { return codomain_; }
  const std::vector<Elem>& image() const noexcept { return image_; }
  bool injective() const;
  bool surjective() const;
  /// after o this.
  RingHom then(const RingHom& after) const;

 private:
  RingHom(RingPtr d, RingPtr c, std::vector<Elem> img)
      : domain_(std::move(d)), codomain_(std::move(c)), image_(std::move(img)) {}
  RingPtr domain_;
  RingPtr codomain_;
  std::vector<Elem> image_;
};

/// Nullopt when the image table is a ring homomorphism, else the first broken law.
std::optional<std::string> ring_hom_violation(const FiniteRing& domain, const FiniteRing& codomain,
                                              std::span<const Elem> image);

/// Same object, or identical add/mul tables with the same zero and one.
bool same_ring(const FiniteRing& a, const FiniteRing& b);

// ---- constructions ----

RingPtr make_zmod(long long n);
/// F_p[x]/(f); coefficients are lowest degree first and f must be monic.
RingPtr make_poly_quotient(long long p, std::span<const long long> coefficients);
/// The size-1 ring. Only reachable as a localization or quotient result.
RingPtr make_zero_ring();

struct ProductRing {
  RingPtr ring;
  std::vector<Elem> idempotents;
};
ProductRing direct_product(std::span<const RingPtr> factors);

/// Parenthesizes an expression whose top level is a product, so it can be used as an operand.
std::string grouped(const std::string& expression);

/// Canonical label of a polynomial given lowest-degree-first coefficients.
std::string polynomial_label(std::span<const long long> coefficients);

// ---- element predicates ----

ElementFlags element_predicates(const FiniteRing& ring, Elem a);

struct UnitIdempotent {
  Elem unit;
  Elem idempotent;
};
/// a = u * e with u a unit and e idempotent, searched units-major; absent when a is not vnr.
std::optional<UnitIdempotent> vnr_factorization(const FiniteRing& ring, Elem a);

// ---- homomorphism search ----

/// Greedy generating set of the ring under + and *.
std::vector<Elem> ring_generators(const FiniteRing& ring);

/// Brute force over generator images with pruning. Exponential in the
/// generator count; throws BudgetExceeded after `budget` candidate assignments.
std::optional<RingHom> find_ring_isomorphism(const RingPtr& a, const RingPtr& b,
                                             std::size_t budget = 1'000'000);
std::optional<RingHom> find_surjective_hom(const RingPtr& from, const RingPtr& to,
                                           std::size_t budget = 1'000'000);

}  // namespace fcr
