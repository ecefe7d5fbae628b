#pragma once

// Table-backed finite modules over a FiniteRing, their homomorphisms,
// presentations and tensor products.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fcr/ideal.hpp"
#include "fcr/ring.hpp"

namespace fcr {

struct ModuleTables {
  std::size_t size = 0;
  /// size x size.
  std::vector<Elem> add;
  /// ring.size() x size: act[r * size + m] = r m.
  std::vector<Elem> act;
  Elem zero = 0;
  std::vector<std::string> labels;
  std::string provenance;
};

class FiniteModule {
 public:
  /// Checks the module axioms; StructureError on failure.
  static ModulePtr create(RingPtr ring, ModuleTables tables);
  /// For builders whose output is a module by construction.
  static ModulePtr create_trusted(RingPtr ring, ModuleTables tables);

  FiniteModule(const FiniteModule&) = delete;
  FiniteModule& operator=(const FiniteModule&) = delete;

  /// First violated axiom or nullopt. Cubic in the size.
  std::optional<std::string> axiom_violation() const;

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return size_; }
  Elem zero() const noexcept { return zero_; }
  bool is_zero() const noexcept { return size_ == 1; }
  Elem add(Elem a, Elem b) const { return add_[a * size_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem act(Elem r, Elem m) const { return act_[r * size_ + m]; }

  const std::string& label(Elem m) const { return labels_[m]; }
  std::optional<Elem> parse_element(const std::string& text) const;
  const std::string& provenance() const noexcept { return provenance_; }
  ModulePtr with_provenance(std::string provenance) const;
  ModuleTables tables() const;

 private:
  FiniteModule() = default;
  RingPtr ring_;
  std::size_t size_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> act_;
  std::vector<Elem> neg_;
  Elem zero_ = 0;
  std::vector<std::string> labels_;
  std::string provenance_;
};

/// A subset of a module closed under + and the action.
struct Submodule {
  ModulePtr ambient;
  /// Sorted.
  std::vector<Elem> members;
  std::vector<char> mask;

  bool contains(Elem m) const { return mask[m] != 0; }
  std::size_t size() const noexcept { return members.size(); }
};

/// Additively and action-equivariant map, checked over the full table.
class ModuleHom {
 public:
  static ModuleHom create(ModulePtr domain, ModulePtr codomain, std::vector<Elem> image);
  static ModuleHom identity(const ModulePtr& m);

  Elem operator()(Elem x) const { return image_[x]; }
  const ModulePtr& domain() const noexcept { return domain_; }
  const ModulePtr& codomain() const noexcept { return codomain_; }
  const std::vector<Elem>& image() const noexcept { return image_; }
  bool injective() const;
  bool surjective() const;
  Submodule kernel() const;
  Submodule image_submodule() const;

 private:
  ModuleHom(ModulePtr d, ModulePtr c, std::vector<Elem> img)
      : domain_(std::move(d)), codomain_(std::move(c)), image_(std::move(img)) {}
  ModulePtr domain_;
  ModulePtr codomain_;
  std::vector<Elem> image_;
};

/// R^k as mixed-radix indices, first coordinate most significant. Nothing is tabulated.
class Coordinates {
 public:
  /// ConstructionError when |R|^dim exceeds limits().coordinate_cap.
  Coordinates(RingPtr ring, std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t count() const noexcept { return count_; }
  const RingPtr& ring() const noexcept { return ring_; }
  Elem digit(std::size_t v, std::size_t i) const { return static_cast<Elem>((v / power_[i]) % base_); }
  std::vector<Elem> decode(std::size_t v) const;
  std::size_t encode(std::span<const Elem> digits) const;
  std::size_t zero_vector() const noexcept { return zero_vector_; }
  std::string label(std::size_t v) const;
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t scale(Elem r, std::size_t v) const;

 private:
  RingPtr ring_;
  std::size_t dim_;
  std::size_t base_;
  std::size_t count_;
  std::size_t zero_vector_ = 0;
  std::vector<std::size_t> power_;
};

// ---- constructors ----

ModulePtr free_module(const RingPtr& ring, std::size_t rank);
ModulePtr zero_module(const RingPtr& ring);
/// R/I with provenance "R/(gens)".
ModulePtr cyclic_module(const Ideal& ideal);
/// R^k modulo the span of `rows` (each of length k), provenance "coker[[...]]".
ModulePtr from_presentation(const RingPtr& ring, std::size_t k, const std::vector<std::vector<Elem>>& rows);
struct DirectSum {
  ModulePtr module;
  std::vector<Elem> inject_left;
  std::vector<Elem> inject_right;
};
DirectSum direct_sum(const ModulePtr& a, const ModulePtr& b);
Submodule submodule_generated(const ModulePtr& m, std::span<const Elem> gens);
Submodule whole_submodule(const ModulePtr& m);
/// The submodule as a module in its own right; labels are inherited.
ModulePtr as_module(const Submodule& sub, std::string provenance = {});
/// Inclusion of a submodule built by as_module.
ModuleHom inclusion(const Submodule& sub, const ModulePtr& sub_module);
ModulePtr quotient_module(const Submodule& sub, std::string provenance = {});
/// The natural map onto a quotient built by quotient_module.
ModuleHom quotient_map(const Submodule& sub, const ModulePtr& quotient);
/// Codomain module viewed over the domain ring via r m = f(r) m.
ModulePtr restrict_scalars(const RingHom& f, const ModulePtr& m, std::string provenance = {});
ModulePtr ideal_module(const Ideal& ideal);
/// e M with the action of the corner ring eR.
ModulePtr corner_module(const ModulePtr& m, const CornerRing& corner);
/// e M as a submodule.
Submodule idempotent_part(const ModulePtr& m, Elem e);

/// Module hom determined by generator images; nullopt when not well defined.
std::optional<ModuleHom> extend_hom(const ModulePtr& domain, const ModulePtr& codomain,
                                    std::span<const Elem> gens, std::span<const Elem> images);

// ---- generators and presentations ----

struct FactorProfile {
  std::size_t size = 0;          // |e_i M|
  std::size_t radical_size = 0;  // |m_i e_i M|
  std::size_t generators = 0;    // minimal generator count of e_i M
  std::size_t rank = 0;          // free rank when free
  bool free = false;
  std::vector<Elem> basis_lift;  // elements of e_i M lifting a basis of e_i M / m_i e_i M
};

/// Per local factor of the ring, in decomposition order.
struct ModuleProfile {
  std::vector<FactorProfile> factors;
  std::vector<Elem> minimal_generators;
};
ModuleProfile module_profile(const FiniteModule& m);
/// Lifts of a basis of M/J(R)M assembled across local factors; the count is minimal.
std::vector<Elem> minimal_generators(const FiniteModule& m);

struct Presentation {
  ModulePtr module;
  std::vector<Elem> generators;
  /// Rows of ring elements in R^k generating the kernel of R^k -> M.
  std::vector<std::vector<Elem>> relations;
  /// lift[m]: a coordinate vector mapping to m.
  std::vector<std::size_t> lift;
  /// Every coordinate vector of the kernel, in discovery order.
  std::vector<std::size_t> kernel;

  std::size_t rank() const noexcept { return generators.size(); }
};
/// Exhaustive kernel enumeration; |R|^k is capped by limits().coordinate_cap.
Presentation present(const ModulePtr& m);
/// The kernel of R^k -> M as a module in its own right (the first syzygy).
ModulePtr syzygy_module(const Presentation& p);

struct TensorProduct {
  ModulePtr module;
  std::size_t right_size = 0;
  /// pure[m * right_size + n] = m (x) n.
  std::vector<Elem> pure;

  Elem operator()(Elem m, Elem n) const { return pure[m * right_size + n]; }
};
/// Cokernel of [A (x) id | id (x) B] on R^{kl} from presentations of both sides.
TensorProduct tensor(const ModulePtr& m, const ModulePtr& n);

// ---- isomorphism ----

/// Invariant screen, then bounded search over generator images. BudgetExceeded past `budget`.
std::optional<ModuleHom> find_module_isomorphism(const ModulePtr& a, const ModulePtr& b,
                                                 std::size_t budget = 1'000'000);

}  // namespace fcr
