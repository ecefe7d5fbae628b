#include "fcr/module.hpp"

#include <algorithm>
#include <limits>

namespace fcr {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

/// Subgroup of a finite abelian group grown one element at a time.
/// Each absorb adjoins the cyclic subgroup of the new element coset by coset,
/// so the total cost is linear in the final size.
template <class Add>
class GroupSpan {
 public:
  GroupSpan(std::size_t universe, std::size_t zero, Add add) : mask_(universe, 0), add_(add) {
    mask_[zero] = 1;
    list_.push_back(zero);
  }

  bool contains(std::size_t x) const { return mask_[x] != 0; }
  const std::vector<std::size_t>& members() const { return list_; }
  std::size_t size() const { return list_.size(); }

  void absorb(std::size_t s) {
    if (mask_[s]) return;
    const std::size_t base = list_.size();
    std::size_t t = s;
    while (!mask_[t]) {
      for (std::size_t i = 0; i < base; ++i) {
        const std::size_t y = add_(list_[i], t);
        mask_[y] = 1;
        list_.push_back(y);
      }
      t = add_(t, s);
    }
  }

 private:
  std::vector<char> mask_;
  std::vector<std::size_t> list_;
  Add add_;
};

template <class Add>
GroupSpan<Add> make_span(std::size_t universe, std::size_t zero, Add add) {
  return GroupSpan<Add>(universe, zero, add);
}

void check_module_size(std::size_t n) {
  if (n > limits().module_cap)
    throw ConstructionError("module of size " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(limits().module_cap));
}

struct CosetData {
  ModuleTables tables;
  std::vector<Elem> class_of;
  std::vector<std::size_t> rep;
};

/// Quotient of a finite group-with-action by a subgroup `members` closed under the action.
/// Classes are numbered by their least element.
template <class Add, class Act, class Label>
CosetData build_cosets(std::size_t universe, std::size_t zero, std::size_t ring_size,
                       const std::vector<std::size_t>& members, Add add, Act act, Label label) {
  CosetData d;
  d.class_of.assign(universe, std::numeric_limits<Elem>::max());
  for (std::size_t v = 0; v < universe; ++v) {
    if (d.class_of[v] != std::numeric_limits<Elem>::max()) continue;
    const Elem c = static_cast<Elem>(d.rep.size());
    d.rep.push_back(v);
    for (std::size_t n : members) d.class_of[add(v, n)] = c;
  }
  const std::size_t n = d.rep.size();
  check_module_size(n);
  ModuleTables& t = d.tables;
  t.size = n;
  t.add.resize(n * n);
  t.act.resize(ring_size * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.add[i * n + j] = d.class_of[add(d.rep[i], d.rep[j])];
  for (std::size_t r = 0; r < ring_size; ++r)
    for (std::size_t i = 0; i < n; ++i) t.act[r * n + i] = d.class_of[act(static_cast<Elem>(r), d.rep[i])];
  t.zero = d.class_of[zero];
  for (std::size_t i = 0; i < n; ++i) t.labels.push_back(label(d.rep[i]));
  return d;
}

CosetData coker_cosets(const Coordinates& c, const std::vector<std::size_t>& rows) {
  const FiniteRing& R = *c.ring();
  auto add = [&c](std::size_t a, std::size_t b) { return c.add(a, b); };
  auto span = make_span(c.count(), c.zero_vector(), add);
  for (std::size_t v : rows)
    for (Elem r = 0; r < R.size(); ++r) span.absorb(c.scale(r, v));
  return build_cosets(
      c.count(), c.zero_vector(), R.size(), span.members(), add,
      [&c](Elem r, std::size_t v) { return c.scale(r, v); }, [&c](std::size_t v) { return c.label(v); });
}

CosetData module_cosets(const FiniteModule& M, const Submodule& sub) {
  std::vector<std::size_t> members(sub.members.begin(), sub.members.end());
  return build_cosets(
      M.size(), M.zero(), M.ring()->size(), members, [&M](std::size_t a, std::size_t b) { return M.add(a, b); },
      [&M](Elem r, std::size_t m) { return M.act(r, static_cast<Elem>(m)); },
      [&M](std::size_t m) { return M.label(static_cast<Elem>(m)); });
}

void require_same_ring(const FiniteRing& a, const FiniteRing& b, const char* what) {
  if (!same_ring(a, b)) throw StructureError(std::string(what) + ": modules live over different rings");
}

std::string join_labels(const FiniteRing& R, const std::vector<Elem>& row) {
  std::string out = "[";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ",";
    out += R.label(row[i]);
  }
  return out + "]";
}

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

}  // namespace

// ---- FiniteModule ----

ModulePtr FiniteModule::create_trusted(RingPtr ring, ModuleTables t) {
  if (!ring) throw ConstructionError("module without a ring");
  const std::size_t n = t.size;
  if (n == 0) throw ConstructionError("module must have at least one element");
  check_module_size(n);
  if (t.add.size() != n * n || t.act.size() != ring->size() * n)
    throw ConstructionError("module tables have the wrong shape");
  if (t.zero >= n) throw ConstructionError("module zero out of range");
  for (Elem x : t.add)
    if (x >= n) throw ConstructionError("module addition table entry out of range");
  for (Elem x : t.act)
    if (x >= n) throw ConstructionError("module action table entry out of range");
  std::shared_ptr<FiniteModule> m(new FiniteModule());
  m->ring_ = std::move(ring);
  m->size_ = n;
  m->add_ = std::move(t.add);
  m->act_ = std::move(t.act);
  m->zero_ = t.zero;
  m->neg_.assign(n, t.zero);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (m->add_[a * n + b] == t.zero) {
        m->neg_[a] = b;
        break;
      }
  if (t.labels.size() != n) {
    t.labels.clear();
    for (std::size_t i = 0; i < n; ++i) t.labels.push_back(std::to_string(i));
  }
  m->labels_ = std::move(t.labels);
  m->provenance_ = std::move(t.provenance);
  return m;
}

ModulePtr FiniteModule::create(RingPtr ring, ModuleTables tables) {
  ModulePtr m = create_trusted(std::move(ring), std::move(tables));
  if (auto bad = m->axiom_violation()) throw StructureError("module axiom violated: " + *bad);
  return m;
}

std::optional<std::string> FiniteModule::axiom_violation() const {
  const FiniteRing& R = *ring_;
  const std::size_t n = size_;
  for (Elem a = 0; a < n; ++a) {
    if (add(zero_, a) != a) return "zero is not an additive identity";
    if (add(a, neg_[a]) != zero_) return "missing additive inverse";
    for (Elem b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) return "addition is not commutative";
      for (Elem c = 0; c < n; ++c)
        if (add(add(a, b), c) != add(a, add(b, c))) return "addition is not associative";
    }
  }
  for (Elem m = 0; m < n; ++m) {
    if (act(R.one(), m) != m) return "one does not act as the identity";
    for (Elem r = 0; r < R.size(); ++r)
      for (Elem s = 0; s < R.size(); ++s) {
        if (act(R.mul(r, s), m) != act(r, act(s, m))) return "action is not associative";
        if (act(R.add(r, s), m) != add(act(r, m), act(s, m))) return "action is not additive in the scalar";
      }
    for (Elem r = 0; r < R.size(); ++r)
      for (Elem m2 = 0; m2 < n; ++m2)
        if (act(r, add(m, m2)) != add(act(r, m), act(r, m2))) return "action is not additive in the module";
  }
  return std::nullopt;
}

std::optional<Elem> FiniteModule::parse_element(const std::string& text) const {
  for (Elem m = 0; m < size_; ++m)
    if (labels_[m] == text) return m;
  return std::nullopt;
}

ModuleTables FiniteModule::tables() const {
  return ModuleTables{size_, add_, act_, zero_, labels_, provenance_};
}

ModulePtr FiniteModule::with_provenance(std::string provenance) const {
  ModuleTables t = tables();
  t.provenance = std::move(provenance);
  return create_trusted(ring_, std::move(t));
}

// ---- ModuleHom ----

ModuleHom ModuleHom::create(ModulePtr domain, ModulePtr codomain, std::vector<Elem> image) {
  const FiniteModule& A = *domain;
  const FiniteModule& B = *codomain;
  require_same_ring(*A.ring(), *B.ring(), "module hom");
  if (image.size() != A.size()) throw StructureError("module hom image table has the wrong size");
  for (Elem y : image)
    if (y >= B.size()) throw StructureError("module hom image out of range");
  for (Elem a = 0; a < A.size(); ++a) {
    for (Elem b = 0; b < A.size(); ++b)
      if (image[A.add(a, b)] != B.add(image[a], image[b])) throw StructureError("module hom is not additive");
    for (Elem r = 0; r < A.ring()->size(); ++r)
      if (image[A.act(r, a)] != B.act(r, image[a])) throw StructureError("module hom is not equivariant");
  }
  return ModuleHom(std::move(domain), std::move(codomain), std::move(image));
}

ModuleHom ModuleHom::identity(const ModulePtr& m) {
  std::vector<Elem> img(m->size());
  for (Elem x = 0; x < m->size(); ++x) img[x] = x;
  return ModuleHom(m, m, std::move(img));
}

bool ModuleHom::injective() const { return kernel().size() == 1; }

bool ModuleHom::surjective() const { return image_submodule().size() == codomain_->size(); }

Submodule ModuleHom::kernel() const {
  Submodule k{domain_, {}, std::vector<char>(domain_->size(), 0)};
  for (Elem x = 0; x < domain_->size(); ++x)
    if (image_[x] == codomain_->zero()) {
      k.members.push_back(x);
      k.mask[x] = 1;
    }
  return k;
}

Submodule ModuleHom::image_submodule() const {
  Submodule s{codomain_, {}, std::vector<char>(codomain_->size(), 0)};
  for (Elem y : image_) s.mask[y] = 1;
  for (Elem y = 0; y < codomain_->size(); ++y)
    if (s.mask[y]) s.members.push_back(y);
  return s;
}

// ---- Coordinates ----

Coordinates::Coordinates(RingPtr ring, std::size_t dim) : ring_(std::move(ring)), dim_(dim), base_(ring_->size()) {
  const std::size_t cap = limits().coordinate_cap;
  count_ = checked_power(base_, dim_, cap);
  if (count_ > cap)
    throw ConstructionError("|R|^" + std::to_string(dim_) + " exceeds the coordinate cap of " + std::to_string(cap));
  power_.resize(dim_);
  std::size_t p = 1;
  for (std::size_t i = dim_; i-- > 0;) {
    power_[i] = p;
    p *= base_;
  }
  std::vector<Elem> zeros(dim_, ring_->zero());
  zero_vector_ = encode(zeros);
}

std::vector<Elem> Coordinates::decode(std::size_t v) const {
  std::vector<Elem> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = digit(v, i);
  return out;
}

std::size_t Coordinates::encode(std::span<const Elem> digits) const {
  std::size_t v = 0;
  for (std::size_t i = 0; i < dim_; ++i) v += digits[i] * power_[i];
  return v;
}

std::size_t Coordinates::add(std::size_t a, std::size_t b) const {
  std::size_t v = 0;
  for (std::size_t i = 0; i < dim_; ++i) v += ring_->add(digit(a, i), digit(b, i)) * power_[i];
  return v;
}

std::size_t Coordinates::scale(Elem r, std::size_t a) const {
  std::size_t v = 0;
  for (std::size_t i = 0; i < dim_; ++i) v += ring_->mul(r, digit(a, i)) * power_[i];
  return v;
}

std::string Coordinates::label(std::size_t v) const {
  if (dim_ == 0) return "0";
  if (dim_ == 1) return ring_->label(digit(v, 0));
  std::string out = "(";
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) out += ",";
    out += ring_->label(digit(v, i));
  }
  return out + ")";
}

// ---- constructors ----

ModulePtr free_module(const RingPtr& ring, std::size_t rank) {
  Coordinates c(ring, rank);
  check_module_size(c.count());
  CosetData d = coker_cosets(c, {});
  d.tables.provenance = "free(" + std::to_string(rank) + ")";
  return FiniteModule::create_trusted(ring, std::move(d.tables));
}

ModulePtr zero_module(const RingPtr& ring) { return free_module(ring, 0); }

ModulePtr cyclic_module(const Ideal& ideal) {
  Coordinates c(ideal.ring(), 1);
  std::vector<std::size_t> rows;
  for (Elem g : ideal.generators()) rows.push_back(g);
  CosetData d = coker_cosets(c, rows);
  d.tables.provenance = "R/" + ideal.literal();
  return FiniteModule::create_trusted(ideal.ring(), std::move(d.tables));
}

ModulePtr from_presentation(const RingPtr& ring, std::size_t k, const std::vector<std::vector<Elem>>& rows) {
  Coordinates c(ring, k);
  std::vector<std::size_t> encoded;
  std::string prov = "coker[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != k) throw StructureError("relation row has the wrong length");
    for (Elem x : rows[i])
      if (x >= ring->size()) throw StructureError("relation entry out of range");
    encoded.push_back(c.encode(rows[i]));
    if (i) prov += ",";
    prov += join_labels(*ring, rows[i]);
  }
  prov += "]";
  CosetData d = coker_cosets(c, encoded);
  d.tables.provenance = rows.empty() ? "free(" + std::to_string(k) + ")" : prov;
  return FiniteModule::create_trusted(ring, std::move(d.tables));
}

DirectSum direct_sum(const ModulePtr& a, const ModulePtr& b) {
  const FiniteModule& A = *a;
  const FiniteModule& B = *b;
  require_same_ring(*A.ring(), *B.ring(), "direct sum");
  const std::size_t na = A.size(), nb = B.size(), n = na * nb;
  check_module_size(n);
  const std::size_t rs = A.ring()->size();
  ModuleTables t;
  t.size = n;
  t.add.resize(n * n);
  t.act.resize(rs * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t.add[x * n + y] = static_cast<Elem>(A.add(x / nb, y / nb) * nb + B.add(x % nb, y % nb));
  for (Elem r = 0; r < rs; ++r)
    for (std::size_t x = 0; x < n; ++x) t.act[r * n + x] = static_cast<Elem>(A.act(r, x / nb) * nb + B.act(r, x % nb));
  t.zero = static_cast<Elem>(A.zero() * nb + B.zero());
  for (std::size_t x = 0; x < n; ++x) t.labels.push_back("(" + A.label(x / nb) + "," + B.label(x % nb) + ")");
  const std::string& pb = B.provenance();
  const bool wrap = pb.find(" (+) ") != std::string::npos;
  t.provenance = A.provenance() + " (+) " + (wrap ? "(" + pb + ")" : pb);
  DirectSum out;
  out.module = FiniteModule::create_trusted(A.ring(), std::move(t));
  for (Elem x = 0; x < na; ++x) out.inject_left.push_back(static_cast<Elem>(x * nb + B.zero()));
  for (Elem y = 0; y < nb; ++y) out.inject_right.push_back(static_cast<Elem>(A.zero() * nb + y));
  return out;
}

Submodule submodule_generated(const ModulePtr& m, std::span<const Elem> gens) {
  const FiniteModule& M = *m;
  auto span = make_span(M.size(), M.zero(), [&M](std::size_t a, std::size_t b) { return M.add(a, b); });
  for (Elem g : gens) {
    if (g >= M.size()) throw StructureError("submodule generator out of range");
    for (Elem r = 0; r < M.ring()->size(); ++r) span.absorb(M.act(r, g));
  }
  Submodule s{m, {}, std::vector<char>(M.size(), 0)};
  for (std::size_t x : span.members()) s.mask[x] = 1;
  for (Elem x = 0; x < M.size(); ++x)
    if (s.mask[x]) s.members.push_back(x);
  return s;
}

Submodule whole_submodule(const ModulePtr& m) {
  Submodule s{m, {}, std::vector<char>(m->size(), 1)};
  for (Elem x = 0; x < m->size(); ++x) s.members.push_back(x);
  return s;
}

ModulePtr as_module(const Submodule& sub, std::string provenance) {
  const FiniteModule& M = *sub.ambient;
  const std::size_t n = sub.members.size();
  std::vector<Elem> pos(M.size(), 0);
  for (std::size_t i = 0; i < n; ++i) pos[sub.members[i]] = static_cast<Elem>(i);
  const std::size_t rs = M.ring()->size();
  ModuleTables t;
  t.size = n;
  t.add.resize(n * n);
  t.act.resize(rs * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Elem s = M.add(sub.members[i], sub.members[j]);
      if (!sub.mask[s]) throw StructureError("subset is not closed under addition");
      t.add[i * n + j] = pos[s];
    }
  for (Elem r = 0; r < rs; ++r)
    for (std::size_t i = 0; i < n; ++i) {
      const Elem s = M.act(r, sub.members[i]);
      if (!sub.mask[s]) throw StructureError("subset is not closed under the action");
      t.act[r * n + i] = pos[s];
    }
  if (!sub.mask[M.zero()]) throw StructureError("subset does not contain zero");
  t.zero = pos[M.zero()];
  for (Elem x : sub.members) t.labels.push_back(M.label(x));
  t.provenance = provenance.empty() ? "sub(" + M.provenance() + ")" : std::move(provenance);
  return FiniteModule::create_trusted(M.ring(), std::move(t));
}

ModuleHom inclusion(const Submodule& sub, const ModulePtr& sub_module) {
  return ModuleHom::create(sub_module, sub.ambient, sub.members);
}

ModulePtr quotient_module(const Submodule& sub, std::string provenance) {
  const FiniteModule& M = *sub.ambient;
  CosetData d = module_cosets(M, sub);
  d.tables.provenance = provenance.empty() ? "(" + M.provenance() + ")/sub" : std::move(provenance);
  return FiniteModule::create_trusted(M.ring(), std::move(d.tables));
}

ModuleHom quotient_map(const Submodule& sub, const ModulePtr& quotient) {
  CosetData d = module_cosets(*sub.ambient, sub);
  return ModuleHom::create(sub.ambient, quotient, std::move(d.class_of));
}

ModulePtr restrict_scalars(const RingHom& f, const ModulePtr& m, std::string provenance) {
  const FiniteModule& M = *m;
  require_same_ring(*f.codomain(), *M.ring(), "restriction of scalars");
  const std::size_t n = M.size();
  const std::size_t rs = f.domain()->size();
  ModuleTables t = M.tables();
  t.act.resize(rs * n);
  for (Elem r = 0; r < rs; ++r)
    for (Elem x = 0; x < n; ++x) t.act[r * n + x] = M.act(f(r), x);
  t.provenance =
      provenance.empty() ? "via(" + f.codomain()->provenance() + ", " + M.provenance() + ")" : std::move(provenance);
  return FiniteModule::create_trusted(f.domain(), std::move(t));
}

ModulePtr ideal_module(const Ideal& ideal) {
  ModulePtr r1 = free_module(ideal.ring(), 1);
  Submodule s{r1, {}, std::vector<char>(r1->size(), 0)};
  // free(R,1) indexes elements exactly as the ring does.
  for (Elem x : ideal.members()) {
    s.members.push_back(x);
    s.mask[x] = 1;
  }
  return as_module(s, "ideal" + ideal.literal());
}

Submodule idempotent_part(const ModulePtr& m, Elem e) {
  const FiniteModule& M = *m;
  Submodule s{m, {}, std::vector<char>(M.size(), 0)};
  for (Elem x = 0; x < M.size(); ++x) s.mask[M.act(e, x)] = 1;
  for (Elem x = 0; x < M.size(); ++x)
    if (s.mask[x]) s.members.push_back(x);
  return s;
}

ModulePtr corner_module(const ModulePtr& m, const CornerRing& corner) {
  const FiniteModule& M = *m;
  Submodule part = idempotent_part(m, corner.idempotent);
  const std::size_t n = part.members.size();
  std::vector<Elem> pos(M.size(), 0);
  for (std::size_t i = 0; i < n; ++i) pos[part.members[i]] = static_cast<Elem>(i);
  const std::size_t cs = corner.ring->size();
  ModuleTables t;
  t.size = n;
  t.add.resize(n * n);
  t.act.resize(cs * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.add[i * n + j] = pos[M.add(part.members[i], part.members[j])];
  for (std::size_t c = 0; c < cs; ++c)
    for (std::size_t i = 0; i < n; ++i) t.act[c * n + i] = pos[M.act(corner.from_corner[c], part.members[i])];
  t.zero = pos[M.zero()];
  for (Elem x : part.members) t.labels.push_back(M.label(x));
  t.provenance = corner.ring->label(corner.ring->one()) + " * (" + M.provenance() + ")";
  return FiniteModule::create_trusted(corner.ring, std::move(t));
}

std::optional<ModuleHom> extend_hom(const ModulePtr& domain, const ModulePtr& codomain, std::span<const Elem> gens,
                                    std::span<const Elem> images) {
  const FiniteModule& A = *domain;
  const FiniteModule& B = *codomain;
  if (gens.size() != images.size()) throw StructureError("generator and image counts differ");
  const std::size_t unset = B.size();
  std::vector<std::size_t> img(A.size(), unset);
  img[A.zero()] = B.zero();
  // Seeds r*g with forced images r*phi(g); sums of seeds reach everything.
  std::vector<std::pair<Elem, Elem>> seeds;
  std::vector<char> seeded(A.size(), 0);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Elem r = 0; r < A.ring()->size(); ++r) {
      const Elem x = A.act(r, gens[i]);
      const Elem y = B.act(r, images[i]);
      if (img[x] == unset) {
        img[x] = y;
      } else if (img[x] != y) {
        return std::nullopt;
      }
      if (!seeded[x] && x != A.zero()) {
        seeded[x] = 1;
        seeds.emplace_back(x, y);
      }
    }
  std::vector<char> visited(A.size(), 0);
  std::vector<Elem> order{A.zero()};
  visited[A.zero()] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Elem a = order[i];
    for (auto [s, ys] : seeds) {
      const Elem b = A.add(a, s);
      const Elem v = B.add(static_cast<Elem>(img[a]), ys);
      if (img[b] == unset) {
        img[b] = v;
      } else if (img[b] != v) {
        return std::nullopt;
      }
      if (!visited[b]) {
        visited[b] = 1;
        order.push_back(b);
      }
    }
  }
  if (order.size() != A.size()) throw StructureError("extend_hom: generators do not generate the domain");
  std::vector<Elem> out(img.begin(), img.end());
  return ModuleHom::create(domain, codomain, std::move(out));
}

// ---- generators and presentations ----

ModuleProfile module_profile(const FiniteModule& M) {
  const FiniteRing& R = *M.ring();
  ModuleProfile prof;
  const auto& dec = R.decomposition();
  auto add = [&M](std::size_t a, std::size_t b) { return M.add(a, b); };
  std::size_t k = 0;
  for (const auto& f : dec.factors) {
    FactorProfile fp;
    const Elem e = f.idempotent();
    std::vector<Elem> part;
    std::vector<char> in(M.size(), 0);
    for (Elem x = 0; x < M.size(); ++x) in[M.act(e, x)] = 1;
    for (Elem x = 0; x < M.size(); ++x)
      if (in[x]) part.push_back(x);
    fp.size = part.size();
    auto span = make_span(M.size(), M.zero(), add);
    for (Elem a : f.maximal)
      for (Elem x : part) span.absorb(M.act(a, x));
    fp.radical_size = span.size();
    for (Elem x : part) {
      if (span.contains(x)) continue;
      fp.basis_lift.push_back(x);
      for (Elem r = 0; r < R.size(); ++r) span.absorb(M.act(r, x));
    }
    fp.generators = fp.basis_lift.size();
    const std::size_t ri = f.ring()->size();
    fp.free = checked_power(ri, fp.generators, fp.size) == fp.size;
    fp.rank = fp.free ? fp.generators : 0;
    k = std::max(k, fp.generators);
    prof.factors.push_back(std::move(fp));
  }
  for (std::size_t j = 0; j < k; ++j) {
    Elem g = M.zero();
    for (const auto& fp : prof.factors)
      if (j < fp.basis_lift.size()) g = M.add(g, fp.basis_lift[j]);
    prof.minimal_generators.push_back(g);
  }
  return prof;
}

std::vector<Elem> minimal_generators(const FiniteModule& m) { return module_profile(m).minimal_generators; }

Presentation present(const ModulePtr& m) {
  const FiniteModule& M = *m;
  const RingPtr& ring = M.ring();
  Presentation p;
  p.module = m;
  p.generators = minimal_generators(M);
  const std::size_t k = p.generators.size();
  Coordinates c(ring, k);
  std::vector<Elem> image(c.count());
  p.lift.assign(M.size(), kUnset);
  for (std::size_t v = 0; v < c.count(); ++v) {
    Elem s = M.zero();
    for (std::size_t i = 0; i < k; ++i) s = M.add(s, M.act(c.digit(v, i), p.generators[i]));
    image[v] = s;
    if (p.lift[s] == kUnset) p.lift[s] = v;
  }
  auto span = make_span(c.count(), c.zero_vector(), [&c](std::size_t a, std::size_t b) { return c.add(a, b); });
  for (std::size_t v = 0; v < c.count(); ++v) {
    if (image[v] != M.zero() || span.contains(v)) continue;
    p.relations.push_back(c.decode(v));
    for (Elem r = 0; r < ring->size(); ++r) span.absorb(c.scale(r, v));
  }
  for (std::size_t x : p.lift)
    if (x == kUnset) throw ConsistencyError("minimal generators do not generate " + M.provenance());
  p.kernel = span.members();
  return p;
}

ModulePtr syzygy_module(const Presentation& p) {
  const RingPtr& ring = p.module->ring();
  Coordinates c(ring, p.rank());
  std::vector<std::size_t> members = p.kernel;
  std::sort(members.begin(), members.end());
  const std::size_t n = members.size();
  check_module_size(n);
  auto pos = [&members](std::size_t v) {
    return static_cast<Elem>(std::lower_bound(members.begin(), members.end(), v) - members.begin());
  };
  ModuleTables t;
  t.size = n;
  t.add.resize(n * n);
  t.act.resize(ring->size() * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.add[i * n + j] = pos(c.add(members[i], members[j]));
  for (Elem r = 0; r < ring->size(); ++r)
    for (std::size_t i = 0; i < n; ++i) t.act[r * n + i] = pos(c.scale(r, members[i]));
  t.zero = pos(c.zero_vector());
  for (std::size_t v : members) t.labels.push_back(c.label(v));
  t.provenance = "syz(" + p.module->provenance() + ")";
  return FiniteModule::create_trusted(ring, std::move(t));
}

TensorProduct tensor(const ModulePtr& m, const ModulePtr& n) {
  require_same_ring(*m->ring(), *n->ring(), "tensor product");
  const RingPtr& ring = m->ring();
  const Presentation pm = present(m);
  const Presentation pn = present(n);
  const std::size_t k = pm.rank(), l = pn.rank();
  Coordinates c(ring, k * l);
  const Coordinates cm(ring, k), cn(ring, l);
  std::vector<std::size_t> rows;
  std::vector<Elem> w(k * l);
  for (const auto& alpha : pm.relations)
    for (std::size_t j = 0; j < l; ++j) {
      std::fill(w.begin(), w.end(), ring->zero());
      for (std::size_t i = 0; i < k; ++i) w[i * l + j] = alpha[i];
      rows.push_back(c.encode(w));
    }
  for (const auto& beta : pn.relations)
    for (std::size_t i = 0; i < k; ++i) {
      std::fill(w.begin(), w.end(), ring->zero());
      for (std::size_t j = 0; j < l; ++j) w[i * l + j] = beta[j];
      rows.push_back(c.encode(w));
    }
  CosetData d = coker_cosets(c, rows);
  d.tables.provenance = "(" + m->provenance() + ") (x) (" + n->provenance() + ")";
  TensorProduct t;
  t.right_size = n->size();
  t.pure.resize(m->size() * n->size());
  for (Elem a = 0; a < m->size(); ++a) {
    const auto u = cm.decode(pm.lift[a]);
    for (Elem b = 0; b < n->size(); ++b) {
      const auto v = cn.decode(pn.lift[b]);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < l; ++j) w[i * l + j] = ring->mul(u[i], v[j]);
      t.pure[a * n->size() + b] = d.class_of[c.encode(w)];
    }
  }
  t.module = FiniteModule::create_trusted(ring, std::move(d.tables));
  return t;
}

// ---- isomorphism ----

namespace {

std::vector<char> annihilator(const FiniteModule& M, Elem x) {
  std::vector<char> ann(M.ring()->size(), 0);
  for (Elem r = 0; r < M.ring()->size(); ++r) ann[r] = M.act(r, x) == M.zero();
  return ann;
}

bool same_profile(const ModuleProfile& a, const ModuleProfile& b) {
  if (a.factors.size() != b.factors.size()) return false;
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    const auto& x = a.factors[i];
    const auto& y = b.factors[i];
    if (x.size != y.size || x.radical_size != y.radical_size || x.generators != y.generators) return false;
  }
  return true;
}

}  // namespace

std::optional<ModuleHom> find_module_isomorphism(const ModulePtr& a, const ModulePtr& b, std::size_t budget) {
  const FiniteModule& A = *a;
  const FiniteModule& B = *b;
  if (!same_ring(*A.ring(), *B.ring()) || A.size() != B.size()) return std::nullopt;
  const ModuleProfile pa = module_profile(A);
  if (!same_profile(pa, module_profile(B))) return std::nullopt;
  const auto& gens = pa.minimal_generators;
  std::vector<std::vector<Elem>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto ann = annihilator(A, gens[i]);
    for (Elem y = 0; y < B.size(); ++y)
      if (annihilator(B, y) == ann) cands[i].push_back(y);
    if (cands[i].empty()) return std::nullopt;
  }
  std::vector<std::size_t> pick(gens.size(), 0);
  std::vector<Elem> images(gens.size());
  std::size_t tried = 0;
  while (true) {
    if (++tried > budget) throw BudgetExceeded("module isomorphism search exceeded its budget");
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = cands[i][pick[i]];
    if (auto h = extend_hom(a, b, gens, images); h && h->injective()) return h;
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == cands[i].size()) pick[i++] = 0;
    if (i == pick.size()) return std::nullopt;
  }
}

}  // namespace fcr
