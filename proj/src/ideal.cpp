#include "fcr/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fcr {

namespace {

/// Additive closure of {0} and `seeds`; in a finite group this is the subgroup they generate.
std::vector<Elem> additive_span(const FiniteRing& ring, const std::vector<Elem>& seeds) {
  std::vector<char> in(ring.size(), 0);
  std::vector<Elem> list{ring.zero()};
  in[ring.zero()] = 1;
  std::vector<Elem> step;
  for (Elem s : seeds)
    if (s != ring.zero() && std::find(step.begin(), step.end(), s) == step.end()) step.push_back(s);
  for (std::size_t i = 0; i < list.size(); ++i)
    for (Elem s : step) {
      const Elem y = ring.add(list[i], s);
      if (!in[y]) {
        in[y] = 1;
        list.push_back(y);
      }
    }
  std::sort(list.begin(), list.end());
  return list;
}

std::vector<Elem> ideal_closure(const FiniteRing& ring, std::span<const Elem> gens) {
  std::vector<char> seen(ring.size(), 0);
  std::vector<Elem> seeds;
  for (Elem g : gens)
    for (Elem r = 0; r < ring.size(); ++r) {
      const Elem x = ring.mul(r, g);
      if (!seen[x]) {
        seen[x] = 1;
        seeds.push_back(x);
      }
    }
  return additive_span(ring, seeds);
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Elem> members, std::vector<Elem> generators)
    : ring_(std::move(ring)), members_(std::move(members)), generators_(std::move(generators)),
      mask_(ring_->size(), 0) {
  for (Elem x : members_) mask_[x] = 1;
}

Ideal Ideal::from_members(RingPtr ring, std::vector<Elem> members, std::vector<Elem> generators) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const FiniteRing& R = *ring;
  std::vector<char> in(R.size(), 0);
  for (Elem x : members) {
    if (x >= R.size()) throw StructureError("ideal member out of range");
    in[x] = 1;
  }
  if (!in[R.zero()]) throw StructureError("ideal does not contain zero");
  for (Elem a : members) {
    for (Elem b : members)
      if (!in[R.add(a, b)]) throw StructureError("ideal is not closed under addition");
    for (Elem r = 0; r < R.size(); ++r)
      if (!in[R.mul(r, a)]) throw StructureError("ideal is not closed under scalar multiplication");
  }
  if (generators.empty()) {
    generators = members;
  } else {
    auto closure = ideal_closure(R, generators);
    if (closure != members) throw StructureError("ideal members differ from the closure of its generators");
  }
  return Ideal(std::move(ring), std::move(members), std::move(generators));
}

std::string Ideal::literal() const {
  std::string out = "(";
  const auto& gens = generators_.empty() ? std::vector<Elem>{ring_->zero()} : generators_;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += ring_->label(gens[i]);
  }
  return out + ")";
}

Ideal ideal_generated(const RingPtr& ring, std::span<const Elem> gens) {
  for (Elem g : gens)
    if (g >= ring->size()) throw StructureError("generator out of range");
  return Ideal(ring, ideal_closure(*ring, gens), std::vector<Elem>(gens.begin(), gens.end()));
}

Ideal principal_ideal(const RingPtr& ring, Elem a) {
  const Elem gens[] = {a};
  return ideal_generated(ring, gens);
}

Ideal zero_ideal(const RingPtr& ring) { return ideal_generated(ring, {}); }

Ideal intersect(const Ideal& a, const Ideal& b) {
  std::vector<Elem> common;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(common));
  return Ideal::from_members(a.ring(), std::move(common));
}

std::vector<Ideal> enumerate_ideals(const RingPtr& ring, std::size_t budget) {
  const FiniteRing& R = *ring;
  std::set<std::vector<Elem>> seen;
  std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>> found;  // members, gens
  auto push = [&](std::vector<Elem> members, std::vector<Elem> gens) {
    if (seen.insert(members).second) {
      if (seen.size() > budget) throw BudgetExceeded("ideal enumeration exceeded its budget");
      found.emplace_back(std::move(members), std::move(gens));
    }
  };
  push(ideal_closure(R, {}), {});
  for (std::size_t i = 0; i < found.size(); ++i) {
    std::vector<char> in(R.size(), 0);
    for (Elem x : found[i].first) in[x] = 1;
    for (Elem x = 0; x < R.size(); ++x) {
      if (in[x]) continue;
      auto gens = found[i].second;
      gens.push_back(x);
      push(ideal_closure(R, gens), gens);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<Ideal> out;
  out.reserve(found.size());
  for (auto& [members, gens] : found) {
    out.push_back(Ideal::from_members(ring, std::move(members), std::move(gens)));
  }
  return out;
}

bool is_prime_ideal(const Ideal& ideal) {
  if (ideal.is_whole()) return false;
  const FiniteRing& R = *ideal.ring();
  for (Elem a = 0; a < R.size(); ++a) {
    if (ideal.contains(a)) continue;
    for (Elem b = 0; b < R.size(); ++b)
      if (!ideal.contains(b) && ideal.contains(R.mul(a, b))) return false;
  }
  return true;
}

Ideal nilradical(const RingPtr& ring) {
  std::vector<Elem> nil;
  for (Elem x = 0; x < ring->size(); ++x)
    if (ring->is_nilpotent(x)) nil.push_back(x);
  return Ideal::from_members(ring, std::move(nil));
}

std::vector<Ideal> maximal_ideals(const RingPtr& ring) {
  const auto& dec = ring->decomposition();
  std::vector<Ideal> out;
  for (const auto& f : dec.factors) {
    std::vector<char> in_max(ring->size(), 0);
    for (Elem m : f.maximal) in_max[m] = 1;
    std::vector<Elem> members;
    for (Elem x = 0; x < ring->size(); ++x)
      if (in_max[ring->mul(f.idempotent(), x)]) members.push_back(x);
    out.push_back(Ideal::from_members(ring, std::move(members)));
  }
  return out;
}

Ideal jacobson_radical(const RingPtr& ring) {
  Ideal nil = nilradical(ring);
  std::vector<Elem> all(ring->size());
  for (Elem x = 0; x < ring->size(); ++x) all[x] = x;
  Ideal meet = Ideal::from_members(ring, std::move(all));
  for (const auto& m : maximal_ideals(ring)) meet = intersect(meet, m);
  if (!(meet == nil))
    throw ConsistencyError("nilradical and intersection of maximal ideals disagree on " +
                           ring->provenance());
  return nil;
}

// ---- corner rings and the local decomposition ----

CornerRing corner_ring(const FiniteRing& R, Elem e) {
  if (!R.is_idempotent(e)) throw StructureError("corner ring needs an idempotent");
  CornerRing c;
  c.idempotent = e;
  c.to_corner.assign(R.size(), 0);
  std::vector<char> in(R.size(), 0);
  for (Elem x = 0; x < R.size(); ++x) in[R.mul(e, x)] = 1;
  std::vector<Elem> position(R.size(), 0);
  for (Elem x = 0; x < R.size(); ++x)
    if (in[x]) {
      position[x] = static_cast<Elem>(c.from_corner.size());
      c.from_corner.push_back(x);
    }
  for (Elem x = 0; x < R.size(); ++x) c.to_corner[x] = position[R.mul(e, x)];
  const std::size_t n = c.from_corner.size();
  RingTables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t.add[i * n + j] = position[R.add(c.from_corner[i], c.from_corner[j])];
      t.mul[i * n + j] = position[R.mul(c.from_corner[i], c.from_corner[j])];
    }
  t.zero = position[R.zero()];
  t.one = position[e];
  for (Elem x : c.from_corner) t.labels.push_back(R.label(x));
  t.provenance = R.provenance() + " * " + R.label(e);
  FiniteRing::Options opt;
  opt.allow_zero_ring = true;
  c.ring = FiniteRing::create(std::move(t), std::move(opt));
  return c;
}

RingHom corner_projection(const RingPtr& ring, const CornerRing& corner) {
  return RingHom::create(ring, corner.ring, corner.to_corner);
}

std::vector<Elem> LocalDecomposition::components(Elem x) const {
  std::vector<Elem> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.corner.to_corner[x]);
  return out;
}

namespace {

std::shared_ptr<const LocalDecomposition> compute_decomposition(const FiniteRing& R) {
  auto dec = std::make_shared<LocalDecomposition>();
  if (R.is_zero_ring()) return dec;
  const auto& idem = R.idempotents();
  for (Elem e : idem) {
    if (e == R.zero()) continue;
    bool primitive = true;
    for (Elem f : idem)
      if (f != R.zero() && f != e && R.mul(f, e) == f) {
        primitive = false;
        break;
      }
    if (!primitive) continue;
    LocalFactor lf;
    lf.corner = corner_ring(R, e);
    const FiniteRing& F = *lf.corner.ring;
    std::size_t nonunits = 0;
    for (Elem y = 0; y < F.size(); ++y)
      if (!F.is_unit(y)) {
        lf.maximal.push_back(lf.corner.from_corner[y]);
        ++nonunits;
      }
    lf.residue_size = F.size() / nonunits;
    lf.is_field = nonunits == 1;
    dec->factors.push_back(std::move(lf));
  }
  Elem sum = R.zero();
  for (std::size_t i = 0; i < dec->factors.size(); ++i) {
    sum = R.add(sum, dec->factors[i].idempotent());
    for (std::size_t j = 0; j < i; ++j)
      if (R.mul(dec->factors[i].idempotent(), dec->factors[j].idempotent()) != R.zero())
        throw ConsistencyError("primitive idempotents are not orthogonal");
  }
  if (sum != R.one()) throw ConsistencyError("primitive idempotents do not sum to one");
  return dec;
}

}  // namespace

const LocalDecomposition& FiniteRing::decomposition() const {
  std::call_once(decomposition_once_, [this] { decomposition_ = compute_decomposition(*this); });
  return *decomposition_;
}

const LocalDecomposition& local_decomposition(const FiniteRing& ring) { return ring.decomposition(); }

Reassembly reassemble(const RingPtr& ring) {
  const auto& dec = ring->decomposition();
  if (dec.factors.empty()) throw StructureError("the zero ring has no local factors");
  std::vector<RingPtr> factors;
  for (const auto& f : dec.factors) factors.push_back(f.ring());
  ProductRing prod = direct_product(factors);
  std::vector<Elem> image(ring->size());
  for (Elem x = 0; x < ring->size(); ++x) image[x] = prod.ring->product_tag()->compose(dec.components(x));
  RingHom iso = RingHom::create(ring, prod.ring, std::move(image));
  if (!iso.injective() || !iso.surjective())
    throw ConsistencyError("local decomposition does not reassemble to the ring");
  return Reassembly{std::move(prod), std::move(iso)};
}

RingClass ring_class(const RingPtr& ring) {
  RingClass c;
  const FiniteRing& R = *ring;
  c.is_field = R.size() > 1 && R.units().size() == R.size() - 1;
  c.is_local = R.decomposition().factors.size() == 1;
  c.is_semisimple = jacobson_radical(ring).is_zero();
  c.is_vnr_ring = true;
  for (Elem x = 0; x < R.size(); ++x)
    if (!R.is_vnr(x)) c.is_vnr_ring = false;
  c.is_perfect = true;
  c.perfect_justification = kPerfectJustification;
  return c;
}

}  // namespace fcr
