#include "fcr/multset.hpp"

#include <algorithm>
#include <set>

namespace fcr {

namespace {

std::vector<Elem> closure_members(const FiniteRing& R, std::span<const Elem> gens) {
  std::vector<char> in(R.size(), 0);
  std::vector<Elem> list{R.one()};
  in[R.one()] = 1;
  std::vector<Elem> step;
  for (Elem g : gens) {
    if (g >= R.size()) throw StructureError("multiplicative generator out of range");
    if (std::find(step.begin(), step.end(), g) == step.end()) step.push_back(g);
  }
  for (std::size_t i = 0; i < list.size(); ++i)
    for (Elem g : step) {
      const Elem y = R.mul(list[i], g);
      if (!in[y]) {
        in[y] = 1;
        list.push_back(y);
      }
    }
  std::sort(list.begin(), list.end());
  return list;
}

}  // namespace

MultSet::MultSet(RingPtr ring, std::vector<Elem> members, std::vector<Elem> generators)
    : ring_(std::move(ring)), members_(std::move(members)), generators_(std::move(generators)),
      mask_(ring_->size(), 0) {
  for (Elem x : members_) mask_[x] = 1;
}

MultSet MultSet::from_members(RingPtr ring, std::vector<Elem> members, std::vector<Elem> generators) {
  const FiniteRing& R = *ring;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<char> in(R.size(), 0);
  for (Elem x : members) {
    if (x >= R.size()) throw StructureError("multiplicative set member out of range");
    in[x] = 1;
  }
  if (in[R.zero()]) throw ZeroAbsorbed("multiplicative set contains zero");
  if (!in[R.one()]) throw StructureError("multiplicative set does not contain one");
  for (Elem a : members)
    for (Elem b : members)
      if (!in[R.mul(a, b)]) throw StructureError("multiplicative set is not closed under products");
  if (generators.empty()) {
    for (Elem x : members)
      if (x != R.one()) generators.push_back(x);
  } else if (closure_members(R, generators) != members) {
    throw StructureError("multiplicative set differs from the closure of its generators");
  }
  return MultSet(std::move(ring), std::move(members), std::move(generators));
}

bool MultSet::subset_of(const MultSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

bool MultSet::within_units() const {
  return std::all_of(members_.begin(), members_.end(), [this](Elem x) { return ring_->is_unit(x); });
}

std::string MultSet::literal() const {
  std::vector<Elem> gens;
  for (Elem g : generators_)
    if (g != ring_->one()) gens.push_back(g);
  if (gens.empty()) return "S=1";
  std::string out = "S{";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += ring_->label(gens[i]);
  }
  return out + "}";
}

MultSet mult_closure(const RingPtr& ring, std::span<const Elem> gens) {
  std::vector<Elem> members = closure_members(*ring, gens);
  if (std::binary_search(members.begin(), members.end(), ring->zero()))
    throw ZeroAbsorbed("multiplicative closure reaches zero in " + ring->provenance());
  return MultSet(ring, std::move(members), std::vector<Elem>(gens.begin(), gens.end()));
}

MultSet trivial_mult_set(const RingPtr& ring) { return mult_closure(ring, {}); }

MultSet unit_mult_set(const RingPtr& ring) { return mult_closure(ring, ring->units()); }

std::vector<MultSet> enumerate_mult_sets(const RingPtr& ring, std::size_t budget) {
  const FiniteRing& R = *ring;
  std::set<std::vector<Elem>> seen;
  std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>> found;
  auto push = [&](std::vector<Elem> members, std::vector<Elem> gens) {
    if (std::binary_search(members.begin(), members.end(), R.zero())) return;
    if (seen.insert(members).second) {
      if (seen.size() > budget) throw BudgetExceeded("multiplicative set enumeration exceeded its budget");
      found.emplace_back(std::move(members), std::move(gens));
    }
  };
  push(closure_members(R, {}), {});
  for (std::size_t i = 0; i < found.size(); ++i) {
    std::vector<char> in(R.size(), 0);
    for (Elem x : found[i].first) in[x] = 1;
    for (Elem x = 0; x < R.size(); ++x) {
      if (in[x] || R.is_nilpotent(x)) continue;
      auto gens = found[i].second;
      gens.push_back(x);
      push(closure_members(R, gens), gens);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<MultSet> out;
  out.reserve(found.size());
  for (auto& [members, gens] : found) out.push_back(MultSet::from_members(ring, std::move(members), std::move(gens)));
  return out;
}

// ---- localization ----

LocalizationResult localize_ring(const MultSet& s) {
  const RingPtr& ring = s.ring();
  const FiniteRing& R = *ring;
  const auto& dec = R.decomposition();
  std::vector<bool> survives;
  Elem e = R.zero();
  for (const auto& f : dec.factors) {
    const FiniteRing& F = *f.ring();
    bool ok = true;
    for (Elem x : s.members())
      if (!F.is_unit(f.corner.to_corner[x])) {
        ok = false;
        break;
      }
    survives.push_back(ok);
    if (ok) e = R.add(e, f.idempotent());
  }
  CornerRing corner;
  if (e == R.one()) {
    corner.ring = ring;
    corner.idempotent = e;
    for (Elem x = 0; x < R.size(); ++x) {
      corner.to_corner.push_back(x);
      corner.from_corner.push_back(x);
    }
  } else {
    corner = corner_ring(R, e);
  }
  RingHom pi = e == R.one() ? RingHom::identity(ring) : corner_projection(ring, corner);
  return LocalizationResult{corner.ring, std::move(pi), e, std::move(survives), std::move(corner)};
}

ModuleLocalization localize_module(const ModulePtr& m, const LocalizationResult& loc) {
  const Elem e = loc.surviving_idempotent;
  if (e == m->ring()->one()) return ModuleLocalization{m, ModuleHom::identity(m), corner_module(m, loc.corner), e};
  Submodule part = idempotent_part(m, e);
  ModulePtr over = as_module(part, "(" + m->provenance() + ")_S");
  std::vector<Elem> pos(m->size(), 0);
  for (std::size_t i = 0; i < part.members.size(); ++i) pos[part.members[i]] = static_cast<Elem>(i);
  std::vector<Elem> image(m->size());
  for (Elem x = 0; x < m->size(); ++x) image[x] = pos[m->act(e, x)];
  ModuleHom pi = ModuleHom::create(m, over, std::move(image));
  return ModuleLocalization{over, std::move(pi), corner_module(m, loc.corner), e};
}

ModuleLocalization localize_module(const ModulePtr& m, const MultSet& s) {
  if (!same_ring(*m->ring(), *s.ring())) throw StructureError("localize_module: module and set live over different rings");
  return localize_module(m, localize_ring(s));
}

TorsionReport s_torsion_and_divisibility(const ModulePtr& m, const MultSet& s) {
  const FiniteModule& M = *m;
  TorsionReport rep;
  rep.torsion = Submodule{m, {}, std::vector<char>(M.size(), 0)};
  for (Elem x = 0; x < M.size(); ++x) {
    bool killed = false;
    for (Elem t : s.members())
      if (M.act(t, x) == M.zero()) {
        killed = true;
        break;
      }
    if (killed) {
      rep.torsion.members.push_back(x);
      rep.torsion.mask[x] = 1;
    } else if (!rep.torsion_witness) {
      rep.torsion_witness = x;
    }
  }
  rep.is_s_torsion = rep.torsion.size() == M.size();
  std::vector<char> hit(M.size());
  for (Elem t : s.members()) {
    std::fill(hit.begin(), hit.end(), 0);
    std::size_t count = 0;
    for (Elem x = 0; x < M.size(); ++x) {
      const Elem y = M.act(t, x);
      if (!hit[y]) {
        hit[y] = 1;
        ++count;
      }
    }
    if (count != M.size()) {
      rep.divisibility_witness = t;
      break;
    }
  }
  rep.is_s_divisible = !rep.divisibility_witness;
  return rep;
}

bool is_s_divisible(const FiniteModule& M, const MultSet& s) {
  std::vector<char> hit(M.size());
  for (Elem t : s.members()) {
    std::fill(hit.begin(), hit.end(), 0);
    for (Elem x = 0; x < M.size(); ++x) hit[M.act(t, x)] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return false;
  }
  return true;
}

std::optional<Elem> ideal_divisibility_witness(const Ideal& ideal, const MultSet& s) {
  const FiniteRing& R = *ideal.ring();
  std::vector<char> hit(R.size());
  for (Elem t : s.members()) {
    std::fill(hit.begin(), hit.end(), 0);
    std::size_t count = 0;
    for (Elem x : ideal.members()) {
      const Elem y = R.mul(t, x);
      if (!hit[y]) {
        hit[y] = 1;
        ++count;
      }
    }
    if (count != ideal.size()) return t;
  }
  return std::nullopt;
}

MultSet pushforward_mult_set(const RingHom& f, const MultSet& s) {
  if (!same_ring(*f.domain(), *s.ring())) throw StructureError("pushforward: set is not on the domain");
  std::vector<Elem> gens;
  for (Elem g : s.generators()) gens.push_back(f(g));
  for (Elem x : s.members())
    if (f(x) == f.codomain()->zero()) throw ZeroAbsorbed("the image of the multiplicative set contains zero");
  return mult_closure(f.codomain(), gens);
}

MultSet extract_s1(const MultSet& s) {
  const TrivialExtensionTag* tag = s.ring()->trivial_tag();
  if (!tag) throw StructureError("extract_s1 needs a trivial extension");
  std::vector<Elem> members, gens;
  for (Elem x : s.members()) members.push_back(tag->pairs[x].first);
  for (Elem g : s.generators()) gens.push_back(tag->pairs[g].first);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return MultSet::from_members(tag->base, std::move(members), std::move(gens));
}

MultSet trivial_extension_mult_set(const RingPtr& extension, const MultSet& base, const Submodule& part) {
  const TrivialExtensionTag* tag = extension->trivial_tag();
  if (!tag) throw StructureError("trivial_extension_mult_set needs a trivial extension");
  if (!same_ring(*tag->base, *base.ring())) throw StructureError("set is not on the base ring");
  std::vector<Elem> members, gens;
  for (Elem r : base.members())
    for (Elem n : part.members) members.push_back(tag->index_of(r, n));
  for (Elem g : base.generators()) gens.push_back(tag->index_of(g, tag->part->zero()));
  for (Elem n : part.members)
    if (n != tag->part->zero()) gens.push_back(tag->index_of(tag->base->one(), n));
  return MultSet::from_members(extension, std::move(members), std::move(gens));
}

std::optional<std::pair<MultSet, Submodule>> split_trivial_extension_mult_set(const MultSet& s) {
  const TrivialExtensionTag* tag = s.ring()->trivial_tag();
  if (!tag) return std::nullopt;
  const FiniteModule& M = *tag->part;
  MultSet s1 = extract_s1(s);
  Submodule n{tag->part, {}, std::vector<char>(M.size(), 0)};
  for (Elem x : s.members())
    if (tag->pairs[x].first == tag->base->one()) {
      n.members.push_back(tag->pairs[x].second);
      n.mask[tag->pairs[x].second] = 1;
    }
  std::sort(n.members.begin(), n.members.end());
  if (s.size() != s1.size() * n.size()) return std::nullopt;
  for (Elem a : n.members) {
    for (Elem b : n.members)
      if (!n.mask[M.add(a, b)]) return std::nullopt;
    for (Elem r = 0; r < tag->base->size(); ++r)
      if (!n.mask[M.act(r, a)]) return std::nullopt;
  }
  for (Elem r : s1.members())
    for (Elem m : n.members)
      if (!s.contains(tag->index_of(r, m))) return std::nullopt;
  return std::make_pair(std::move(s1), std::move(n));
}

ProjectedSet project_to_product_factor(const MultSet& s, std::size_t i) {
  const ProductTag* tag = s.ring()->product_tag();
  if (!tag) throw StructureError("projection needs a product ring");
  if (i >= tag->factors.size()) throw StructureError("factor index out of range");
  ProjectedSet p;
  p.factor = tag->factors[i];
  for (Elem x : s.members()) p.members.push_back(tag->components[x][i]);
  std::sort(p.members.begin(), p.members.end());
  p.members.erase(std::unique(p.members.begin(), p.members.end()), p.members.end());
  p.contains_zero = std::binary_search(p.members.begin(), p.members.end(), p.factor->zero());
  if (!p.contains_zero) {
    std::vector<Elem> gens;
    for (Elem g : s.generators()) gens.push_back(tag->components[g][i]);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    p.set = MultSet::from_members(p.factor, p.members, std::move(gens));
  }
  return p;
}

const char* to_string(FactorStatus status) {
  switch (status) {
    case FactorStatus::ContainsZero:
      return "contains-zero";
    case FactorStatus::UnitsOnly:
      return "units-only";
    case FactorStatus::Other:
      return "other";
  }
  return "other";
}

std::vector<FactorStatus> local_factor_status(const MultSet& s) {
  const FiniteRing& R = *s.ring();
  std::vector<FactorStatus> out;
  for (const auto& f : R.decomposition().factors) {
    const FiniteRing& F = *f.ring();
    bool zero = false, units = true;
    for (Elem x : s.members()) {
      const Elem y = f.corner.to_corner[x];
      if (y == F.zero()) zero = true;
      if (!F.is_unit(y)) units = false;
    }
    out.push_back(zero ? FactorStatus::ContainsZero : units ? FactorStatus::UnitsOnly : FactorStatus::Other);
  }
  return out;
}

std::vector<Elem> meet_radical(const MultSet& s) {
  std::vector<Elem> out;
  for (Elem x : s.members())
    if (s.ring()->is_nilpotent(x)) out.push_back(x);
  return out;
}

}  // namespace fcr
