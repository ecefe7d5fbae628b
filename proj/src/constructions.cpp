#include "fcr/constructions.hpp"

#include <limits>

namespace fcr {

QuotientRing quotient_ring(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  const FiniteRing& R = *ring;
  const Elem unset = std::numeric_limits<Elem>::max();
  std::vector<Elem> class_of(R.size(), unset);
  std::vector<Elem> rep;
  for (Elem x = 0; x < R.size(); ++x) {
    if (class_of[x] != unset) continue;
    const Elem c = static_cast<Elem>(rep.size());
    rep.push_back(x);
    for (Elem i : ideal.members()) class_of[R.add(x, i)] = c;
  }
  const std::size_t n = rep.size();
  RingTables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t.add[i * n + j] = class_of[R.add(rep[i], rep[j])];
      t.mul[i * n + j] = class_of[R.mul(rep[i], rep[j])];
    }
  t.zero = class_of[R.zero()];
  t.one = class_of[R.one()];
  for (Elem x : rep) t.labels.push_back(R.label(x));
  t.provenance = grouped(R.provenance()) + "/" + ideal.literal();
  FiniteRing::Options opt;
  opt.allow_zero_ring = true;
  RingPtr q = FiniteRing::create(std::move(t), std::move(opt));
  return QuotientRing{q, RingHom::create(ring, q, std::move(class_of))};
}

RingPtr trivial_extension(const RingPtr& ring, const ModulePtr& module) {
  const FiniteRing& R = *ring;
  const FiniteModule& M = *module;
  if (!same_ring(R, *M.ring())) throw StructureError("trivial extension: module is over a different ring");
  const std::size_t nr = R.size(), nm = M.size();
  if (nr * nm > limits().ring_cap)
    throw ConstructionError("trivial extension of size " + std::to_string(nr * nm) + " exceeds the cap");
  const std::size_t n = nr * nm;
  auto tag = std::make_shared<TrivialExtensionTag>();
  tag->base = ring;
  tag->part = module;
  tag->part_size = nm;
  RingTables t;
  t.size = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem r = static_cast<Elem>(x / nm), m = static_cast<Elem>(x % nm);
    tag->pairs.emplace_back(r, m);
    t.labels.push_back("(" + R.label(r) + "," + M.label(m) + ")");
    for (std::size_t y = 0; y < n; ++y) {
      const Elem r2 = static_cast<Elem>(y / nm), m2 = static_cast<Elem>(y % nm);
      t.add[x * n + y] = tag->index_of(R.add(r, r2), M.add(m, m2));
      t.mul[x * n + y] = tag->index_of(R.mul(r, r2), M.add(M.act(r, m2), M.act(r2, m)));
    }
  }
  t.zero = tag->index_of(R.zero(), M.zero());
  t.one = tag->index_of(R.one(), M.zero());
  t.provenance = "triv(" + R.provenance() + ", " + M.provenance() + ")";
  FiniteRing::Options opt;
  opt.trivial = tag;
  return FiniteRing::create(std::move(t), std::move(opt));
}

}  // namespace fcr
