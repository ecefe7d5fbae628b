#include "fcr/fraction.hpp"

#include "fcr/error.hpp"

namespace fcr {

namespace {

struct Classes {
  std::vector<std::size_t> of;
  std::vector<std::size_t> reps;
};

/// Pair p = (x, si) with x < n, si indexing S.members(); `related(p, q)` decides equivalence.
template <class Related>
Classes classify_pairs(std::size_t n, std::size_t k, Related related) {
  const std::size_t total = n * k;
  Classes c;
  c.of.assign(total, total);
  for (std::size_t p = 0; p < total; ++p) {
    if (c.of[p] != total) continue;
    const std::size_t id = c.reps.size();
    c.reps.push_back(p);
    for (std::size_t q = p; q < total; ++q)
      if (c.of[q] == total && related(p, q)) c.of[q] = id;
  }
  return c;
}

}  // namespace

FractionRing fraction_ring(const MultSet& s) {
  const RingPtr& ring = s.ring();
  const FiniteRing& R = *ring;
  const auto& S = s.members();
  const std::size_t n = R.size(), k = S.size();
  if (n * k > 4096) throw ConstructionError("fraction ring too large");
  auto num = [&](std::size_t p) { return static_cast<Elem>(p / k); };
  auto den = [&](std::size_t p) { return S[p % k]; };
  auto related = [&](std::size_t p, std::size_t q) {
    const Elem d = R.sub(R.mul(num(p), den(q)), R.mul(num(q), den(p)));
    for (Elem t : S)
      if (R.mul(t, d) == R.zero()) return true;
    return false;
  };
  const Classes c = classify_pairs(n, k, related);
  std::vector<std::size_t> index_of_den(n, k);
  for (std::size_t i = 0; i < k; ++i) index_of_den[S[i]] = i;
  auto pair = [&](Elem r, Elem d) { return static_cast<std::size_t>(r) * k + index_of_den[d]; };

  const std::size_t m = c.reps.size();
  RingTables t;
  t.size = m;
  t.add.resize(m * m);
  t.mul.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t p = c.reps[i], q = c.reps[j];
      const Elem a = num(p), sa = den(p), b = num(q), sb = den(q);
      const Elem st = R.mul(sa, sb);
      t.add[i * m + j] = static_cast<Elem>(c.of[pair(R.add(R.mul(a, sb), R.mul(b, sa)), st)]);
      t.mul[i * m + j] = static_cast<Elem>(c.of[pair(R.mul(a, b), st)]);
    }
  t.zero = static_cast<Elem>(c.of[pair(R.zero(), R.one())]);
  t.one = static_cast<Elem>(c.of[pair(R.one(), R.one())]);
  for (std::size_t i = 0; i < m; ++i) t.labels.push_back(R.label(num(c.reps[i])) + "/" + R.label(den(c.reps[i])));
  t.provenance = "frac(" + R.provenance() + ", " + s.literal() + ")";
  FractionRing out;
  out.ring = FiniteRing::create(std::move(t));
  out.canonical.resize(n);
  for (Elem x = 0; x < n; ++x) out.canonical[x] = static_cast<Elem>(c.of[pair(x, R.one())]);
  return out;
}

FractionModule fraction_module(const FiniteModule& m, const MultSet& s) {
  const auto& S = s.members();
  const std::size_t n = m.size(), k = S.size();
  if (n * k > 1u << 16) throw ConstructionError("fraction module too large");
  auto el = [&](std::size_t p) { return static_cast<Elem>(p / k); };
  auto den = [&](std::size_t p) { return S[p % k]; };
  auto related = [&](std::size_t p, std::size_t q) {
    const Elem d = m.sub(m.act(den(q), el(p)), m.act(den(p), el(q)));
    for (Elem t : S)
      if (m.act(t, d) == m.zero()) return true;
    return false;
  };
  const Classes c = classify_pairs(n, k, related);
  std::vector<std::size_t> index_of_den(s.ring()->size(), k);
  for (std::size_t i = 0; i < k; ++i) index_of_den[S[i]] = i;
  auto pair = [&](Elem x, Elem d) { return static_cast<std::size_t>(x) * k + index_of_den[d]; };
  const FiniteRing& R = *s.ring();
  const std::size_t q = c.reps.size();
  ModuleTables t;
  t.size = q;
  t.add.resize(q * q);
  t.act.resize(R.size() * q);
  for (std::size_t i = 0; i < q; ++i) {
    const Elem x = el(c.reps[i]), sx = den(c.reps[i]);
    for (std::size_t j = 0; j < q; ++j) {
      const Elem y = el(c.reps[j]), sy = den(c.reps[j]);
      t.add[i * q + j] = static_cast<Elem>(c.of[pair(m.add(m.act(sy, x), m.act(sx, y)), R.mul(sx, sy))]);
    }
    for (Elem r = 0; r < R.size(); ++r) t.act[r * q + i] = static_cast<Elem>(c.of[pair(m.act(r, x), sx)]);
    t.labels.push_back(m.label(x) + "/" + R.label(sx));
  }
  t.zero = static_cast<Elem>(c.of[pair(m.zero(), R.one())]);
  t.provenance = "frac(" + m.provenance() + ")";
  FractionModule out;
  out.module = FiniteModule::create(s.ring(), std::move(t));
  out.canonical.resize(n);
  for (Elem x = 0; x < n; ++x) out.canonical[x] = c.of[pair(x, R.one())];
  return out;
}

LocalizationCheck compare_localizations(const MultSet& s) {
  LocalizationCheck chk;
  const FractionRing f = fraction_ring(s);
  const LocalizationResult loc = localize_ring(s);
  chk.sizes_match = f.ring->size() == loc.localized_ring->size();
  if (chk.sizes_match) {
    try {
      chk.isomorphic = find_ring_isomorphism(f.ring, loc.localized_ring).has_value();
    } catch (const BudgetExceeded&) {
      chk.isomorphic.reset();
    }
  } else {
    chk.isomorphic = false;
  }
  const FiniteRing& R = *s.ring();
  chk.kernels_match = true;
  for (Elem x = 0; x < R.size(); ++x) {
    const bool dies_frac = f.canonical[x] == f.ring->zero();
    const bool dies_loc = loc.pi(x) == loc.localized_ring->zero();
    if (dies_frac != dies_loc) chk.kernels_match = false;
  }
  return chk;
}

LocalizationCheck compare_module_localizations(const ModulePtr& m, const MultSet& s) {
  LocalizationCheck chk;
  const FractionModule f = fraction_module(*m, s);
  const ModuleLocalization ml = localize_module(m, s);
  chk.sizes_match = f.module->size() == ml.over_ring->size();
  if (chk.sizes_match) {
    try {
      chk.isomorphic = find_module_isomorphism(f.module, ml.over_ring).has_value();
    } catch (const BudgetExceeded&) {
      chk.isomorphic.reset();
    }
  } else {
    chk.isomorphic = false;
  }
  chk.kernels_match = true;
  const std::size_t zero_class = f.canonical[m->zero()];
  for (Elem x = 0; x < m->size(); ++x) {
    const bool dies_frac = f.canonical[x] == zero_class;
    const bool dies_loc = ml.pi(x) == ml.over_ring->zero();
    if (dies_frac != dies_loc) chk.kernels_match = false;
  }
  return chk;
}

}  // namespace fcr
