#include "fcr/homological.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <unordered_set>

#include "fcr/constructions.hpp"

namespace fcr {

namespace {

std::string factor_name(const FiniteRing& R, std::size_t i) {
  const auto& f = R.decomposition().factors[i];
  return "factor " + std::to_string(i) + " (e=" + R.label(f.idempotent()) + ")";
}

std::size_t power_or_cap(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > (std::size_t{1} << 40) / std::max<std::size_t>(base, 1)) return std::size_t{1} << 40;
    out *= base;
  }
  return out;
}

}  // namespace

Verdict is_projective(const FiniteModule& M) {
  const FiniteRing& R = *M.ring();
  Verdict v;
  v.criterion = "projective";
  v.anchor = "e_iM free over R_i for every local factor R_i";
  v.authoritative = true;
  const ModuleProfile prof = module_profile(M);
  bool ok = true;
  for (std::size_t i = 0; i < prof.factors.size(); ++i) {
    const auto& fp = prof.factors[i];
    v.ranks.push_back(fp.rank);
    v.cost += fp.size;
    if (!fp.free && ok) {
      ok = false;
      const std::size_t ri = R.decomposition().factors[i].ring()->size();
      v.witness = Witness{"factor", factor_name(R, i),
                          "|e_iM| = " + std::to_string(fp.size) + " but |R_i|^" + std::to_string(fp.generators) +
                              " = " + std::to_string(power_or_cap(ri, fp.generators))};
    }
  }
  v.result = outcome_of(ok);
  return v;
}

Verdict is_free_local(const FiniteModule& M) {
  Verdict v = is_projective(M);
  v.criterion = "free";
  v.anchor = "M = R^k";
  if (v.holds()) {
    const auto& r = v.ranks;
    if (!r.empty() && std::adjacent_find(r.begin(), r.end(), std::not_equal_to<>()) != r.end()) {
      v.result = Outcome::False;
      v.witness = Witness{"module", M.provenance(), "projective with unequal local ranks"};
    }
  }
  return v;
}

Verdict is_flat(const FiniteModule& M) {
  Verdict v = is_projective(M);
  v.criterion = "flat";
  v.anchor = "M flat over R";
  v.note = kFlatJustification;
  return v;
}

// ---- split oracle ----

namespace {

/// Tries to extend generator images g_j -> vals[j] (j < count) to a hom from the
/// submodule they generate into R^k. Returns false on a conflict.
bool consistent_partial(const FiniteModule& M, const Coordinates& c, std::span<const Elem> gens,
                        std::span<const std::size_t> vals, std::vector<std::size_t>& img,
                        std::vector<std::pair<Elem, std::size_t>>& seeds, std::vector<char>& visited,
                        std::uint64_t& cost) {
  const std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::fill(img.begin(), img.end(), unset);
  std::fill(visited.begin(), visited.end(), 0);
  seeds.clear();
  img[M.zero()] = c.zero_vector();
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (Elem r = 0; r < M.ring()->size(); ++r) {
      const Elem x = M.act(r, gens[j]);
      const std::size_t y = c.scale(r, vals[j]);
      if (img[x] == unset) {
        img[x] = y;
        if (x != M.zero()) seeds.emplace_back(x, y);
      } else if (img[x] != y) {
        return false;
      }
    }
  std::vector<Elem> order{M.zero()};
  visited[M.zero()] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Elem a = order[i];
    for (auto [s, ys] : seeds) {
      ++cost;
      const Elem b = M.add(a, s);
      const std::size_t val = c.add(img[a], ys);
      if (img[b] == unset) {
        img[b] = val;
      } else if (img[b] != val) {
        return false;
      }
      if (!visited[b]) {
        visited[b] = 1;
        order.push_back(b);
      }
    }
  }
  return true;
}

}  // namespace

Verdict is_projective_split_oracle(const ModulePtr& m, std::size_t budget) {
  const FiniteModule& M = *m;
  Verdict v;
  v.criterion = "projective-split";
  v.anchor = "R^k -> M admits a section";
  const std::vector<Elem> gens = minimal_generators(M);
  const std::size_t k = gens.size();
  if (k == 0) {
    v.result = Outcome::True;
    v.note = "zero module";
    return v;
  }
  std::optional<Coordinates> coords;
  try {
    coords.emplace(M.ring(), k);
  } catch (const ConstructionError&) {
    v.note = "coordinate cap exceeded";
    return v;
  }
  const Coordinates& c = *coords;
  std::vector<std::vector<std::size_t>> fibre(k);
  std::vector<char> is_gen(M.size(), 0);
  for (std::size_t i = 0; i < k; ++i) is_gen[gens[i]] = 1;
  for (std::size_t x = 0; x < c.count(); ++x) {
    Elem s = M.zero();
    for (std::size_t i = 0; i < k; ++i) s = M.add(s, M.act(c.digit(x, i), gens[i]));
    if (is_gen[s])
      for (std::size_t i = 0; i < k; ++i)
        if (gens[i] == s) fibre[i].push_back(x);
  }
  v.cost = c.count() * k;
  std::vector<std::size_t> vals(k, 0), pick(k, 0);
  std::vector<std::size_t> img(M.size());
  std::vector<char> visited(M.size());
  std::vector<std::pair<Elem, std::size_t>> seeds;
  std::size_t checks = 0;
  // Depth-first over generators; a prefix that is already inconsistent prunes its subtree.
  std::size_t level = 0;
  while (true) {
    if (pick[level] == fibre[level].size()) {
      if (level == 0) break;
      pick[level] = 0;
      ++pick[--level];
      continue;
    }
    vals[level] = fibre[level][pick[level]];
    if (++checks > budget) {
      v.result = Outcome::Inconclusive;
      v.note = "budget of " + std::to_string(budget) + " candidate checks exhausted";
      return v;
    }
    const bool ok = consistent_partial(M, c, std::span<const Elem>(gens.data(), level + 1),
                                       std::span<const std::size_t>(vals.data(), level + 1), img, seeds, visited,
                                       v.cost);
    if (!ok) {
      ++pick[level];
      continue;
    }
    if (level + 1 == k) {
      v.result = Outcome::True;
      v.note = "section found after " + std::to_string(checks) + " candidate checks";
      return v;
    }
    ++level;
  }
  v.result = Outcome::False;
  v.witness = Witness{"module", M.provenance(), "no section among the lifts of " + std::to_string(k) +
                                                    " generators (" + std::to_string(checks) + " checks)"};
  return v;
}

// ---- S-flatness ----

std::optional<bool> factor_ideal_criterion(const ModulePtr& m, std::size_t factor, std::uint64_t* cost) {
  const FiniteRing& R = *m->ring();
  const auto& f = R.decomposition().factors.at(factor);
  ModulePtr mi = corner_module(m, f.corner);
  if (mi->is_zero()) return true;
  const std::vector<Elem> mgens = minimal_generators(*mi);
  for (const Ideal& ideal : enumerate_ideals(f.ring())) {
    if (ideal.is_zero()) continue;
    ModulePtr im = ideal_module(ideal);
    TensorProduct t;
    try {
      t = tensor(im, mi);
    } catch (const ConstructionError&) {
      return std::nullopt;
    }
    if (cost) *cost += t.module->size() + t.pure.size();
    const std::vector<Elem> igens = minimal_generators(*im);
    std::vector<Elem> gens, images;
    for (Elem a : igens)
      for (Elem b : mgens) {
        gens.push_back(t(a, b));
        images.push_back(mi->act(ideal.members()[a], b));
      }
    auto h = extend_hom(t.module, mi, gens, images);
    if (!h) throw ConsistencyError("multiplication map I (x) M -> M is not well defined on " + m->provenance());
    if (!h->injective()) return false;
  }
  return true;
}

RouteSet s_flat_routes(const ModulePtr& m, const MultSet& s) {
  RouteSet rs;
  rs.question = "S-flat";
  const LocalizationResult loc = localize_ring(s);
  const ModuleLocalization lm = localize_module(m, loc);

  Verdict a = is_flat(*lm.over_ring);
  a.criterion = "a";
  a.anchor = "M_S flat over R";
  a.authoritative = true;
  rs.routes.push_back(std::move(a));

  Verdict b = is_flat(*lm.over_localized);
  b.criterion = "b";
  b.anchor = "M_S flat over R_S";
  b.authoritative = false;
  rs.routes.push_back(std::move(b));

  Verdict c;
  c.criterion = "c";
  c.anchor = "(I (x) M)_S -> M_S injective for every ideal I";
  bool all = true, decided = true;
  for (std::size_t i = 0; i < loc.survives.size() && all; ++i) {
    if (!loc.survives[i]) continue;
    auto r = factor_ideal_criterion(m, i, &c.cost);
    if (!r) {
      decided = false;
    } else if (!*r) {
      all = false;
      c.witness = Witness{"factor", factor_name(*m->ring(), i), "some e_iI (x) e_iM -> e_iM has a kernel"};
    }
  }
  c.result = !all ? Outcome::False : decided ? Outcome::True : Outcome::Inconclusive;
  if (!decided && all) c.note = "tensor product over the cap";
  rs.routes.push_back(std::move(c));
  return rs;
}

Verdict is_s_flat(const ModulePtr& m, const MultSet& s) {
  RouteSet rs = s_flat_routes(m, s);
  if (!rs.agree())
    throw ConsistencyError("S-flat routes disagree on " + m->provenance() + " at " + s.literal());
  Verdict v = rs.primary();
  v.criterion = "S-flat";
  v.anchor = "M_S flat over R";
  for (const auto& r : rs.routes) v.note += (v.note.empty() ? "" : "; ") + r.criterion + "=" + to_string(r.result);
  return v;
}

Verdict is_s_projective(const ModulePtr& m, const MultSet& s) {
  const ModuleLocalization lm = localize_module(m, s);
  Verdict v = is_projective(*lm.over_ring);
  v.criterion = "S-projective";
  v.anchor = "M_S projective over R";
  return v;
}

// ---- dimensions ----

const char* to_string(HomologicalDim d) {
  switch (d) {
    case HomologicalDim::MinusInfinity:
      return "-inf";
    case HomologicalDim::Zero:
      return "0";
    case HomologicalDim::Infinite:
      return "inf";
  }
  return "inf";
}

HomologicalDim pd(const FiniteModule& m) {
  if (m.is_zero()) return HomologicalDim::MinusInfinity;
  return is_projective(m).holds() ? HomologicalDim::Zero : HomologicalDim::Infinite;
}

HomologicalDim fd(const FiniteModule& m) {
  if (m.is_zero()) return HomologicalDim::MinusInfinity;
  return is_flat(m).holds() ? HomologicalDim::Zero : HomologicalDim::Infinite;
}

HomologicalDim gldim(const RingPtr& ring) {
  return ring_class(ring).is_semisimple ? HomologicalDim::Zero : HomologicalDim::Infinite;
}

HomologicalDim wdim(const RingPtr& ring) {
  return ring_class(ring).is_vnr_ring ? HomologicalDim::Zero : HomologicalDim::Infinite;
}

ResolutionProbe resolution_probe(const ModulePtr& m, std::size_t depth) {
  ResolutionProbe probe;
  const bool projective = is_projective(*m).holds();
  if (m->is_zero()) {
    probe.terminated = probe.complete = true;
    return probe;
  }
  ModulePtr cur = m;
  probe.complete = true;
  for (std::size_t d = 0; d < depth; ++d) {
    ModulePtr syz;
    try {
      syz = syzygy_module(present(cur));
    } catch (const ConstructionError&) {
      probe.complete = false;
      break;
    }
    probe.syzygy_sizes.push_back(syz->size());
    if (syz->is_zero()) {
      probe.terminated = true;
      break;
    }
    if (is_projective(*syz).holds() != projective)
      throw ConsistencyError("syzygy " + std::to_string(d + 1) + " of " + m->provenance() +
                             " changes projectivity");
    cur = syz;
  }
  if (probe.terminated && !projective)
    throw ConsistencyError("finite free resolution of the non-projective module " + m->provenance());
  return probe;
}

// ---- sample pool ----

namespace {

std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = 1469598103934665603ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t table_hash(const FiniteModule& m) {
  const ModuleTables t = m.tables();
  std::uint64_t h = fnv1a(&t.size, sizeof t.size);
  h = fnv1a(&t.zero, sizeof t.zero, h);
  h = fnv1a(t.add.data(), t.add.size() * sizeof(Elem), h);
  return fnv1a(t.act.data(), t.act.size() * sizeof(Elem), h);
}

class PoolBuilder {
 public:
  PoolBuilder(const SampleOptions& o) : opts_(o) {}

  bool full() const { return pool_.modules.size() >= opts_.budget; }

  /// Adds unless too big or a duplicate; marks truncation once the budget is hit.
  template <class Make>
  void offer(Make&& make) {
    if (full()) {
      pool_.truncated = true;
      return;
    }
    ModulePtr m;
    try {
      m = make();
    } catch (const ConstructionError&) {
      return;
    }
    if (!m || m->size() > opts_.max_module_size) return;
    if (!seen_.insert(table_hash(*m)).second) return;
    pool_.modules.push_back(std::move(m));
  }

  SamplePool take() {
    if (full()) pool_.truncated = true;
    return std::move(pool_);
  }
  const std::vector<ModulePtr>& modules() const { return pool_.modules; }

 private:
  const SampleOptions& opts_;
  SamplePool pool_;
  std::unordered_set<std::uint64_t> seen_;
};

}  // namespace

SamplePool sample_modules(const RingPtr& ring, const SampleOptions& opts) {
  const FiniteRing& R = *ring;
  PoolBuilder b(opts);
  b.offer([&] { return zero_module(ring); });
  for (const Ideal& ideal : enumerate_ideals(ring))
    if (!ideal.is_whole()) b.offer([&] { return cyclic_module(ideal); });
  for (const auto& f : R.decomposition().factors) {
    const Ideal comp = principal_ideal(ring, R.sub(R.one(), f.idempotent()));
    b.offer([&] { return cyclic_module(comp); });
  }
  for (const Ideal& m : maximal_ideals(ring)) b.offer([&] { return cyclic_module(m); });
  b.offer([&] { return free_module(ring, 2); });

  std::vector<Elem> elems;
  if (opts.quotient_elements) {
    elems = *opts.quotient_elements;
  } else {
    for (Elem x = 0; x < R.size(); ++x) elems.push_back(x);
  }
  for (Elem s : elems) {
    const Ideal rs = principal_ideal(ring, s);
    const QuotientRing q = quotient_ring(rs);
    for (std::size_t k = 1; k <= 2; ++k)
      b.offer([&] {
        return restrict_scalars(q.map, free_module(q.ring, k),
                                "via(R/(" + R.label(s) + "), free(" + std::to_string(k) + "))");
      });
  }

  // Cokernels of a x k relation matrices, a <= 2, k <= 3.
  std::uint64_t mix = opts.seed ^ fnv1a(R.provenance().data(), R.provenance().size());
  std::mt19937_64 rng(mix);
  const std::size_t quota = std::max<std::size_t>(4, opts.budget / 12);
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t a = 1; a <= 2; ++a) {
      const std::size_t entries = a * k;
      const std::size_t total = power_or_cap(R.size(), entries);
      const bool exhaustive = total <= quota;
      const std::size_t draws = exhaustive ? total : quota;
      for (std::size_t d = 0; d < draws; ++d) {
        std::vector<std::vector<Elem>> rows(a, std::vector<Elem>(k));
        std::size_t code = d;
        for (std::size_t r = 0; r < a; ++r)
          for (std::size_t c = 0; c < k; ++c) {
            if (exhaustive) {
              rows[r][c] = static_cast<Elem>(code % R.size());
              code /= R.size();
            } else {
              rows[r][c] = static_cast<Elem>(rng() % R.size());
            }
          }
        b.offer([&] { return from_presentation(ring, k, rows); });
      }
    }

  // Pairwise sums in diagonal order: (0,0), (0,1), (1,1), (0,2), ...
  const std::vector<ModulePtr> base = b.modules();
  for (std::size_t j = 0; j < base.size() && !b.full(); ++j)
    for (std::size_t i = 0; i <= j && !b.full(); ++i) {
      if (base[i]->size() * base[j]->size() > opts.max_module_size) continue;
      b.offer([&] { return direct_sum(base[i], base[j]).module; });
    }
  return b.take();
}

}  // namespace fcr
