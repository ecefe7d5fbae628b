// Randomized and exhaustive properties over small rings.

#include <random>

#include <gtest/gtest.h>

#include "fcr/classifier.hpp"
#include "fcr/constructions.hpp"
#include "fcr/homological.hpp"
#include "util.hpp"

using namespace fcr;
using namespace fcr::test;

namespace {

const std::vector<std::string>& rings() {
  static const std::vector<std::string> r = {"Z/4",       "Z/6",        "Z/8",           "Z/9",
                                             "Z/10",      "Z/12",       "Z/16",          "Z/2 x Z/4",
                                             "GF(2,x^2)", "GF(3,x^2)", "triv(Z/2, Z/2)", "triv(Z/3, Z/3)",
                                             "Z/2 x Z/2 x Z/3", "triv(Z/4, R/(2))"};
  return r;
}

class PerRing : public ::testing::TestWithParam<std::string> {};

}  // namespace

TEST_P(PerRing, AxiomsAndRadicals) {
  const RingPtr r = ring(GetParam());
  EXPECT_FALSE(ring_axiom_violation(r->tables()).has_value());
  const Ideal j = jacobson_radical(r);
  EXPECT_TRUE(j == nilradical(r));
  const Elem one[] = {r->one()};
  Ideal meet = ideal_generated(r, one);
  for (const auto& m : maximal_ideals(r)) meet = intersect(meet, m);
  EXPECT_TRUE(meet == j);
  for (Elem x = 0; x < r->size(); ++x) {
    EXPECT_EQ(j.contains(x), r->is_nilpotent(x));
    EXPECT_EQ(r->is_vnr(x), vnr_factorization(*r, x).has_value());
    if (auto f = vnr_factorization(*r, x)) {
      EXPECT_TRUE(r->is_unit(f->unit));
      EXPECT_TRUE(r->is_idempotent(f->idempotent));
      EXPECT_EQ(r->mul(f->unit, f->idempotent), x);
    }
  }
}

TEST_P(PerRing, DecompositionIsOrthogonalAndLocal) {
  const RingPtr r = ring(GetParam());
  const auto& d = local_decomposition(*r);
  Elem sum = r->zero();
  std::size_t product = 1;
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    const Elem e = d.factors[i].idempotent();
    EXPECT_EQ(r->mul(e, e), e);
    sum = r->add(sum, e);
    product *= d.factors[i].ring()->size();
    EXPECT_EQ(maximal_ideals(d.factors[i].ring()).size(), 1u);
    for (std::size_t k = i + 1; k < d.factors.size(); ++k) EXPECT_EQ(r->mul(e, d.factors[k].idempotent()), r->zero());
  }
  EXPECT_EQ(sum, r->one());
  EXPECT_EQ(product, r->size());
}

TEST_P(PerRing, LocalizationProperties) {
  const RingPtr r = ring(GetParam());
  SampleOptions o;
  o.budget = 25;
  const SamplePool pool = sample_modules(r, o);
  for (const auto& s : enumerate_mult_sets(r)) {
    const LocalizationResult loc = localize_ring(s);
    const Elem e = loc.surviving_idempotent;
    EXPECT_EQ(r->mul(e, e), e);
    std::size_t expected = 1;
    const auto& d = local_decomposition(*r);
    for (std::size_t i = 0; i < d.factors.size(); ++i)
      if (loc.survives[i]) expected *= d.factors[i].ring()->size();
    EXPECT_EQ(loc.localized_ring->size(), expected);
    EXPECT_FALSE(loc.localized_ring->is_zero_ring());
    for (const auto& m : pool.modules) {
      if (m->size() > 64) continue;
      const ModuleLocalization ml = localize_module(m, loc);
      // eM over R localizes to itself.
      const ModuleLocalization twice = localize_module(ml.over_ring, loc);
      EXPECT_TRUE(twice.pi.injective() && twice.pi.surjective()) << m->provenance() << " " << s.literal();
      EXPECT_TRUE(ml.pi.surjective());
      // M = eM (+) (1 - e)M.
      EXPECT_EQ(ml.over_ring->size() * idempotent_part(m, r->sub(r->one(), e)).size(), m->size());
    }
  }
}

TEST_P(PerRing, ClassifierInvariants) {
  const RingPtr r = ring(GetParam());
  Classifier c;
  RingAnalysis& a = c.analysis(r);
  const auto all = enumerate_mult_sets(r);
  std::vector<bool> perfect;
  for (const auto& s : all) {
    const RouteSet v = s_weakly_vnr_routes(a, s);
    const RouteSet p = s_perfect_routes(a, s);
    EXPECT_TRUE(v.agree()) << s.literal();
    EXPECT_TRUE(p.agree()) << s.literal();
    // Finite rings: S-perfect and S-weakly VNR coincide.
    EXPECT_EQ(v.primary().holds(), p.primary().holds()) << s.literal();
    if (ring_class(r).is_semisimple) EXPECT_TRUE(p.primary().holds());
    if (s.within_units()) EXPECT_TRUE(p.primary().holds());
    perfect.push_back(p.primary().holds());
    // Transport along the local decomposition preserves the decision.
    const Reassembly re = reassemble(r);
    EXPECT_EQ(s_perfect_decision(pushforward_mult_set(re.iso, s)), perfect.back());
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j)
      if (all[j].subset_of(all[i]) && perfect[i]) EXPECT_TRUE(perfect[j]) << all[j].literal() << " in " << all[i].literal();
}

INSTANTIATE_TEST_SUITE_P(Catalog, PerRing, ::testing::ValuesIn(rings()), [](const auto& info) {
  std::string n;
  for (char ch : info.param) n += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
  return n;
});

TEST(RandomModules, ProjectivityAndFlatnessAreAdditive) {
  std::mt19937 rng(20261014);
  for (const char* t : {"Z/12", "Z/2 x Z/4", "triv(Z/2, Z/2)", "Z/9"}) {
    const RingPtr r = ring(t);
    SampleOptions o;
    o.budget = 40;
    const SamplePool pool = sample_modules(r, o);
    std::uniform_int_distribution<std::size_t> pick(0, pool.modules.size() - 1);
    for (int k = 0; k < 25; ++k) {
      const ModulePtr a = pool.modules[pick(rng)], b = pool.modules[pick(rng)];
      if (a->size() * b->size() > 256) continue;
      const ModulePtr s = direct_sum(a, b).module;
      EXPECT_EQ(is_projective(*s).holds(), is_projective(*a).holds() && is_projective(*b).holds())
          << t << " " << s->provenance();
      const auto split = is_projective_split_oracle(s);
      if (split.decided()) EXPECT_EQ(split.holds(), is_projective(*s).holds()) << s->provenance();
    }
  }
}

TEST(RandomModules, TensorWithFreeIsIdentity) {
  std::mt19937 rng(7);
  for (const char* t : {"Z/12", "Z/2 x Z/4", "GF(3,x^2)"}) {
    const RingPtr r = ring(t);
    SampleOptions o;
    o.budget = 30;
    const SamplePool pool = sample_modules(r, o);
    std::uniform_int_distribution<std::size_t> pick(0, pool.modules.size() - 1);
    for (int k = 0; k < 10; ++k) {
      const ModulePtr m = pool.modules[pick(rng)];
      if (m->size() > 64) continue;
      EXPECT_EQ(tensor(free_module(r, 1), m).module->size(), m->size()) << m->provenance();
      const ModulePtr n = pool.modules[pick(rng)];
      if (n->size() > 16) continue;
      EXPECT_EQ(tensor(m, n).module->size(), tensor(n, m).module->size()) << m->provenance() << " " << n->provenance();
    }
  }
}

TEST(RandomProducts, FactorCountsAdd) {
  std::mt19937 rng(3);
  const std::vector<std::string> pool = {"Z/2", "Z/3", "Z/4", "Z/6", "GF(2,x^2)", "triv(Z/2, Z/2)"};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int k = 0; k < 12; ++k) {
    const RingPtr a = ring(pool[pick(rng)]), b = ring(pool[pick(rng)]);
    const RingPtr fs[] = {a, b};
    const RingPtr p = direct_product(fs).ring;
    EXPECT_EQ(local_decomposition(*p).factors.size(),
              local_decomposition(*a).factors.size() + local_decomposition(*b).factors.size());
    EXPECT_EQ(jacobson_radical(p).size(), jacobson_radical(a).size() * jacobson_radical(b).size());
  }
}
