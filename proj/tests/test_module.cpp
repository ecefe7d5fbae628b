#include <gtest/gtest.h>

#include "fcr/constructions.hpp"
#include "fcr/error.hpp"
#include "fcr/homological.hpp"
#include "util.hpp"

using namespace fcr;
using namespace fcr::test;

TEST(Modules, CyclicAndFree) {
  const RingPtr r = make_zmod(12);
  const ModulePtr c = cyclic_module(principal_ideal(r, el(r, "4")));
  EXPECT_EQ(c->size(), 4u);
  EXPECT_TRUE(find_module_isomorphism(c, mod(r, "R/(4)")).has_value());
  EXPECT_EQ(free_module(make_zmod(6), 2)->size(), 36u);
}

TEST(Modules, RestrictionOfScalarsAlongMod2) {
  const RingPtr r = make_zmod(12);
  const RingPtr q = make_zmod(2);
  std::vector<Elem> img(12);
  for (Elem x = 0; x < 12; ++x) img[x] = q->from_integer(x);
  const ModulePtr m = restrict_scalars(RingHom::create(r, q, img), free_module(q, 1));
  ASSERT_EQ(m->size(), 2u);
  const Elem one = m->parse_element("1").value_or(1);
  EXPECT_EQ(m->act(el(r, "4"), one), m->zero());
  EXPECT_EQ(m->act(el(r, "9"), one), one);
}

TEST(Modules, AxiomCheckRejectsBrokenTable) {
  ModuleTables t = free_module(make_zmod(4), 1)->tables();
  t.act[2 * 4 + 1] = 1;
  EXPECT_THROW(FiniteModule::create(make_zmod(4), t), StructureError);
}

TEST(MinimalGenerators, Examples) {
  const RingPtr r = make_zmod(12);
  EXPECT_EQ(minimal_generators(*mod(r, "R/(4)")).size(), 1u);
  const RingPtr f2 = make_zmod(2);
  EXPECT_EQ(minimal_generators(*free_module(f2, 2)).size(), 2u);
  EXPECT_TRUE(minimal_generators(*zero_module(r)).empty());
  EXPECT_EQ(minimal_generators(*mod(r, "R/(2) (+) R/(3)")).size(), 1u);
}

TEST(Projectivity, SizeTestOverZ12) {
  const RingPtr r = make_zmod(12);
  const Verdict z3 = is_projective(*mod(r, "R/(3)"));
  EXPECT_TRUE(z3.holds());
  // Free of rank 1 on the Z/3 factor, rank 0 on the Z/4 factor; factor order follows the ring.
  std::vector<std::size_t> ranks = z3.ranks;
  std::sort(ranks.begin(), ranks.end());
  EXPECT_EQ(ranks, (std::vector<std::size_t>{0, 1}));
  EXPECT_FALSE(is_projective(*mod(r, "R/(2)")).holds());
  for (std::size_t k = 0; k < 3; ++k) EXPECT_TRUE(is_projective(*free_module(r, k)).holds());
}

TEST(Projectivity, SplitOracleAgrees) {
  const RingPtr r = make_zmod(12);
  EXPECT_TRUE(is_projective_split_oracle(mod(r, "R/(3)")).holds());
  EXPECT_TRUE(is_projective_split_oracle(mod(r, "R/(2)")).fails());
  EXPECT_TRUE(is_projective_split_oracle(free_module(r, 1)).holds());
}

TEST(Projectivity, FlatEqualsProjective) {
  const RingPtr r = ring("Z/2 x Z/4");
  for (const char* m : {"free(1)", "R/((1,0))", "R/((0,2))", "R/((1,2))", "R/((0,2)) (+) free(1)"}) {
    const ModulePtr x = mod(r, m);
    EXPECT_EQ(is_flat(*x).result, is_projective(*x).result) << m;
  }
}

TEST(Tensor, OrthogonalSupportsVanish) {
  const RingPtr r = make_zmod(12);
  EXPECT_EQ(tensor(mod(r, "R/(3)"), mod(r, "R/(4)")).module->size(), 1u);
  EXPECT_EQ(tensor(mod(r, "R/(2)"), mod(r, "R/(4)")).module->size(), 2u);
  EXPECT_EQ(tensor(free_module(r, 1), mod(r, "R/(6)")).module->size(), 6u);
}

TEST(SFlat, Examples) {
  const RingPtr r = make_zmod(12);
  const ModulePtr z2 = mod(r, "R/(2)");
  EXPECT_TRUE(is_s_flat(z2, mset(r, "S{4}")).holds());
  EXPECT_TRUE(is_s_flat(z2, mset(r, "S{9}")).fails());
  for (const auto& s : enumerate_mult_sets(r)) {
    EXPECT_TRUE(is_s_flat(free_module(r, 2), s).holds()) << s.literal();
    EXPECT_TRUE(is_s_flat(mod(r, "R/(3)"), s).holds()) << s.literal();
  }
}

TEST(SFlat, RoutesAgreeOnSmallPool) {
  const RingPtr r = ring("Z/2 x Z/4");
  for (const auto& s : enumerate_mult_sets(r))
    for (const char* m : {"R/((1,0))", "R/((0,2))", "free(1) (+) R/((0,1))"}) {
      const RouteSet rs = s_flat_routes(mod(r, m), s);
      EXPECT_TRUE(rs.agree()) << m << " " << s.literal();
      EXPECT_EQ(rs.routes.size(), 3u);
    }
}

TEST(SProjective, Examples) {
  const RingPtr r = make_zmod(12);
  EXPECT_TRUE(is_s_projective(mod(r, "R/(2)"), mset(r, "S{4}")).holds());
  EXPECT_TRUE(is_s_projective(mod(r, "R/(4)"), mset(r, "S{9}")).holds());
}

TEST(Dimensions, Examples) {
  const RingPtr r = make_zmod(12);
  EXPECT_EQ(pd(*mod(r, "R/(2)")), HomologicalDim::Infinite);
  EXPECT_EQ(pd(*mod(r, "R/(3)")), HomologicalDim::Zero);
  EXPECT_EQ(pd(*zero_module(r)), HomologicalDim::MinusInfinity);
  EXPECT_EQ(fd(*zero_module(r)), HomologicalDim::MinusInfinity);
  EXPECT_EQ(gldim(make_zmod(6)), HomologicalDim::Zero);
  EXPECT_EQ(gldim(make_zmod(12)), HomologicalDim::Infinite);
  EXPECT_EQ(wdim(make_zmod(12)), HomologicalDim::Infinite);
}

TEST(Resolution, TerminatesOnFreeModules) {
  const RingPtr r = make_zmod(12);
  EXPECT_TRUE(resolution_probe(free_module(r, 2)).terminated);
  // Projective but not free: syzygies alternate between the two local parts.
  const ResolutionProbe p3 = resolution_probe(mod(r, "R/(3)"));
  EXPECT_FALSE(p3.terminated);
  ASSERT_GE(p3.syzygy_sizes.size(), 2u);
  EXPECT_EQ(p3.syzygy_sizes[0], 4u);
  EXPECT_EQ(p3.syzygy_sizes[1], 3u);
  const ResolutionProbe p2 = resolution_probe(mod(r, "R/(2)"));
  EXPECT_FALSE(p2.terminated);
  EXPECT_TRUE(p2.complete);
  // Over Z/4, 0 -> 2Z/4 -> Z/4 -> Z/2 -> 0 repeats with Z/2 syzygies.
  const ResolutionProbe p4 = resolution_probe(mod(make_zmod(4), "R/(2)"));
  ASSERT_FALSE(p4.syzygy_sizes.empty());
  for (std::size_t s : p4.syzygy_sizes) EXPECT_EQ(s, 2u);
}

TEST(SamplePool, Z4ContainsSmallModules) {
  const RingPtr r = make_zmod(4);
  SampleOptions o;
  o.budget = 60;
  const SamplePool pool = sample_modules(r, o);
  const std::vector<std::string> wanted = {"", "R/(2)", "free(1)", "R/(2) (+) R/(2)", "free(1) (+) R/(2)"};
  std::vector<ModulePtr> targets = {zero_module(r), mod(r, "R/(2)"), free_module(r, 1), mod(r, "R/(2) (+) R/(2)"),
                                    mod(r, "free(1) (+) R/(2)")};
  for (std::size_t t = 0; t < targets.size(); ++t) {
    bool found = false;
    for (const auto& m : pool.modules)
      if (m->size() == targets[t]->size() && find_module_isomorphism(m, targets[t]).has_value()) found = true;
    EXPECT_TRUE(found) << wanted[t];
  }
}

TEST(SamplePool, FieldPoolsAreProjective) {
  for (const char* t : {"Z/2", "Z/5", "GF(2,x^2+x+1)"}) {
    SampleOptions o;
    const SamplePool pool = sample_modules(ring(t), o);
    for (const auto& m : pool.modules) EXPECT_TRUE(is_projective(*m).holds()) << t << " " << m->provenance();
  }
}

TEST(SamplePool, Z12ContainsTheSFlatNonFlatWitness) {
  const RingPtr r = make_zmod(12);
  const MultSet s = mset(r, "S{4}");
  SampleOptions o;
  const SamplePool pool = sample_modules(r, o);
  bool found = false;
  for (const auto& m : pool.modules)
    if (m->size() == 2 && is_s_flat(m, s).holds() && !is_flat(*m).holds()) found = true;
  EXPECT_TRUE(found);
}

TEST(SamplePool, DeterministicInSeed) {
  const RingPtr r = make_zmod(16);
  SampleOptions o;
  o.seed = 11;
  const SamplePool a = sample_modules(r, o), b = sample_modules(r, o);
  ASSERT_EQ(a.modules.size(), b.modules.size());
  for (std::size_t i = 0; i < a.modules.size(); ++i) EXPECT_EQ(a.modules[i]->provenance(), b.modules[i]->provenance());
}

TEST(ModuleIsomorphism, DistinguishesNonIsomorphic) {
  const RingPtr r = make_zmod(4);
  EXPECT_FALSE(find_module_isomorphism(mod(r, "R/(2) (+) R/(2)"), free_module(r, 1)).has_value());
  EXPECT_TRUE(find_module_isomorphism(mod(r, "R/(2) (+) free(1)"), mod(r, "free(1) (+) R/(2)")).has_value());
}
