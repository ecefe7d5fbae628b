#include <gtest/gtest.h>

#include "fcr/constructions.hpp"
#include "fcr/error.hpp"
#include "fcr/fraction.hpp"
#include "fcr/multset.hpp"
#include "util.hpp"

using namespace fcr;
using namespace fcr::test;

TEST(MultClosure, IdempotentGenerator) {
  const RingPtr r = make_zmod(12);
  const Elem g[] = {el(r, "4")};
  EXPECT_EQ(labels(*r, mult_closure(r, g).members()), (std::set<std::string>{"1", "4"}));
}

TEST(MultClosure, PowersOfTwoInZ12) {
  const RingPtr r = make_zmod(12);
  const Elem g[] = {el(r, "2")};
  EXPECT_EQ(labels(*r, mult_closure(r, g).members()), (std::set<std::string>{"1", "2", "4", "8"}));
}

TEST(MultClosure, NilpotentAbsorbsZero) {
  const RingPtr r = make_zmod(4);
  const Elem g[] = {el(r, "2")};
  EXPECT_THROW(mult_closure(r, g), ZeroAbsorbed);
}

TEST(EnumerateMultSets, Z4HasOnlyUnitSubsets) {
  const RingPtr r = make_zmod(4);
  const auto all = enumerate_mult_sets(r);
  std::set<std::set<std::string>> got;
  for (const auto& s : all) got.insert(labels(*r, s.members()));
  EXPECT_EQ(got, (std::set<std::set<std::string>>{{"1"}, {"1", "3"}}));
}

TEST(EnumerateMultSets, Z6IncludesIdempotentSets) {
  const RingPtr r = make_zmod(6);
  std::set<std::set<std::string>> got;
  for (const auto& s : enumerate_mult_sets(r)) got.insert(labels(*r, s.members()));
  EXPECT_TRUE(got.count({"1", "3"}));
  EXPECT_TRUE(got.count({"1", "4"}));
}

TEST(EnumerateMultSets, FieldGivesSubmonoidsOfUnits) {
  // Submonoids of the cyclic group of order 6 are its subgroups: orders 1, 2, 3, 6.
  const auto all = enumerate_mult_sets(make_zmod(7));
  EXPECT_EQ(all.size(), 4u);
  for (const auto& s : all) EXPECT_TRUE(s.within_units());
}

TEST(EnumerateMultSets, OrderedAndDistinct) {
  const auto all = enumerate_mult_sets(make_zmod(12));
  for (std::size_t i = 1; i < all.size(); ++i) {
    const bool ordered = all[i - 1].size() < all[i].size() ||
                         (all[i - 1].size() == all[i].size() && all[i - 1].members() < all[i].members());
    EXPECT_TRUE(ordered) << i;
  }
}

TEST(EnumerateMultSets, BudgetIsEnforced) { EXPECT_THROW(enumerate_mult_sets(make_zmod(16), 2), BudgetExceeded); }

TEST(LocalizeRing, DyingRadicalFactor) {
  const RingPtr r = make_zmod(12);
  const LocalizationResult loc = localize_ring(mset(r, "S{4}"));
  EXPECT_EQ(loc.localized_ring->size(), 3u);
  EXPECT_TRUE(find_ring_isomorphism(loc.localized_ring, make_zmod(3)).has_value());
  EXPECT_EQ(r->label(loc.surviving_idempotent), "4");
}

TEST(LocalizeRing, DyingFieldFactor) {
  const RingPtr r = make_zmod(12);
  const LocalizationResult loc = localize_ring(mset(r, "S{9}"));
  EXPECT_EQ(loc.localized_ring->size(), 4u);
  EXPECT_TRUE(find_ring_isomorphism(loc.localized_ring, make_zmod(4)).has_value());
  EXPECT_EQ(r->label(loc.surviving_idempotent), "9");
}

TEST(LocalizeRing, UnitsGiveIdentity) {
  for (const char* t : {"Z/12", "Z/2 x Z/4", "triv(Z/3, Z/3)"}) {
    const RingPtr r = ring(t);
    for (const char* s : {"S=1", "S=U"}) {
      const LocalizationResult loc = localize_ring(mset(r, s));
      EXPECT_EQ(loc.localized_ring->size(), r->size()) << t << " " << s;
      EXPECT_TRUE(loc.pi.injective()) << t << " " << s;
      EXPECT_EQ(loc.surviving_idempotent, r->one()) << t << " " << s;
    }
  }
}

TEST(LocalizeRing, ImagesOfSAreUnits) {
  const RingPtr r = make_zmod(30);
  for (const auto& s : enumerate_mult_sets(r)) {
    const LocalizationResult loc = localize_ring(s);
    for (Elem t : s.members()) EXPECT_TRUE(loc.localized_ring->is_unit(loc.pi(t))) << s.literal();
    EXPECT_TRUE(loc.pi.surjective());
  }
}

TEST(LocalizeModule, TorsionAndIdentity) {
  const RingPtr r = make_zmod(12);
  const ModulePtr z2 = mod(r, "R/(2)");
  EXPECT_EQ(localize_module(z2, mset(r, "S{4}")).over_ring->size(), 1u);
  const ModuleLocalization keep = localize_module(z2, mset(r, "S{9}"));
  EXPECT_EQ(keep.over_ring->size(), 2u);
  EXPECT_TRUE(keep.pi.injective());
  const ModuleLocalization id = localize_module(z2, mset(r, "S=1"));
  EXPECT_TRUE(id.pi.injective() && id.pi.surjective());
}

TEST(LocalizeModule, KernelIsTorsion) {
  const RingPtr r = make_zmod(12);
  const ModulePtr m = mod(r, "R/(2) (+) R/(3) (+) R/(4)");
  for (const auto& s : enumerate_mult_sets(r)) {
    const ModuleLocalization ml = localize_module(m, s);
    const Submodule ker = ml.pi.kernel();
    for (Elem x = 0; x < m->size(); ++x) {
      bool torsion = false;
      for (Elem t : s.members()) torsion = torsion || m->act(t, x) == m->zero();
      EXPECT_EQ(torsion, ker.contains(x)) << s.literal() << " " << m->label(x);
    }
  }
}

TEST(Divisibility, RadicalOfZ12) {
  const RingPtr r = make_zmod(12);
  const ModulePtr j = ideal_module(jacobson_radical(r));
  EXPECT_TRUE(is_s_divisible(*j, mset(r, "S{9}")));
  const TorsionReport tr = s_torsion_and_divisibility(j, mset(r, "S{4}"));
  EXPECT_FALSE(tr.is_s_divisible);
  ASSERT_TRUE(tr.divisibility_witness.has_value());
  EXPECT_EQ(r->label(*tr.divisibility_witness), "4");
}

TEST(Divisibility, ZeroModule) {
  const RingPtr r = make_zmod(12);
  const TorsionReport tr = s_torsion_and_divisibility(zero_module(r), mset(r, "S{2}"));
  EXPECT_TRUE(tr.is_s_torsion);
  EXPECT_TRUE(tr.is_s_divisible);
}

TEST(Pushforward, Examples) {
  const RingPtr r = make_zmod(12);
  const MultSet s = mset(r, "S{4}");
  const QuotientRing to3 = quotient_ring(principal_ideal(r, el(r, "3")));
  const MultSet img = pushforward_mult_set(to3.map, s);
  EXPECT_EQ(img.size(), 1u);
  const QuotientRing to4 = quotient_ring(principal_ideal(r, el(r, "4")));
  EXPECT_THROW(pushforward_mult_set(to4.map, s), ZeroAbsorbed);
  EXPECT_EQ(pushforward_mult_set(RingHom::identity(r), s), s);
}

TEST(ExtractS1, Examples) {
  const RingPtr t2 = ring("triv(Z/2, Z/2)");
  EXPECT_EQ(extract_s1(mset(t2, "S{(1,0)}")).size(), 1u);
  const RingPtr t3 = ring("triv(Z/3, Z/3)");
  const MultSet s = mset(t3, "S{(1,1)}");
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(extract_s1(s).size(), 1u);
  // S' x| 0 recovers S'.
  const RingPtr t = ring("triv(Z/2 x Z/2, Z/2 x Z/2)");
  const RingPtr base = t->trivial_tag()->base;
  const MultSet sp = mset(base, "S{(0,1)}");
  const Elem z[] = {t->trivial_tag()->part->zero()};
  const MultSet lifted = trivial_extension_mult_set(t, sp, submodule_generated(t->trivial_tag()->part, z));
  EXPECT_EQ(extract_s1(lifted), sp);
  EXPECT_TRUE(split_trivial_extension_mult_set(lifted).has_value());
}

TEST(FactorStatus, NeverOther) {
  for (const char* t : {"Z/12", "Z/2 x Z/4", "triv(Z/6, R/(2))", "Z/2 x Z/2 x Z/3"}) {
    const RingPtr r = ring(t);
    for (const auto& s : enumerate_mult_sets(r))
      for (FactorStatus st : local_factor_status(s)) EXPECT_NE(st, FactorStatus::Other) << t << " " << s.literal();
  }
}

TEST(Fractions, MatchIdempotentModelOnZ12) {
  const RingPtr r = make_zmod(12);
  for (const auto& s : enumerate_mult_sets(r)) {
    const LocalizationCheck c = compare_localizations(s);
    EXPECT_TRUE(c.ok()) << s.literal();
    ASSERT_TRUE(c.isomorphic.has_value());
  }
}

TEST(Fractions, ModuleFractionsOnZ12) {
  const RingPtr r = make_zmod(12);
  for (const char* m : {"R/(2)", "R/(3)", "free(1)", "R/(6) (+) R/(4)"})
    for (const auto& s : enumerate_mult_sets(r)) EXPECT_TRUE(compare_module_localizations(mod(r, m), s).ok()) << m;
}
