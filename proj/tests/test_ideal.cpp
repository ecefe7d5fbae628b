#include <gtest/gtest.h>

#include "fcr/ideal.hpp"
#include "util.hpp"

using namespace fcr;
using namespace fcr::test;

TEST(IdealGenerated, PrincipalIdealsOfZ12) {
  const RingPtr r = make_zmod(12);
  EXPECT_EQ(labels(*r, principal_ideal(r, el(r, "4")).members()), (std::set<std::string>{"0", "4", "8"}));
  EXPECT_EQ(labels(*r, principal_ideal(r, el(r, "9")).members()), (std::set<std::string>{"0", "3", "6", "9"}));
}

TEST(IdealGenerated, EmptyGeneratorsGiveZero) {
  const RingPtr r = ring("Z/2 x Z/4");
  EXPECT_TRUE(ideal_generated(r, {}).is_zero());
}

TEST(IdealGenerated, TwoGeneratorsMeetInTheSum) {
  const RingPtr r = make_zmod(12);
  const Elem g[] = {el(r, "4"), el(r, "6")};
  EXPECT_EQ(labels(*r, ideal_generated(r, g).members()), (std::set<std::string>{"0", "2", "4", "6", "8", "10"}));
}

TEST(IdealAxioms, FromMembersRejectsNonIdeal) {
  const RingPtr r = make_zmod(12);
  EXPECT_THROW(Ideal::from_members(r, {el(r, "0"), el(r, "4")}), StructureError);
}

TEST(JacobsonRadical, Examples) {
  const RingPtr z12 = make_zmod(12);
  EXPECT_EQ(labels(*z12, jacobson_radical(z12).members()), (std::set<std::string>{"0", "6"}));
  EXPECT_TRUE(jacobson_radical(make_zmod(6)).is_zero());
  EXPECT_TRUE(jacobson_radical(make_zmod(7)).is_zero());
  EXPECT_TRUE(jacobson_radical(ring("GF(2,x^2+x+1)")).is_zero());
}

TEST(MaximalIdeals, Z12HasTwo) {
  const RingPtr r = make_zmod(12);
  const auto m = maximal_ideals(r);
  ASSERT_EQ(m.size(), 2u);
  std::set<std::set<std::string>> got;
  for (const auto& i : m) got.insert(labels(*r, i.members()));
  EXPECT_TRUE(got.count({"0", "2", "4", "6", "8", "10"}));
  EXPECT_TRUE(got.count({"0", "3", "6", "9"}));
}

TEST(MaximalIdeals, LocalAndField) {
  const RingPtr z4 = make_zmod(4);
  const auto m4 = maximal_ideals(z4);
  ASSERT_EQ(m4.size(), 1u);
  EXPECT_EQ(labels(*z4, m4[0].members()), (std::set<std::string>{"0", "2"}));
  const auto m5 = maximal_ideals(make_zmod(5));
  ASSERT_EQ(m5.size(), 1u);
  EXPECT_TRUE(m5[0].is_zero());
}

TEST(LocalDecomposition, Z12SplitsIntoZ4AndZ3) {
  const RingPtr r = make_zmod(12);
  const auto& d = local_decomposition(*r);
  ASSERT_EQ(d.factors.size(), 2u);
  std::map<std::string, std::size_t> by_idempotent;
  for (const auto& f : d.factors) by_idempotent[r->label(f.idempotent())] = f.ring()->size();
  EXPECT_EQ(by_idempotent, (std::map<std::string, std::size_t>{{"9", 4}, {"4", 3}}));
  for (const auto& f : d.factors) {
    if (f.ring()->size() == 4) EXPECT_TRUE(find_ring_isomorphism(f.ring(), make_zmod(4)).has_value());
    if (f.ring()->size() == 3) EXPECT_TRUE(find_ring_isomorphism(f.ring(), make_zmod(3)).has_value());
  }
}

TEST(LocalDecomposition, LocalRingIsOneFactor) {
  const RingPtr r = make_zmod(8);
  EXPECT_EQ(local_decomposition(*r).factors.size(), 1u);
  EXPECT_EQ(labels(*r, r->idempotents()), (std::set<std::string>{"0", "1"}));
}

TEST(LocalDecomposition, BooleanSquareIsTwoFields) {
  const RingPtr r = ring("Z/2 x Z/2");
  const auto& d = local_decomposition(*r);
  ASSERT_EQ(d.factors.size(), 2u);
  for (const auto& f : d.factors) {
    EXPECT_TRUE(f.is_field);
    EXPECT_EQ(f.ring()->size(), 2u);
  }
}

TEST(LocalDecomposition, ReassemblesToTheRing) {
  for (const char* t : {"Z/12", "Z/30", "Z/2 x Z/4", "triv(Z/6, R/(2))", "GF(3,x^2)"}) {
    const RingPtr r = ring(t);
    const Reassembly re = reassemble(r);
    EXPECT_TRUE(re.iso.injective() && re.iso.surjective()) << t;
    EXPECT_EQ(re.product.ring->size(), r->size()) << t;
  }
}

TEST(RingClass, Z6) {
  const RingClass c = ring_class(make_zmod(6));
  EXPECT_FALSE(c.is_field);
  EXPECT_FALSE(c.is_local);
  EXPECT_TRUE(c.is_semisimple);
  EXPECT_TRUE(c.is_vnr_ring);
  EXPECT_TRUE(c.is_perfect);
}

TEST(RingClass, Z4) {
  const RingClass c = ring_class(make_zmod(4));
  EXPECT_FALSE(c.is_field);
  EXPECT_TRUE(c.is_local);
  EXPECT_FALSE(c.is_semisimple);
  EXPECT_FALSE(c.is_vnr_ring);
  EXPECT_TRUE(c.is_perfect);
}

TEST(RingClass, PrimeFieldsAreEverything) {
  for (long long p : {2, 3, 5, 7, 11, 13}) {
    const RingClass c = ring_class(make_zmod(p));
    EXPECT_TRUE(c.is_field && c.is_local && c.is_semisimple && c.is_vnr_ring && c.is_perfect) << p;
  }
}

TEST(EnumerateIdeals, CountsForSmallRings) {
  // Z/n has one ideal per divisor of n.
  EXPECT_EQ(enumerate_ideals(make_zmod(12)).size(), 6u);
  EXPECT_EQ(enumerate_ideals(make_zmod(16)).size(), 5u);
  // Z/2 x Z/2 has {0}, two lines, the whole ring.
  EXPECT_EQ(enumerate_ideals(ring("Z/2 x Z/2")).size(), 4u);
}
