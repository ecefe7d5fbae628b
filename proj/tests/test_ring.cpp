#include <gtest/gtest.h>

#include "fcr/constructions.hpp"
#include "fcr/error.hpp"
#include "fcr/ideal.hpp"
#include "fcr/module.hpp"
#include "util.hpp"

using namespace fcr;
using namespace fcr::test;

TEST(Zmod, TwoElementsOnePlusOneIsZero) {
  const RingPtr r = make_zmod(2);
  EXPECT_EQ(r->size(), 2u);
  EXPECT_EQ(r->add(r->one(), r->one()), r->zero());
}

TEST(Zmod, UnitsOfTwelve) {
  const RingPtr r = make_zmod(12);
  EXPECT_EQ(labels(*r, r->units()), (std::set<std::string>{"1", "5", "7", "11"}));
}

TEST(Zmod, IdempotentsOfSix) {
  const RingPtr r = make_zmod(6);
  EXPECT_EQ(labels(*r, r->idempotents()), (std::set<std::string>{"0", "1", "3", "4"}));
}

TEST(Zmod, RejectsBadModulus) {
  EXPECT_THROW(make_zmod(1), ConstructionError);
  EXPECT_THROW(make_zmod(0), ConstructionError);
  EXPECT_THROW(make_zmod(257), ConstructionError);
}

TEST(PolyQuotient, DualNumbersOverF2) {
  const long long f[] = {0, 0, 1};
  const RingPtr r = make_poly_quotient(2, f);
  ASSERT_EQ(r->size(), 4u);
  const Elem x = el(r, "x");
  EXPECT_EQ(r->mul(x, x), r->zero());
  EXPECT_EQ(labels(*r, jacobson_radical(r).members()), (std::set<std::string>{"0", "x"}));
  EXPECT_TRUE(ring_class(r).is_local);
}

TEST(PolyQuotient, FieldOfFour) {
  const long long f[] = {1, 1, 1};
  const RingPtr r = make_poly_quotient(2, f);
  ASSERT_EQ(r->size(), 4u);
  for (Elem a = 0; a < r->size(); ++a) EXPECT_EQ(r->is_unit(a), a != r->zero());
  EXPECT_TRUE(ring_class(r).is_field);
}

TEST(PolyQuotient, DegreeOneCollapsesToBase) {
  const long long f[] = {0, 1};
  const RingPtr r = make_poly_quotient(3, f);
  EXPECT_TRUE(find_ring_isomorphism(r, make_zmod(3)).has_value());
}

TEST(PolyQuotient, RejectsNonMonicAndCompositeModulus) {
  const long long non_monic[] = {1, 0, 2};
  EXPECT_THROW(make_poly_quotient(3, non_monic), ConstructionError);
  const long long f[] = {1, 1};
  EXPECT_THROW(make_poly_quotient(4, f), ConstructionError);
}

TEST(DirectProduct, CanonicalIdempotents) {
  const RingPtr fs[] = {make_zmod(4), make_zmod(3)};
  const ProductRing p = direct_product(fs);
  const FiniteRing& R = *p.ring;
  ASSERT_EQ(R.size(), 12u);
  ASSERT_EQ(p.idempotents.size(), 2u);
  const Elem e1 = p.idempotents[0], e2 = p.idempotents[1];
  EXPECT_EQ(R.mul(e1, e1), e1);
  EXPECT_EQ(R.mul(e2, e2), e2);
  EXPECT_EQ(R.mul(e1, e2), R.zero());
  EXPECT_EQ(R.add(e1, e2), R.one());
}

TEST(DirectProduct, BooleanSquareHasFourIdempotents) {
  const RingPtr fs[] = {make_zmod(2), make_zmod(2)};
  EXPECT_EQ(direct_product(fs).ring->idempotents().size(), 4u);
}

TEST(DirectProduct, ThreeFieldsHaveZeroRadical) {
  const RingPtr fs[] = {make_zmod(2), make_zmod(3), make_zmod(5)};
  const RingPtr r = direct_product(fs).ring;
  EXPECT_EQ(r->size(), 30u);
  EXPECT_TRUE(jacobson_radical(r).is_zero());
}

TEST(Quotient, TwelveByFourIsZ4) {
  const RingPtr r = make_zmod(12);
  const QuotientRing q = quotient_ring(principal_ideal(r, el(r, "4")));
  EXPECT_EQ(q.ring->size(), 4u);
  EXPECT_TRUE(find_ring_isomorphism(q.ring, make_zmod(4)).has_value());
}

TEST(Quotient, TwelveByNineIsZ3) {
  const RingPtr r = make_zmod(12);
  const QuotientRing q = quotient_ring(principal_ideal(r, el(r, "9")));
  EXPECT_EQ(q.ring->size(), 3u);
  EXPECT_TRUE(find_ring_isomorphism(q.ring, make_zmod(3)).has_value());
}

TEST(Quotient, ByZeroIsTheRing) {
  const RingPtr r = make_zmod(12);
  const QuotientRing q = quotient_ring(zero_ideal(r));
  EXPECT_EQ(q.ring->size(), 12u);
  EXPECT_TRUE(q.map.injective());
}

TEST(TrivialExtension, Z2OverZ2IsDualNumbers) {
  const RingPtr base = make_zmod(2);
  const RingPtr t = trivial_extension(base, free_module(base, 1));
  EXPECT_EQ(t->size(), 4u);
  EXPECT_TRUE(ring_class(t).is_local);
  EXPECT_EQ(jacobson_radical(t).size(), 2u);
  const long long f[] = {0, 0, 1};
  EXPECT_TRUE(find_ring_isomorphism(t, make_poly_quotient(2, f)).has_value());
}

TEST(TrivialExtension, Z3OverZ3IsNotZ9) {
  const RingPtr t = ring("triv(Z/3, Z/3)");
  EXPECT_EQ(t->size(), 9u);
  EXPECT_TRUE(ring_class(t).is_local);
  EXPECT_EQ(t->additive_order(t->one()), 3u);
  EXPECT_EQ(make_zmod(9)->additive_order(make_zmod(9)->one()), 9u);
  EXPECT_FALSE(find_ring_isomorphism(t, make_zmod(9)).has_value());
}

TEST(TrivialExtension, ZeroModuleGivesTheRing) {
  const RingPtr r = make_zmod(6);
  const RingPtr t = trivial_extension(r, zero_module(r));
  EXPECT_TRUE(find_ring_isomorphism(t, r).has_value());
}

TEST(ElementPredicates, TwoInZ12) {
  const RingPtr r = make_zmod(12);
  const ElementFlags f = r->flags(el(r, "2"));
  EXPECT_FALSE(f.unit);
  EXPECT_FALSE(f.regular);
  EXPECT_FALSE(f.nilpotent);
  EXPECT_FALSE(f.idempotent);
  EXPECT_FALSE(f.vnr);
}

TEST(ElementPredicates, NineInZ12) {
  const RingPtr r = make_zmod(12);
  const ElementFlags f = r->flags(el(r, "9"));
  EXPECT_TRUE(f.vnr);
  EXPECT_TRUE(f.idempotent);
  EXPECT_FALSE(f.unit);
}

TEST(ElementPredicates, OneEverywhere) {
  for (const char* t : {"Z/2", "Z/12", "GF(2,x^2)", "triv(Z/3, Z/3)", "Z/2 x Z/4"}) {
    const RingPtr r = ring(t);
    const ElementFlags f = r->flags(r->one());
    EXPECT_TRUE(f.unit && f.regular && f.vnr && f.idempotent) << t;
    EXPECT_FALSE(f.nilpotent) << t;
  }
}

TEST(VnrFactorization, ThreeInZ12) {
  const RingPtr r = make_zmod(12);
  const auto f = vnr_factorization(*r, el(r, "3"));
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(r->label(f->unit), "7");
  EXPECT_EQ(r->label(f->idempotent), "9");
}

TEST(VnrFactorization, ZeroAndTwo) {
  const RingPtr r = make_zmod(12);
  const auto z = vnr_factorization(*r, r->zero());
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(z->unit, r->one());
  EXPECT_EQ(z->idempotent, r->zero());
  EXPECT_FALSE(vnr_factorization(*r, el(r, "2")).has_value());
}

TEST(RingTables, AxiomCheckerCatchesMutation) {
  RingTables t = make_zmod(4)->tables();
  t.mul[2 * 4 + 2] = 1;
  EXPECT_TRUE(ring_axiom_violation(t).has_value());
  EXPECT_THROW(FiniteRing::create(t), StructureError);
}

TEST(RingHom, CanonicalSurjectionChecked) {
  const RingPtr r = make_zmod(12);
  const RingPtr q = make_zmod(4);
  std::vector<Elem> img(12);
  for (Elem x = 0; x < 12; ++x) img[x] = q->from_integer(x);
  const RingHom f = RingHom::create(r, q, img);
  EXPECT_TRUE(f.surjective());
  EXPECT_FALSE(f.injective());
  img[1] = q->zero();
  EXPECT_THROW(RingHom::create(r, q, img), StructureError);
}
