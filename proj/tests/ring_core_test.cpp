#include <gtest/gtest.h>

#include <numeric>

#include "pprir/finite_ring.hpp"
#include "pprir/audit.hpp"
#include "test_support.hpp"

using namespace pprir;
using namespace pprir::testing;

namespace {

/// Checks every ring law with plain triple loops.
void expect_ring_axioms(const FiniteRing& r) {
  const auto n = r.order();
  const auto z = r.zero().index(), one = r.one().index();
  ASSERT_NE(z, one) << r.label();
  for (std::uint32_t a = 0; a < n; ++a) {
    ASSERT_EQ(r.add_index(a, z), a) << r.label();
    ASSERT_EQ(r.mul_index(one, a), a) << r.label();
    ASSERT_EQ(r.add_index(a, r.neg_index(a)), z) << r.label();
    for (std::uint32_t b = 0; b < n; ++b) {
      ASSERT_EQ(r.mul_index(a, b), r.mul_index(b, a)) << r.label();
      ASSERT_EQ(r.add_index(a, b), r.add_index(b, a)) << r.label();
      for (std::uint32_t c = 0; c < n; ++c) {
        ASSERT_EQ(r.add_index(r.add_index(a, b), c), r.add_index(a, r.add_index(b, c))) << r.label();
        ASSERT_EQ(r.mul_index(r.mul_index(a, b), c), r.mul_index(a, r.mul_index(b, c))) << r.label();
        ASSERT_EQ(r.mul_index(a, r.add_index(b, c)), r.add_index(r.mul_index(a, b), r.mul_index(a, c))) << r.label();
      }
    }
  }
}

std::size_t idempotent_count(const FiniteRing& r) {
  std::size_t c = 0;
  for (std::uint32_t a = 0; a < r.order(); ++a) c += r.mul_index(a, a) == a;
  return c;
}

}  // namespace

TEST(MakeZn, SmallRings) {
  const auto z2 = make_zn(2);
  EXPECT_EQ(z2.order(), 2u);
  EXPECT_TRUE(is_field(z2));

  const auto z6 = make_zn(6);
  EXPECT_EQ(z6.order(), 6u);
  EXPECT_EQ(z6.mul(ElementId(2), ElementId(3)), z6.zero());
  EXPECT_EQ(z6.label(), "Z_6");
}

TEST(MakeZn, RejectsZeroRing) {
  EXPECT_THROW(make_zn(1), RingError);
  EXPECT_THROW(make_zn(0), RingError);
  EXPECT_THROW(make_zn(kMaxRingOrder + 1), RingError);
}

TEST(MakeZn, AdditiveOrderIsNOverGcd) {
  for (std::uint32_t n = 2; n <= 40; ++n) {
    const auto r = make_zn(n);
    for (std::uint32_t k = 0; k < n; ++k) EXPECT_EQ(additive_order(r, ElementId(k)), n / std::gcd(n, k)) << n << " " << k;
  }
}

TEST(MakeBoolean, Idempotence) {
  const auto b1 = make_boolean(1);
  EXPECT_EQ(b1.order(), 2u);
  EXPECT_TRUE(is_field(b1));

  for (std::uint32_t k = 1; k <= 5; ++k) {
    const auto b = make_boolean(k);
    EXPECT_EQ(b.order(), 1u << k);
    EXPECT_EQ(idempotent_count(b), b.order());
  }
  EXPECT_EQ(idempotent_count(make_boolean(3)), 8u);
}

TEST(MakeBoolean, RejectsEmptyAtomSet) {
  EXPECT_THROW(make_boolean(0u), RingError);
  EXPECT_THROW(make_boolean(std::vector<std::string>{}), RingError);
}

TEST(MakeBoolean, ElementNames) {
  const auto b = make_boolean(std::vector<std::string>{"p", "q"});
  EXPECT_EQ(b.element_names(), (std::vector<std::string>{"0", "p", "q", "pq"}));
  EXPECT_EQ(b.name(b.one()), "pq");
}

TEST(MakeProduct, OrdersAndUnity) {
  const auto z2z3 = make_product({make_zn(2), make_zn(3)});
  EXPECT_EQ(z2z3.order(), 6u);
  EXPECT_EQ(z2z3.label(), "Z_2xZ_3");

  const auto z2z4 = make_product({make_zn(2), make_zn(4)});
  EXPECT_EQ(z2z4.order(), 8u);
  EXPECT_EQ(z2z4.name(z2z4.one()), "(1,1)");
  EXPECT_EQ(z2z4.name(z2z4.zero()), "(0,0)");

  const auto bb = make_product({make_boolean(1), make_boolean(1)});
  EXPECT_EQ(bb.order(), 4u);
  EXPECT_EQ(idempotent_count(bb), 4u);
  EXPECT_TRUE(is_boolean_ring(bb));
}

TEST(MakeProduct, OrderIsMultiplicative) {
  for (std::uint32_t m = 2; m <= 7; ++m)
    for (std::uint32_t n = 2; n <= 7; ++n) EXPECT_EQ(make_product({make_zn(m), make_zn(n)}).order(), m * n);
}

TEST(MakeProduct, RejectsEmpty) { EXPECT_THROW(make_product(std::span<const FiniteRing>{}), RingError); }

TEST(MakeAlgebra, RingA) {
  const auto a = corpus_rings::ring_a();
  EXPECT_EQ(a.order(), 8u);
  expect_ring_axioms(a);
  const auto x = a.find("x").value(), y = a.find("y").value();
  EXPECT_EQ(a.mul(x, x), a.zero());
  EXPECT_EQ(a.mul(x, y), a.zero());
  EXPECT_EQ(a.name(a.add(x, y)), "x+y");
}

TEST(MakeAlgebra, IdempotentSplitsIntoTwoFields) {
  const auto r = make_algebra({2, {"1", "x"}, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 1}}}, "F2[x]/(x^2-x)"});
  EXPECT_EQ(r.order(), 4u);
  // Isomorphic to F2 x F2: four ideals.
  EXPECT_EQ(brute_force_ideals(r).size(), 4u);
  EXPECT_TRUE(is_boolean_ring(r));
}

TEST(MakeAlgebra, RejectsNonAssociativeConstants) {
  // x*x = y, x*y = 0, y*y = 1 breaks associativity: (x*x)*y = y*y = 1, x*(x*y) = 0.
  const std::vector<std::uint32_t> zero{0, 0, 0};
  AlgebraSpec spec{2,
                   {"1", "x", "y"},
                   {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 0}, {0, 0, 1}, zero}, {{0, 0, 1}, zero, {1, 0, 0}}},
                   "bad"};
  try {
    make_algebra(spec);
    FAIL() << "expected AxiomError";
  } catch (const AxiomError& e) {
    EXPECT_NE(e.axiom().find("associativity"), std::string::npos) << e.what();
    EXPECT_EQ(e.witness().size(), 3u);
  }
}

TEST(MakeAlgebra, RejectsBadIdentityAndCharacteristic) {
  AlgebraSpec no_unit{2, {"1", "x"}, {{{0, 1}, {0, 1}}, {{0, 1}, {0, 0}}}, "no-unit"};
  EXPECT_THROW(make_algebra(no_unit), AxiomError);
  AlgebraSpec composite{4, {"1"}, {{{1}}}, "p=4"};
  EXPECT_THROW(make_algebra(composite), RingError);
}

TEST(MakeTableRing, AcceptsZ3) {
  const auto r = make_table_ring(3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}}, 0, 1, "Z3");
  EXPECT_EQ(r.order(), 3u);
  EXPECT_TRUE(is_field(r));
}

TEST(MakeTableRing, RejectsCorruptedMultiplication) {
  // mul[1][2] = 1 instead of 2: the row of 1 is no longer the identity map.
  try {
    make_table_ring(3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {{0, 0, 0}, {0, 1, 1}, {0, 2, 1}}, 0, 1, "Z3-bad");
    FAIL() << "expected AxiomError";
  } catch (const AxiomError& e) {
    EXPECT_FALSE(e.axiom().empty());
    EXPECT_FALSE(e.witness().empty());
  }
  // mul[2][2] = 2 keeps unity and commutativity; distributivity fails.
  try {
    make_table_ring(3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}}, 0, 1, "Z3-bad");
    FAIL() << "expected AxiomError";
  } catch (const AxiomError& e) {
    EXPECT_NE(e.axiom().find("distributivity"), std::string::npos) << e.what();
  }
}

TEST(MakeTableRing, RejectsZeroEqualsOne) {
  EXPECT_THROW(make_table_ring(2, {{0, 1}, {1, 0}}, {{0, 0}, {0, 1}}, 0, 0), AxiomError);
}

TEST(MakeTableRing, RejectsOutOfRangeEntries) {
  EXPECT_THROW(make_table_ring(2, {{0, 1}, {1, 2}}, {{0, 0}, {0, 1}}, 0, 1), AxiomError);
  EXPECT_THROW(make_table_ring(2, {{0, 1}}, {{0, 0}, {0, 1}}, 0, 1), RingError);
}

TEST(Validation, LargeRingsUseReducedChecks) {
  // Order 512 > exhaustive threshold: valid products pass, a corrupted cell is caught.
  const auto big = make_product({make_zn(8), make_zn(64)});
  EXPECT_EQ(big.order(), 512u);
  auto t = big.tables();
  const auto n = t.order;
  // Swap two symmetric product entries so commutativity still holds.
  const std::uint32_t a = 3, b = 5;
  const auto wrong = t.mul[std::size_t{a} * n + b] == 0 ? 1u : 0u;
  t.mul[std::size_t{a} * n + b] = wrong;
  t.mul[std::size_t{b} * n + a] = wrong;
  EXPECT_THROW(FiniteRing::from_tables(t), AxiomError);
}

TEST(ElementArithmetic, Examples) {
  const auto z6 = make_zn(6);
  EXPECT_EQ(z6.pow(ElementId(2), 3), ElementId(2));
  const auto z12 = make_zn(12);
  EXPECT_EQ(z12.pow(ElementId(6), 2), z12.zero());
  EXPECT_EQ(z12.neg(ElementId(5)), ElementId(7));
  EXPECT_EQ(z12.sub(ElementId(3), ElementId(5)), ElementId(10));
  for (std::uint32_t a = 0; a < 12; ++a) EXPECT_EQ(z12.mul(z12.one(), ElementId(a)), ElementId(a));
}

TEST(ElementArithmetic, Errors) {
  const auto z6 = make_zn(6);
  EXPECT_THROW(z6.add(ElementId(6), ElementId(0)), std::out_of_range);
  EXPECT_THROW(z6.pow(ElementId(2), 0), std::invalid_argument);
}

TEST(Corpus, EveryRingSatisfiesTheAxiomsExhaustively) {
  for (const auto& r : default_corpus().rings()) expect_ring_axioms(r);
}
