#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "pprir/zmodel.hpp"

using namespace pprir;
using namespace pprir::zmodel;

namespace {

using Point = std::vector<std::int64_t>;

void enumerate_box(std::size_t k, std::int64_t bound, const std::function<void(const Point&)>& f) {
  Point p(k, -bound);
  while (true) {
    f(p);
    std::size_t i = 0;
    while (i < k && p[i] == bound) p[i++] = -bound;
    if (i == k) return;
    ++p[i];
  }
}

/// Bounded-box oracle: within [-B, B]^k, the multiples {g * r} coincide with
/// the points whose coordinates satisfy n_i | v_i.
bool generator_matches_ideal(const ZProductIdeal& ideal, const std::vector<std::uint64_t>& g, std::int64_t bound) {
  const auto k = ideal.arity();
  std::set<Point> multiples, members;
  enumerate_box(k, bound, [&](const Point& r) {
    Point v(k);
    bool inside = true;
    for (std::size_t i = 0; i < k; ++i) {
      v[i] = static_cast<std::int64_t>(g[i]) * r[i];
      inside = inside && v[i] >= -bound && v[i] <= bound;
    }
    if (inside) multiples.insert(v);
  });
  enumerate_box(k, bound, [&](const Point& v) {
    bool in = true;
    for (std::size_t i = 0; i < k; ++i) {
      const auto n = static_cast<std::int64_t>(ideal.gens()[i]);
      in = in && (n == 0 ? v[i] == 0 : v[i] % n == 0);
    }
    if (in) members.insert(v);
  });
  return multiples == members;
}

std::int64_t box_for(const ZProductIdeal& ideal) {
  std::uint64_t m = 1;
  for (auto g : ideal.gens()) m = std::max(m, g);
  return static_cast<std::int64_t>(10 * m);
}

}  // namespace

TEST(ZContains, Examples) {
  EXPECT_TRUE(z_contains(ZProductIdeal{1, 2}, ZProductIdeal{1, 0}));
  EXPECT_FALSE(z_contains(ZProductIdeal{1, 0}, ZProductIdeal{1, 2}));
  EXPECT_TRUE(z_contains(ZProductIdeal{4, 6}, ZProductIdeal{4, 6}));
  EXPECT_FALSE(z_contains(ZProductIdeal{2}, ZProductIdeal{3}));
  EXPECT_FALSE(z_contains(ZProductIdeal{3}, ZProductIdeal{2}));
  EXPECT_THROW(z_contains(ZProductIdeal{1}, ZProductIdeal{1, 1}), std::invalid_argument);
}

TEST(ZIsPrime, Examples) {
  EXPECT_TRUE(z_is_prime(ZProductIdeal{1, 0}));
  EXPECT_FALSE(z_is_prime(ZProductIdeal{6}));
  EXPECT_FALSE(z_is_prime(ZProductIdeal{0, 0}));
  EXPECT_TRUE(z_is_prime(ZProductIdeal{0}));
  EXPECT_TRUE(z_is_prime(ZProductIdeal{7}));
  EXPECT_FALSE(z_is_prime(ZProductIdeal{1, 1}));
}

TEST(ZIsMaximal, Examples) {
  EXPECT_FALSE(z_is_maximal(ZProductIdeal{1, 0}));
  EXPECT_EQ(z_strict_intermediate(ZProductIdeal{1, 0}), (ZProductIdeal{1, 2}));
  EXPECT_TRUE(z_is_maximal(ZProductIdeal{5}));
  EXPECT_TRUE(z_is_maximal(ZProductIdeal{1, 3}));
  EXPECT_FALSE(z_strict_intermediate(ZProductIdeal{1, 3}).has_value());
}

TEST(ZPrincipalWitness, BoundedBoxOracle) {
  for (const auto& ideal : {ZProductIdeal{2, 3}, ZProductIdeal{0, 0}, ZProductIdeal{1, 0}}) {
    const auto g = z_principal_witness(ideal);
    EXPECT_EQ(ZProductIdeal(g), ideal);
    EXPECT_TRUE(generator_matches_ideal(ideal, g, box_for(ideal))) << ideal.tuple();
  }
}

TEST(ZPrincipalWitness, OracleCatchesAWrongGenerator) {
  EXPECT_FALSE(generator_matches_ideal(ZProductIdeal{2, 3}, {2, 6}, 30));
  EXPECT_FALSE(generator_matches_ideal(ZProductIdeal{1, 0}, {1, 1}, 10));
}

TEST(ZModel, EveryIdealIsPrincipal) {
  for (std::uint64_t a = 0; a <= 6; ++a)
    for (std::uint64_t b = 0; b <= 6; ++b) {
      const ZProductIdeal ideal{a, b};
      EXPECT_TRUE(generator_matches_ideal(ideal, z_principal_witness(ideal), box_for(ideal))) << ideal.tuple();
    }
}

TEST(ZModel, MaximalImpliesPrime) {
  for (std::uint64_t a = 0; a <= 100; ++a) {
    EXPECT_TRUE(!z_is_maximal(ZProductIdeal{a}) || z_is_prime(ZProductIdeal{a})) << a;
    for (std::uint64_t b = 0; b <= 100; b += 7) {
      const ZProductIdeal ideal{a, b};
      EXPECT_TRUE(!z_is_maximal(ideal) || z_is_prime(ideal)) << ideal.tuple();
    }
  }
}

TEST(ZModel, ContainmentIsAPartialOrder) {
  std::vector<ZProductIdeal> grid;
  for (std::uint64_t a = 0; a <= 20; a += 2)
    for (std::uint64_t b = 0; b <= 20; b += 3) grid.push_back(ZProductIdeal{a, b});
  for (std::uint64_t a = 0; a <= 20; ++a) grid.push_back(ZProductIdeal{a, 1});
  for (const auto& i : grid) {
    EXPECT_TRUE(z_contains(i, i));
    for (const auto& j : grid) {
      if (z_contains(i, j) && z_contains(j, i)) {
        EXPECT_EQ(i, j);
      }
      for (const auto& k : grid) {
        if (z_contains(i, j) && z_contains(j, k)) {
          EXPECT_TRUE(z_contains(i, k));
        }
      }
    }
  }
}

TEST(ZModel, StrictIntermediateIsStrict) {
  for (std::uint64_t a = 0; a <= 12; ++a)
    for (std::uint64_t b = 0; b <= 12; ++b) {
      const ZProductIdeal ideal{a, b};
      const auto mid = z_strict_intermediate(ideal);
      if (ideal.is_whole() || z_is_maximal(ideal)) {
        EXPECT_FALSE(mid.has_value());
        continue;
      }
      ASSERT_TRUE(mid.has_value()) << ideal.tuple();
      EXPECT_TRUE(z_contains(*mid, ideal));
      EXPECT_FALSE(z_contains(ideal, *mid));
      EXPECT_FALSE(mid->is_whole());
    }
}

TEST(AuditEx2, ReproducesTheChain) {
  const auto res = audit_ex2();
  EXPECT_EQ(res.outcome.status, ClaimStatus::verified);
  EXPECT_TRUE(res.prime);
  EXPECT_FALSE(res.maximal);
  ASSERT_EQ(res.chain.size(), 3u);
  EXPECT_EQ(res.chain[0], (ZProductIdeal{1, 0}));
  EXPECT_EQ(res.chain[1], (ZProductIdeal{1, 2}));
  EXPECT_EQ(res.chain[2], (ZProductIdeal{1, 1}));
  ASSERT_TRUE(res.outcome.witness.has_value());
  EXPECT_NE(res.outcome.witness->find("Z×{0} ⊂ Z×Z_e ⊂ Z×Z"), std::string::npos);
  EXPECT_NE(res.outcome.witness->find("(1,0) ⊂ (1,2) ⊂ (1,1)"), std::string::npos);
}

TEST(AuditEx2, OtherInstances) {
  const auto k1 = audit_prime_not_maximal(ZProductIdeal{0});
  EXPECT_EQ(k1.outcome.status, ClaimStatus::verified);
  ASSERT_EQ(k1.chain.size(), 3u);
  EXPECT_EQ(k1.chain[1], (ZProductIdeal{2}));

  const ZProductIdeal two_one{2, 1};
  EXPECT_TRUE(z_is_prime(two_one));
  EXPECT_TRUE(z_is_maximal(two_one));
  EXPECT_EQ(audit_prime_not_maximal(two_one).outcome.status, ClaimStatus::refuted);
}

TEST(ZLiteral, ParsesAndRejects) {
  EXPECT_EQ(parse_literal("Z^2:(1,0)"), (ZProductIdeal{1, 0}));
  EXPECT_EQ(parse_literal(" Z^3 : (2, 3, 0) "), (ZProductIdeal{2, 3, 0}));
  EXPECT_EQ(ZProductIdeal({1, 0}).literal(), "Z^2:(1,0)");
  EXPECT_THROW(parse_literal("Z^2:(1)"), std::invalid_argument);
  EXPECT_THROW(parse_literal("Z^4:(1,1,1,1)"), std::invalid_argument);
  EXPECT_THROW(parse_literal("Q^2:(1,0)"), std::invalid_argument);
  EXPECT_THROW(parse_literal("Z^2:(1,-1)"), std::invalid_argument);
}
