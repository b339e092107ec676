// Invariants checked over the default corpus plus randomly generated rings
// (products of small Z_n and Boolean factors, seeded).

#include <gtest/gtest.h>

#include <random>

#include "pprir/audit.hpp"
#include "test_support.hpp"

using namespace pprir;
using namespace pprir::testing;

namespace {

constexpr std::uint64_t kSeed = 20261018;
constexpr int kRandomRings = 40;

std::vector<FiniteRing> random_rings() {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<std::uint32_t> modulus(2, 9), factors(1, 3), pick(0, 3);
  std::vector<FiniteRing> out;
  while (out.size() < static_cast<std::size_t>(kRandomRings)) {
    std::vector<FiniteRing> fs;
    const auto k = factors(rng);
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      FiniteRing f = pick(rng) == 0 ? make_boolean(1 + pick(rng) % 2)
                                    : pick(rng) == 1 ? corpus_rings::dual_numbers(2) : make_zn(modulus(rng));
      order *= f.order();
      fs.push_back(f);
    }
    if (order > 64) continue;
    out.push_back(make_product(fs));
  }
  return out;
}

std::vector<FiniteRing> all_test_rings() {
  auto rings = default_corpus().rings();
  for (auto& r : random_rings()) rings.push_back(r);
  return rings;
}

}  // namespace

TEST(Properties, PrincipalIdealEqualsGeneratedIdeal) {
  for (const auto& r : all_test_rings())
    for (std::uint32_t a = 0; a < r.order(); ++a)
      EXPECT_EQ(principal_ideal(r, ElementId(a)), ideal_generated(r, {ElementId(a)})) << r.label() << " a=" << a;
}

TEST(Properties, RadicalLaws) {
  for (const auto& r : all_test_rings())
    for (const auto& i : all_ideals(r).ideals()) {
      const auto rad = radical(r, i);
      EXPECT_TRUE(i.is_subset_of(rad)) << r.label();
      EXPECT_EQ(radical(r, rad), rad) << r.label();
      EXPECT_EQ(is_semiprime(r, i), rad == i) << r.label();
    }
}

TEST(Properties, PrimeMaximalAndQuotientDomainAgree) {
  for (const auto& r : all_test_rings()) {
    const auto lattice = all_ideals(r);
    for (const auto& i : lattice.ideals()) {
      if (!i.is_proper()) continue;
      const bool prime = is_prime(r, i);
      const bool maximal = is_maximal(r, i, lattice);
      EXPECT_TRUE(!maximal || prime) << r.label();
      EXPECT_EQ(prime, maximal) << r.label() << " " << i.to_string();
      EXPECT_EQ(prime, prime_by_definition(r, members(i))) << r.label();
      EXPECT_EQ(prime, is_domain(quotient_ring(r, i).quotient)) << r.label() << " " << i.to_string();
    }
  }
}

TEST(Properties, IdealCountOfZnIsDivisorCount) {
  for (std::uint32_t n = 2; n <= 64; ++n) EXPECT_EQ(all_ideals(make_zn(n)).size(), divisor_count(n)) << n;
}

TEST(Properties, IdealSizeDividesRingOrder) {
  for (const auto& r : all_test_rings())
    for (const auto& i : all_ideals(r).ideals()) EXPECT_EQ(r.order() % i.size(), 0u) << r.label();
}

TEST(Properties, LatticeContainsBoundsAndIsClosedUnderSum) {
  for (const auto& r : all_test_rings()) {
    const auto lattice = all_ideals(r);
    EXPECT_TRUE(lattice.index_of(zero_ideal(r)).has_value());
    EXPECT_TRUE(lattice.index_of(unit_ideal(r)).has_value());
    for (const auto& i : lattice.ideals())
      for (const auto& j : lattice.ideals()) EXPECT_TRUE(lattice.index_of(sum_ideals(r, i, j)).has_value()) << r.label();
  }
}

TEST(Properties, SpectrumIsDeduplicatedAndPrime) {
  for (const auto& r : all_test_rings()) {
    const auto spec = prime_spectrum(r);
    EXPECT_FALSE(spec.empty());
    for (std::size_t i = 0; i < spec.size(); ++i) {
      EXPECT_TRUE(is_prime(r, spec[i]));
      if (i) {
        EXPECT_LT(spec[i - 1], spec[i]);
      }
    }
  }
}

TEST(Properties, EndomorphismsIncludeIdentityAndAreHoms) {
  for (const auto& r : all_test_rings()) {
    if (r.order() > 16) continue;
    const auto endos = endomorphisms(r, 16);
    bool has_identity = false;
    for (const auto& h : endos) {
      EXPECT_TRUE(check_hom(h));
      has_identity = has_identity || h.map() == RingHom::identity(r).map();
      const auto kind = classify_hom(h);
      EXPECT_EQ(kind.injective, kind.surjective) << r.label();
    }
    EXPECT_TRUE(has_identity) << r.label();
  }
}

TEST(Properties, RandomProductsArePprir) {
  // Products of principal ideal rings are principal ideal rings.
  for (const auto& r : random_rings()) EXPECT_TRUE(is_pprir(r).pprir) << r.label();
}

TEST(Properties, ElementSetOrderMatchesMemberListOrder) {
  std::mt19937_64 rng(kSeed);
  std::bernoulli_distribution coin(0.3);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 150;
    ElementSet a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (coin(rng)) a.set(i);
      if (coin(rng)) b.set(i);
    }
    const auto ma = a.members(), mb = b.members();
    EXPECT_EQ(a <=> b, ma <=> mb);
  }
}
