#pragma once

// Quotient rings R/I, plus two checks built on them: P prime iff R/P is a
// PPRID, and surjective endomorphisms are injective.

#include <string>
#include <vector>

#include "pprir/claim.hpp"
#include "pprir/finite_ring.hpp"
#include "pprir/homomorphism.hpp"
#include "pprir/ideal.hpp"

namespace pprir {

struct QuotientPresentation {
  FiniteRing base;
  Ideal ideal;
  /// Cosets in order of their representatives; each lists its members ascending.
  std::vector<std::vector<ElementId>> cosets;
  FiniteRing quotient;
  RingHom projection;
};

/// R/I for a proper ideal I. Coset representatives are the minimal element
/// index per coset; quotient element k is the coset with the k-th smallest
/// representative and is named "[rep]".
inline QuotientPresentation quotient_ring(const FiniteRing& r, const Ideal& ideal) {
  detail::require_same_ring(r, ideal);
  if (!ideal.is_proper()) throw std::invalid_argument("quotient by the whole ring is the zero ring, which is excluded");
  const auto n = r.order();
  const auto members = ideal.members().members();
  std::vector<std::int64_t> coset_of(n, -1);
  std::vector<std::uint32_t> reps;
  std::vector<std::vector<ElementId>> cosets;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (coset_of[a] >= 0) continue;
    const auto id = static_cast<std::int64_t>(reps.size());
    reps.push_back(a);
    std::vector<ElementId> coset;
    for (auto i : members) {
      const auto x = r.add_index(a, i);
      coset_of[x] = id;
      coset.emplace_back(x);
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  const auto q = static_cast<std::uint32_t>(reps.size());
  RingTables t;
  t.order = q;
  t.add.resize(std::size_t{q} * q);
  t.mul.resize(std::size_t{q} * q);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) {
      t.add[std::size_t{a} * q + b] = static_cast<std::uint32_t>(coset_of[r.add_index(reps[a], reps[b])]);
      t.mul[std::size_t{a} * q + b] = static_cast<std::uint32_t>(coset_of[r.mul_index(reps[a], reps[b])]);
    }
  t.zero = static_cast<std::uint32_t>(coset_of[r.zero().index()]);
  t.one = static_cast<std::uint32_t>(coset_of[r.one().index()]);
  t.label = r.label() + "/" + ideal.to_string();
  for (auto rep : reps) t.element_names.push_back("[" + r.element_names()[rep] + "]");
  auto quotient = FiniteRing::from_tables(std::move(t));

  std::vector<ElementId> proj;
  proj.reserve(n);
  for (std::uint32_t a = 0; a < n; ++a) proj.emplace_back(static_cast<std::uint32_t>(coset_of[a]));
  RingHom projection(r, quotient, std::move(proj));
  return QuotientPresentation{r, ideal, std::move(cosets), quotient, std::move(projection)};
}

/// For every proper ideal P: P prime <=> (R/P is a domain and a PPRIR).
/// The note records whether R itself is a PPRIR (the hypothesis).
inline ClaimOutcome audit_thm1(const FiniteRing& r, const IdealLattice& lattice) {
  const bool hypothesis = is_pprir(r, lattice).pprir;
  std::size_t checked = 0;
  for (const auto& p : lattice.ideals()) {
    if (!p.is_proper()) continue;
    ++checked;
    const auto q = quotient_ring(r, p);
    const bool prime = is_prime(r, p);
    const bool quotient_pprid = is_domain(q.quotient) && is_pprir(q.quotient).pprir;
    if (prime != quotient_pprid)
      return ClaimOutcome::refuted(p.to_string(), std::string("prime=") + (prime ? "true" : "false") +
                                                      " but quotient PPRID=" + (quotient_pprid ? "true" : "false"));
  }
  return ClaimOutcome::verified(std::to_string(checked) + " proper ideals checked; hypothesis (R is PPRIR) " +
                                (hypothesis ? "holds" : "fails"));
}

inline ClaimOutcome audit_thm1(const FiniteRing& r) { return audit_thm1(r, all_ideals(r)); }

/// Every surjective unital endomorphism is injective (and conversely, by
/// cardinality). Skipped above the endomorphism cap.
inline ClaimOutcome audit_thm3(const FiniteRing& r, std::uint32_t cap = endomorphism_cap_from_env()) {
  if (r.order() > cap)
    return ClaimOutcome::skipped("order " + std::to_string(r.order()) + " exceeds endomorphism cap " + std::to_string(cap));
  const auto endos = endomorphisms(r, cap);
  std::size_t surjective = 0;
  for (const auto& h : endos) {
    const auto kind = classify_hom(h);
    if (kind.surjective) ++surjective;
    if (kind.surjective != kind.injective) return ClaimOutcome::refuted(h.to_string(), "surjective endomorphism with nonzero kernel");
  }
  return ClaimOutcome::verified(std::to_string(endos.size()) + " endomorphisms, " + std::to_string(surjective) + " surjective");
}

}  // namespace pprir
