#pragma once

// Ideals of finite commutative rings: construction, the ideal lattice, and
// the ideal-level and ring-level predicates (prime, maximal, semiprime,
// primary, principal, PPRI, PPRIR).

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pprir/element_set.hpp"
#include "pprir/finite_ring.hpp"
#include "pprir/ring_io.hpp"

namespace pprir {

class Ideal;
namespace detail {
Ideal adopt_ideal(FiniteRing ring, ElementSet members);
}

/// A subset of a ring closed under addition, negation and absorption.
class Ideal {
 public:
  /// Checks the ideal laws; throws std::invalid_argument naming the failure.
  Ideal(FiniteRing ring, ElementSet members) : ring_(std::move(ring)), members_(std::move(members)) {
    if (auto why = violation()) throw std::invalid_argument("not an ideal of '" + ring_.label() + "': " + *why);
  }

  const FiniteRing& ring() const { return ring_; }
  const ElementSet& members() const { return members_; }
  std::size_t size() const { return members_.count(); }
  bool contains(ElementId a) const { return members_.test(ring_.check(a).index()); }
  bool is_zero() const { return members_.count() == 1; }
  bool is_proper() const { return !members_.full(); }

  bool is_subset_of(const Ideal& other) const { return members_.is_subset_of(other.members_); }
  bool is_proper_subset_of(const Ideal& other) const { return members_.is_proper_subset_of(other.members_); }

  /// Sorted element-name list, e.g. "{0,x,y,x+y}".
  std::string to_string() const { return format_element_set(ring_, members_); }

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.ring_.same_as(b.ring_) && a.members_ == b.members_; }
  /// Canonical order (lexicographic on ascending member lists).
  friend std::strong_ordering operator<=>(const Ideal& a, const Ideal& b) { return a.members_ <=> b.members_; }

 private:
  struct Trusted {};
  Ideal(Trusted, FiniteRing ring, ElementSet members) : ring_(std::move(ring)), members_(std::move(members)) {}
  friend Ideal detail::adopt_ideal(FiniteRing, ElementSet);

  std::optional<std::string> violation() const {
    const auto n = ring_.order();
    if (members_.universe() != n) return "member set has the wrong universe size";
    if (!members_.test(ring_.zero().index())) return "does not contain zero";
    std::optional<std::string> why;
    const auto elems = members_.members();
    for (auto a : elems) {
      if (!members_.test(ring_.neg_index(a))) return "not closed under negation at " + ring_.element_names()[a];
      for (auto b : elems)
        if (!members_.test(ring_.add_index(a, b)))
          return "not closed under addition at (" + ring_.element_names()[a] + ", " + ring_.element_names()[b] + ")";
      for (std::uint32_t r = 0; r < n; ++r)
        if (!members_.test(ring_.mul_index(a, r)))
          return "does not absorb multiplication at (" + ring_.element_names()[a] + ", " + ring_.element_names()[r] + ")";
    }
    return std::nullopt;
  }

  FiniteRing ring_;
  ElementSet members_;
};

namespace detail {
inline Ideal adopt_ideal(FiniteRing ring, ElementSet members) { return Ideal(Ideal::Trusted{}, std::move(ring), std::move(members)); }

inline ElementSet principal_set(const FiniteRing& r, std::uint32_t a) {
  ElementSet s(r.order());
  for (std::uint32_t x = 0; x < r.order(); ++x) s.set(r.mul_index(a, x));
  return s;
}

/// I + J for ideals given as member sets: the union of the cosets i + J.
inline ElementSet sum_sets(const FiniteRing& r, const ElementSet& i, const ElementSet& j) {
  if (j.is_subset_of(i)) return i;
  if (i.is_subset_of(j)) return j;
  ElementSet out = i;
  const auto base = i.members();
  j.for_each([&](std::size_t y) {
    if (out.test(y)) return;
    for (auto x : base) out.set(r.add_index(x, static_cast<std::uint32_t>(y)));
  });
  return out;
}

inline void require_same_ring(const FiniteRing& r, const Ideal& i) {
  if (!i.ring().same_as(r)) throw std::invalid_argument("ideal belongs to ring '" + i.ring().label() + "', not '" + r.label() + "'");
}
}  // namespace detail

inline Ideal zero_ideal(const FiniteRing& r) {
  ElementSet s(r.order());
  s.set(r.zero().index());
  return detail::adopt_ideal(r, std::move(s));
}

inline Ideal unit_ideal(const FiniteRing& r) {
  ElementSet s(r.order());
  for (std::uint32_t i = 0; i < r.order(); ++i) s.set(i);
  return detail::adopt_ideal(r, std::move(s));
}

/// {a*r : r in R}, checked against the ideal laws.
inline Ideal principal_ideal(const FiniteRing& r, ElementId a) {
  return Ideal(r, detail::principal_set(r, r.check(a).index()));
}

/// Smallest ideal containing S: fixpoint of closing S u {0} under addition,
/// negation and multiplication by ring elements.
inline Ideal ideal_generated(const FiniteRing& r, std::span<const ElementId> generators) {
  ElementSet members(r.order());
  std::vector<std::uint32_t> todo;
  auto push = [&](std::uint32_t x) {
    if (members.insert(x)) todo.push_back(x);
  };
  push(r.zero().index());
  for (auto g : generators) push(r.check(g).index());
  std::vector<std::uint32_t> seen;
  while (!todo.empty()) {
    const auto x = todo.back();
    todo.pop_back();
    push(r.neg_index(x));
    for (std::uint32_t s = 0; s < r.order(); ++s) push(r.mul_index(x, s));
    for (auto y : seen) push(r.add_index(x, y));
    push(r.add_index(x, x));
    seen.push_back(x);
  }
  return detail::adopt_ideal(r, std::move(members));
}

inline Ideal ideal_generated(const FiniteRing& r, std::initializer_list<ElementId> generators) {
  return ideal_generated(r, std::span<const ElementId>(generators.begin(), generators.size()));
}

inline Ideal sum_ideals(const FiniteRing& r, const Ideal& i, const Ideal& j) {
  detail::require_same_ring(r, i);
  detail::require_same_ring(r, j);
  return detail::adopt_ideal(r, detail::sum_sets(r, i.members(), j.members()));
}

/// {a : a^n in I for some 1 <= n <= |R|}.
inline Ideal radical(const FiniteRing& r, const Ideal& ideal) {
  detail::require_same_ring(r, ideal);
  const auto n = r.order();
  ElementSet out(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint32_t power = a;
    for (std::uint32_t k = 1; k <= n; ++k) {
      if (ideal.members().test(power)) {
        out.set(a);
        break;
      }
      power = r.mul_index(power, a);
    }
  }
  return detail::adopt_ideal(r, std::move(out));
}

/// Proper, and xy in P implies x in P or y in P.
inline bool is_prime(const FiniteRing& r, const Ideal& p) {
  detail::require_same_ring(r, p);
  if (!p.is_proper()) return false;
  const auto& m = p.members();
  for (std::uint32_t x = 0; x < r.order(); ++x) {
    if (m.test(x)) continue;
    for (std::uint32_t y = x; y < r.order(); ++y)
      if (!m.test(y) && m.test(r.mul_index(x, y))) return false;
  }
  return true;
}

/// First pair (x, y) with xy in P, x and y outside P; nullopt if none.
inline std::optional<std::pair<ElementId, ElementId>> prime_violation(const FiniteRing& r, const Ideal& p) {
  detail::require_same_ring(r, p);
  const auto& m = p.members();
  for (std::uint32_t x = 0; x < r.order(); ++x) {
    if (m.test(x)) continue;
    for (std::uint32_t y = x; y < r.order(); ++y)
      if (!m.test(y) && m.test(r.mul_index(x, y))) return std::pair{ElementId(x), ElementId(y)};
  }
  return std::nullopt;
}

/// x^2 in I implies x in I. Cross-checked against Rad(I) = I.
inline bool is_semiprime(const FiniteRing& r, const Ideal& ideal) {
  detail::require_same_ring(r, ideal);
  const auto& m = ideal.members();
  bool squares_ok = true;
  for (std::uint32_t x = 0; x < r.order() && squares_ok; ++x)
    if (!m.test(x) && m.test(r.mul_index(x, x))) squares_ok = false;
  const bool radical_fixed = radical(r, ideal).members() == m;
  if (squares_ok != radical_fixed)
    throw std::logic_error("semiprime square test disagrees with Rad(I) = I on ring '" + r.label() + "'");
  return squares_ok;
}

/// Proper, and xy in I implies x in I or y^n in I for some n <= |R|.
inline bool is_primary(const FiniteRing& r, const Ideal& ideal) {
  detail::require_same_ring(r, ideal);
  if (!ideal.is_proper()) return false;
  const auto& m = ideal.members();
  const auto rad = radical(r, ideal);
  const auto& powers_in = rad.members();
  for (std::uint32_t x = 0; x < r.order(); ++x) {
    if (m.test(x)) continue;
    for (std::uint32_t y = 0; y < r.order(); ++y)
      if (m.test(r.mul_index(x, y)) && !powers_in.test(y)) return false;
  }
  return true;
}

struct PrincipalResult {
  bool principal = false;
  std::optional<ElementId> generator;  // smallest index generating the ideal
};

inline PrincipalResult is_principal(const FiniteRing& r, const Ideal& ideal) {
  detail::require_same_ring(r, ideal);
  const auto target = ideal.size();
  std::optional<ElementId> found;
  ideal.members().for_each([&](std::size_t a) {
    if (found) return;
    const auto s = detail::principal_set(r, static_cast<std::uint32_t>(a));
    if (s.count() == target && s == ideal.members()) found = ElementId(static_cast<std::uint32_t>(a));
  });
  return {found.has_value(), found};
}

inline bool is_ppri(const FiniteRing& r, const Ideal& p) { return is_prime(r, p) && is_principal(r, p).principal; }

// ---------------------------------------------------------------------------
// Lattice

/// Every ideal of a ring in canonical order, with the containment relation.
class IdealLattice {
 public:
  IdealLattice() = default;
  IdealLattice(FiniteRing ring, std::vector<Ideal> ideals) : ring_(std::move(ring)), ideals_(std::move(ideals)) {
    std::sort(ideals_.begin(), ideals_.end());
    const auto n = ideals_.size();
    leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      index_.emplace(ideals_[i].members(), i);
      for (std::size_t j = 0; j < n; ++j) leq_[i * n + j] = ideals_[i].is_subset_of(ideals_[j]);
    }
  }

  const FiniteRing& ring() const { return *ring_; }
  const std::vector<Ideal>& ideals() const& { return ideals_; }
  std::vector<Ideal> ideals() && { return std::move(ideals_); }
  std::size_t size() const { return ideals_.size(); }
  const Ideal& operator[](std::size_t i) const { return ideals_[i]; }

  bool leq(std::size_t i, std::size_t j) const { return leq_[i * ideals_.size() + j]; }

  std::optional<std::size_t> index_of(const Ideal& ideal) const {
    auto it = index_.find(ideal.members());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// All containment pairs (i, j) with ideals[i] a subset of ideals[j].
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (leq(i, j)) out.emplace_back(i, j);
    return out;
  }

  /// Covering edges of the Hasse diagram.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) {
        if (i == j || !leq(i, j)) continue;
        bool direct = true;
        for (std::size_t k = 0; k < size() && direct; ++k)
          if (k != i && k != j && leq(i, k) && leq(k, j)) direct = false;
        if (direct) out.emplace_back(i, j);
      }
    return out;
  }

 private:
  std::optional<FiniteRing> ring_;
  std::vector<Ideal> ideals_;
  std::vector<char> leq_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

/// Closure of the principal ideals under pairwise sum.
inline IdealLattice all_ideals(const FiniteRing& r) {
  const auto n = r.order();
  std::vector<ElementSet> principals;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> principal_index;
  std::vector<std::size_t> generator_of(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    auto s = detail::principal_set(r, a);
    auto [it, fresh] = principal_index.emplace(s, principals.size());
    if (fresh) principals.push_back(std::move(s));
    generator_of[a] = it->second;
  }

  std::unordered_map<ElementSet, bool, ElementSetHash> seen;
  std::vector<ElementSet> found;
  std::vector<std::size_t> todo;
  auto push = [&](ElementSet s) {
    if (seen.emplace(s, true).second) {
      found.push_back(std::move(s));
      todo.push_back(found.size() - 1);
    }
  };
  for (const auto& p : principals) push(p);

  std::vector<char> tried(principals.size());
  while (!todo.empty()) {
    const auto current = todo.back();
    todo.pop_back();
    const ElementSet base = found[current];
    std::fill(tried.begin(), tried.end(), 0);
    for (std::uint32_t a = 0; a < n; ++a) {
      if (base.test(a)) continue;
      const auto pi = generator_of[a];
      if (tried[pi]) continue;
      tried[pi] = 1;
      push(detail::sum_sets(r, base, principals[pi]));
    }
  }

  std::vector<Ideal> ideals;
  ideals.reserve(found.size());
  for (auto& s : found) ideals.push_back(detail::adopt_ideal(r, std::move(s)));
  return IdealLattice(r, std::move(ideals));
}

/// True iff P is proper and no ideal lies strictly between P and R.
inline bool is_maximal(const FiniteRing& r, const Ideal& p, const IdealLattice& lattice) {
  detail::require_same_ring(r, p);
  if (!p.is_proper()) return false;
  for (const auto& j : lattice.ideals())
    if (j.is_proper() && p.is_proper_subset_of(j)) return false;
  return true;
}

inline bool is_maximal(const FiniteRing& r, const Ideal& p) { return is_maximal(r, p, all_ideals(r)); }

inline std::vector<Ideal> prime_spectrum(const FiniteRing& r, const IdealLattice& lattice) {
  std::vector<Ideal> out;
  for (const auto& i : lattice.ideals())
    if (is_prime(r, i)) out.push_back(i);
  return out;  // lattice order is canonical
}

inline std::vector<Ideal> prime_spectrum(const FiniteRing& r) { return prime_spectrum(r, all_ideals(r)); }

/// Primes containing I that contain no strictly smaller such prime.
inline std::vector<Ideal> minimal_primes_over(const FiniteRing& r, const Ideal& ideal, const IdealLattice& lattice) {
  detail::require_same_ring(r, ideal);
  if (!ideal.is_proper()) throw std::invalid_argument("minimal primes are defined over proper ideals only");
  std::vector<Ideal> over;
  for (const auto& p : prime_spectrum(r, lattice))
    if (ideal.is_subset_of(p)) over.push_back(p);
  std::vector<Ideal> out;
  for (const auto& p : over) {
    bool minimal = true;
    for (const auto& q : over)
      if (q.is_proper_subset_of(p)) minimal = false;
    if (minimal) out.push_back(p);
  }
  return out;
}

inline std::vector<Ideal> minimal_primes_over(const FiniteRing& r, const Ideal& ideal) {
  return minimal_primes_over(r, ideal, all_ideals(r));
}

struct PprirResult {
  bool pprir = false;
  std::optional<Ideal> witness;  // first non-principal prime in canonical order
};

inline PprirResult is_pprir(const FiniteRing& r, const IdealLattice& lattice) {
  for (const auto& p : prime_spectrum(r, lattice))
    if (!is_principal(r, p).principal) return {false, p};
  return {true, std::nullopt};
}

inline PprirResult is_pprir(const FiniteRing& r) { return is_pprir(r, all_ideals(r)); }

struct Classification {
  bool is_domain = false;
  bool is_field = false;
  bool is_boolean = false;
  bool is_pprir = false;
  bool is_pprid = false;  // PPRIR and a domain
  std::optional<Ideal> pprir_witness;
};

inline bool is_domain(const FiniteRing& r) {
  const auto z = r.zero().index();
  for (std::uint32_t a = 0; a < r.order(); ++a) {
    if (a == z) continue;
    for (std::uint32_t b = a; b < r.order(); ++b)
      if (b != z && r.mul_index(a, b) == z) return false;
  }
  return true;
}

inline bool is_field(const FiniteRing& r) {
  const auto z = r.zero().index(), one = r.one().index();
  for (std::uint32_t a = 0; a < r.order(); ++a) {
    if (a == z) continue;
    bool invertible = false;
    for (std::uint32_t b = 0; b < r.order() && !invertible; ++b) invertible = r.mul_index(a, b) == one;
    if (!invertible) return false;
  }
  return true;
}

inline bool is_boolean_ring(const FiniteRing& r) {
  for (std::uint32_t a = 0; a < r.order(); ++a)
    if (r.mul_index(a, a) != a) return false;
  return true;
}

inline Classification classify_ring(const FiniteRing& r, const IdealLattice& lattice) {
  Classification c;
  c.is_domain = is_domain(r);
  c.is_field = is_field(r);
  c.is_boolean = is_boolean_ring(r);
  auto pp = is_pprir(r, lattice);
  c.is_pprir = pp.pprir;
  c.pprir_witness = std::move(pp.witness);
  c.is_pprid = c.is_pprir && c.is_domain;
  return c;
}

inline Classification classify_ring(const FiniteRing& r) { return classify_ring(r, all_ideals(r)); }

/// Graphviz rendering of the Hasse diagram.
inline std::string lattice_to_dot(const IdealLattice& lattice) {
  std::string out = "digraph ideals {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    std::string label = lattice[i].to_string();
    std::string escaped;
    for (char ch : label) {
      if (ch == '"' || ch == '\\') escaped += '\\';
      escaped += ch;
    }
    out += "  I" + std::to_string(i) + " [label=\"" + escaped + "\"];\n";
  }
  for (auto [a, b] : lattice.covers()) out += "  I" + std::to_string(a) + " -> I" + std::to_string(b) + ";\n";
  return out + "}\n";
}

}  // namespace pprir
