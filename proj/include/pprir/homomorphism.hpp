#pragma once

// Unital ring homomorphisms between finite rings and endomorphism search.

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pprir/finite_ring.hpp"
#include "pprir/ideal.hpp"

namespace pprir {

inline constexpr std::uint32_t kDefaultEndomorphismCap = 16;

/// The endomorphism cap, raised by the PPRIR_ENDO_CAP environment variable.
inline std::uint32_t endomorphism_cap_from_env() {
  if (const char* v = std::getenv("PPRIR_ENDO_CAP")) {
    char* end = nullptr;
    const auto parsed = std::strtoul(v, &end, 10);
    if (end != v && *end == '\0' && parsed > 0 && parsed <= kMaxRingOrder) return static_cast<std::uint32_t>(parsed);
  }
  return kDefaultEndomorphismCap;
}

/// A total element map between two rings. Construction checks only shape;
/// check_hom decides the preservation laws.
class RingHom {
 public:
  RingHom(FiniteRing source, FiniteRing target, std::vector<ElementId> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (map_.size() != source_.order())
      throw std::invalid_argument("map has " + std::to_string(map_.size()) + " entries; source order is " +
                                  std::to_string(source_.order()));
    for (auto m : map_) target_.check(m);
  }

  static RingHom identity(const FiniteRing& r) {
    std::vector<ElementId> map;
    for (std::uint32_t i = 0; i < r.order(); ++i) map.emplace_back(i);
    return RingHom(r, r, std::move(map));
  }

  const FiniteRing& source() const { return source_; }
  const FiniteRing& target() const { return target_; }
  const std::vector<ElementId>& map() const { return map_; }
  ElementId operator()(ElementId a) const { return map_[source_.check(a).index()]; }

  /// "src -> dst: [i0,i1,...]"
  std::string to_string() const {
    std::string out = source_.label() + " -> " + target_.label() + ": [";
    for (std::size_t i = 0; i < map_.size(); ++i) out += (i ? "," : "") + std::to_string(map_[i].index());
    return out + "]";
  }

 private:
  FiniteRing source_;
  FiniteRing target_;
  std::vector<ElementId> map_;
};

inline bool check_hom(const RingHom& h) {
  const auto& s = h.source();
  const auto& t = h.target();
  const auto& m = h.map();
  if (m[s.one().index()] != t.one()) return false;
  for (std::uint32_t a = 0; a < s.order(); ++a)
    for (std::uint32_t b = a; b < s.order(); ++b) {
      if (m[s.add_index(a, b)].index() != t.add_index(m[a].index(), m[b].index())) return false;
      if (m[s.mul_index(a, b)].index() != t.mul_index(m[a].index(), m[b].index())) return false;
    }
  return true;
}

/// {a : h(a) = 0}. Throws std::invalid_argument if h is not a homomorphism.
inline Ideal kernel(const RingHom& h) {
  if (!check_hom(h)) throw std::invalid_argument("kernel requested for a non-homomorphism " + h.to_string());
  ElementSet members(h.source().order());
  for (std::uint32_t a = 0; a < h.source().order(); ++a)
    if (h.map()[a] == h.target().zero()) members.set(a);
  return Ideal(h.source(), std::move(members));
}

struct HomKind {
  bool injective = false;
  bool surjective = false;
  friend bool operator==(const HomKind&, const HomKind&) = default;
};

inline HomKind classify_hom(const RingHom& h) {
  HomKind k;
  k.injective = kernel(h).is_zero();
  ElementSet image(h.target().order());
  for (auto m : h.map()) image.set(m.index());
  k.surjective = image.full();
  return k;
}

namespace detail {

/// Propagates generator images along x -> x + g edges starting from 0.
/// Returns false on an additive inconsistency.
inline bool extend_additively(const FiniteRing& r, const std::vector<std::uint32_t>& gens, const std::vector<std::uint32_t>& images,
                              std::size_t assigned, std::vector<std::int64_t>& map) {
  std::fill(map.begin(), map.end(), -1);
  map[r.zero().index()] = r.zero().index();
  std::vector<std::uint32_t> todo{r.zero().index()};
  while (!todo.empty()) {
    const auto x = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i < assigned; ++i) {
      const auto y = r.add_index(x, gens[i]);
      const auto image = static_cast<std::int64_t>(r.add_index(static_cast<std::uint32_t>(map[x]), images[i]));
      if (map[y] < 0) {
        map[y] = image;
        todo.push_back(y);
      } else if (map[y] != image) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

/// All unital ring endomorphisms of R by backtracking over the images of an
/// additive generating set (1 first, fixed to 1). Candidate images must have
/// additive order dividing the generator's. Throws if |R| exceeds the cap.
inline std::vector<RingHom> endomorphisms(const FiniteRing& r, std::uint32_t cap = endomorphism_cap_from_env()) {
  if (r.order() > cap)
    throw std::invalid_argument("ring '" + r.label() + "' of order " + std::to_string(r.order()) + " exceeds the endomorphism search cap " +
                                std::to_string(cap) + " (raise it with PPRIR_ENDO_CAP)");
  const auto n = r.order();

  // Greedy generating set: 1, then the smallest element outside the subgroup so far.
  std::vector<std::uint32_t> gens{r.one().index()};
  {
    std::vector<std::int64_t> scratch(n);
    while (true) {
      // Extending the identity assignment marks the subgroup spanned so far.
      detail::extend_additively(r, gens, gens, gens.size(), scratch);
      std::optional<std::uint32_t> next;
      for (std::uint32_t a = 0; a < n && !next; ++a)
        if (scratch[a] < 0) next = a;
      if (!next) break;
      gens.push_back(*next);
    }
  }
  std::vector<std::uint32_t> orders(n);
  for (std::uint32_t a = 0; a < n; ++a) orders[a] = additive_order(r, ElementId(a));

  std::vector<RingHom> out;
  std::vector<std::uint32_t> images(gens.size());
  images[0] = r.one().index();
  std::vector<std::int64_t> map(n);

  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (!detail::extend_additively(r, gens, images, depth, map)) return;
    if (depth == gens.size()) {
      std::vector<ElementId> m;
      m.reserve(n);
      for (auto v : map) m.emplace_back(static_cast<std::uint32_t>(v));
      RingHom h(r, r, std::move(m));
      if (check_hom(h)) out.push_back(std::move(h));
      return;
    }
    for (std::uint32_t candidate = 0; candidate < n; ++candidate) {
      if (orders[gens[depth]] % orders[candidate] != 0) continue;
      images[depth] = candidate;
      self(self, depth + 1);
    }
  };
  search(search, 1);
  return out;
}

}  // namespace pprir
