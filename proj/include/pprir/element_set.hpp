#pragma once

// Dense bitset over the element indices of one finite ring.

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace pprir {

class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }

  bool test(std::size_t i) const {
    assert(i < universe_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) {
    assert(i < universe_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(std::size_t i) {
    assert(i < universe_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  /// Sets bit i and reports whether it was previously clear.
  bool insert(std::size_t i) {
    if (test(i)) return false;
    set(i);
    return true;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool full() const { return count() == universe_; }

  bool is_subset_of(const ElementSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }
  bool is_proper_subset_of(const ElementSet& other) const {
    return is_subset_of(other) && *this != other;
  }

  ElementSet& operator|=(const ElementSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * 64 + bit);
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Canonical order: lexicographic comparison of the ascending member lists.
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    assert(a.universe_ == b.universe_);
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      const std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (!diff) continue;
      const auto bit = static_cast<std::size_t>(std::countr_zero(diff));
      const bool in_a = (a.words_[w] >> bit) & 1u;
      // The set holding the first differing element d is smaller unless the
      // other set has no members past d (then the other is a proper prefix).
      const ElementSet& other = in_a ? b : a;
      const bool other_continues = other.any_above(w * 64 + bit);
      if (in_a) return other_continues ? std::strong_ordering::less : std::strong_ordering::greater;
      return other_continues ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  bool any_above(std::size_t i) const {
    std::size_t w = i >> 6;
    const std::size_t shift = (i & 63) + 1;
    if (shift < 64 && (words_[w] >> shift)) return true;
    for (++w; w < words_.size(); ++w)
      if (words_[w]) return true;
    return false;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace pprir
