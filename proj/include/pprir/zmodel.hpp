#pragma once

// Symbolic ideals n1 Z x ... x nk Z of Z^k (1 <= k <= 3). Every ideal of a
// finite product of unital rings is a product of ideals, so a generator
// tuple describes each ideal uniquely.

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pprir/claim.hpp"
#include "pprir/finite_ring.hpp"

namespace pprir::zmodel {

class ZProductIdeal {
 public:
  explicit ZProductIdeal(std::vector<std::uint64_t> gens) : gens_(std::move(gens)) {
    if (gens_.empty() || gens_.size() > 3)
      throw std::invalid_argument("Z^k model supports arity 1..3; got " + std::to_string(gens_.size()));
    for (auto g : gens_)
      if (g >= (std::uint64_t{1} << 31)) throw std::invalid_argument("generator entries must be below 2^31");
  }
  ZProductIdeal(std::initializer_list<std::uint64_t> gens) : ZProductIdeal(std::vector<std::uint64_t>(gens)) {}

  std::size_t arity() const { return gens_.size(); }
  const std::vector<std::uint64_t>& gens() const { return gens_; }
  bool is_whole() const {
    for (auto g : gens_)
      if (g != 1) return false;
    return true;
  }

  /// "(1,0)"
  std::string tuple() const {
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) out += (i ? "," : "") + std::to_string(gens_[i]);
    return out + ")";
  }

  /// "Z×{0}" style: 1 -> Z, 0 -> {0}, 2 -> Z_e (even integers), n -> nZ.
  std::string pretty() const {
    std::string out;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) out += "×";
      const auto g = gens_[i];
      if (g == 1) out += "Z";
      else if (g == 0) out += "{0}";
      else if (g == 2) out += "Z_e";
      else out += std::to_string(g) + "Z";
    }
    return out;
  }

  /// CLI literal "Z^k:(n1,...,nk)".
  std::string literal() const { return "Z^" + std::to_string(gens_.size()) + ":" + tuple(); }

  friend bool operator==(const ZProductIdeal&, const ZProductIdeal&) = default;

 private:
  std::vector<std::uint64_t> gens_;
};

/// Parses "Z^2:(1,0)" (whitespace tolerated).
inline ZProductIdeal parse_literal(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto fail = [&]() -> ZProductIdeal { throw std::invalid_argument("bad Z^k ideal literal '" + std::string(text) + "'"); };
  if (s.size() < 7 || s.compare(0, 2, "Z^") != 0) return fail();
  const auto colon = s.find(':');
  if (colon == std::string::npos || colon < 3) return fail();
  std::size_t k = 0;
  for (std::size_t i = 2; i < colon; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return fail();
    k = k * 10 + static_cast<std::size_t>(s[i] - '0');
  }
  const auto body = s.substr(colon + 1);
  if (body.size() < 3 || body.front() != '(' || body.back() != ')') return fail();
  std::vector<std::uint64_t> gens;
  std::string num;
  for (std::size_t i = 1; i < body.size(); ++i) {
    const char ch = body[i];
    if (ch == ',' || ch == ')') {
      if (num.empty() || num.size() > 10) return fail();
      gens.push_back(std::stoull(num));
      num.clear();
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      num += ch;
    } else {
      return fail();
    }
  }
  if (gens.size() != k) throw std::invalid_argument("literal declares arity " + std::to_string(k) + " but lists " +
                                                    std::to_string(gens.size()) + " generators");
  return ZProductIdeal(std::move(gens));
}

/// mZ contains m'Z iff m | m' (every d divides 0).
inline bool divides(std::uint64_t d, std::uint64_t m) {
  if (m == 0) return true;
  if (d == 0) return false;
  return m % d == 0;
}

/// True iff `outer` contains `inner` (componentwise divisibility).
inline bool z_contains(const ZProductIdeal& outer, const ZProductIdeal& inner) {
  if (outer.arity() != inner.arity()) throw std::invalid_argument("arity mismatch in containment test");
  for (std::size_t i = 0; i < outer.arity(); ++i)
    if (!divides(outer.gens()[i], inner.gens()[i])) return false;
  return true;
}

/// Prime iff exactly one factor is 0 or a prime p and the rest are Z, so the
/// quotient is Z or Z_p.
inline bool z_is_prime(const ZProductIdeal& ideal) {
  std::size_t special = 0;
  for (auto g : ideal.gens()) {
    if (g == 1) continue;
    if (g != 0 && !is_prime_number(g)) return false;
    ++special;
  }
  return special == 1;
}

/// Maximal iff exactly one factor is pZ for a prime p and the rest are Z.
inline bool z_is_maximal(const ZProductIdeal& ideal) {
  std::size_t special = 0;
  for (auto g : ideal.gens()) {
    if (g == 1) continue;
    if (!is_prime_number(g)) return false;
    ++special;
  }
  return special == 1;
}

/// The generator tuple itself: (n1,...,nk) * Z^k is the ideal.
inline std::vector<std::uint64_t> z_principal_witness(const ZProductIdeal& ideal) { return ideal.gens(); }

/// Some J with I strictly inside J strictly inside Z^k, if one exists.
inline std::optional<ZProductIdeal> z_strict_intermediate(const ZProductIdeal& ideal) {
  if (ideal.is_whole() || z_is_maximal(ideal)) return std::nullopt;
  auto gens = ideal.gens();
  std::size_t non_unit = 0;
  for (auto g : gens) non_unit += g != 1;
  for (auto& g : gens) {
    if (g == 0) {
      g = 2;
      return ZProductIdeal(gens);
    }
  }
  if (non_unit >= 2) {
    for (auto& g : gens)
      if (g != 1) {
        g = 1;
        return ZProductIdeal(gens);
      }
  }
  for (auto& g : gens) {
    if (g == 1) continue;
    for (std::uint64_t d = 2; d * d <= g; ++d)
      if (g % d == 0) {
        g = d;
        return ZProductIdeal(gens);
      }
  }
  return std::nullopt;
}

struct Example2Result {
  ZProductIdeal ideal;
  bool prime = false;
  bool maximal = false;
  std::vector<std::uint64_t> generator;
  std::vector<ZProductIdeal> chain;  // ideal ⊂ intermediate ⊂ whole ring
  ClaimOutcome outcome;
};

/// A prime, principal, non-maximal ideal of Z^k together with its witness chain.
inline Example2Result audit_prime_not_maximal(const ZProductIdeal& ideal) {
  Example2Result res{ideal, z_is_prime(ideal), z_is_maximal(ideal), z_principal_witness(ideal), {}, {}};
  const auto mid = z_strict_intermediate(ideal);
  res.chain.push_back(ideal);
  if (mid) res.chain.push_back(*mid);
  res.chain.push_back(ZProductIdeal(std::vector<std::uint64_t>(ideal.arity(), 1)));

  std::string pretty, tuples;
  for (std::size_t i = 0; i < res.chain.size(); ++i) {
    if (i) {
      pretty += " ⊂ ";
      tuples += " ⊂ ";
    }
    pretty += res.chain[i].pretty();
    tuples += res.chain[i].tuple();
  }
  const std::string chain_text = pretty + " [" + tuples + "]";
  const bool chain_ok = mid && z_contains(*mid, ideal) && !z_contains(ideal, *mid) && !mid->is_whole();
  if (res.prime && !res.maximal && chain_ok && ZProductIdeal(res.generator) == ideal)
    res.outcome = ClaimOutcome{ClaimStatus::verified, chain_text,
                               "prime, principal with generator " + ideal.tuple() + ", not maximal"};
  else
    res.outcome = ClaimOutcome::refuted(ideal.literal(), std::string("prime=") + (res.prime ? "true" : "false") +
                                                             " maximal=" + (res.maximal ? "true" : "false"));
  return res;
}

/// Z x {0} in Z^2: prime, principal, not maximal.
inline Example2Result audit_ex2() { return audit_prime_not_maximal(ZProductIdeal{1, 0}); }

}  // namespace pprir::zmodel
