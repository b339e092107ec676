#pragma once

// Finite commutative rings with nonzero unity, stored as full Cayley tables
// over dense element indices 0..order-1.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pprir {

inline constexpr std::uint32_t kMaxRingOrder = 4096;

/// Rings up to this order are validated by exhaustive triple loops; larger
/// ones by the generator-reduced checks in detail::find_violation.
inline constexpr std::uint32_t kExhaustiveValidationOrder = 256;

class ElementId {
 public:
  constexpr ElementId() = default;
  constexpr explicit ElementId(std::uint32_t index) : index_(index) {}
  constexpr std::uint32_t index() const { return index_; }
  friend constexpr auto operator<=>(ElementId, ElementId) = default;

 private:
  std::uint32_t index_ = 0;
};

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A ring axiom failed. `axiom` names the law; `witness` holds the element
/// indices that violate it.
class AxiomError : public RingError {
 public:
  AxiomError(std::string axiom, std::vector<std::uint32_t> witness, const std::string& message)
      : RingError(message), axiom_(std::move(axiom)), witness_(std::move(witness)) {}
  const std::string& axiom() const { return axiom_; }
  const std::vector<std::uint32_t>& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::vector<std::uint32_t> witness_;
};

/// Raw ingredients of a ring before validation.
struct RingTables {
  std::uint32_t order = 0;
  std::vector<std::uint32_t> add;  // row-major order x order
  std::vector<std::uint32_t> mul;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;
  std::string label;
  std::vector<std::string> element_names;  // empty means decimal indices
};

struct AxiomViolation {
  std::string axiom;
  std::vector<std::uint32_t> witness;
};

namespace detail {

inline std::string join_indices(std::span<const std::uint32_t> xs, const std::vector<std::string>& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i] < names.size() ? names[xs[i]] : std::to_string(xs[i]);
  }
  return out + ")";
}

/// Additive generating set whose left-bracketed sums reach every element,
/// assuming the table is an abelian group. Returns nullopt if they do not.
inline std::optional<std::vector<std::uint32_t>> additive_generators(std::uint32_t n, std::span<const std::uint32_t> add,
                                                                     std::uint32_t zero) {
  std::vector<std::uint32_t> gens;
  std::vector<char> reached(n, 0);
  std::vector<std::uint32_t> frontier{zero};
  reached[zero] = 1;
  std::uint32_t reached_count = 1;
  auto expand = [&](std::vector<std::uint32_t> todo) {
    while (!todo.empty()) {
      const auto x = todo.back();
      todo.pop_back();
      for (auto g : gens) {
        const auto y = add[std::size_t{x} * n + g];
        if (!reached[y]) {
          reached[y] = 1;
          ++reached_count;
          todo.push_back(y);
        }
      }
    }
  };
  for (std::uint32_t candidate = 0; candidate < n && reached_count < n; ++candidate) {
    if (reached[candidate]) continue;
    gens.push_back(candidate);
    std::vector<std::uint32_t> all;
    for (std::uint32_t i = 0; i < n; ++i)
      if (reached[i]) all.push_back(i);
    expand(std::move(all));
  }
  if (reached_count != n) return std::nullopt;
  return gens;
}

inline std::optional<AxiomViolation> find_violation(const RingTables& t) {
  const std::uint32_t n = t.order;
  if (n < 2) return AxiomViolation{"order >= 2 (zero ring excluded)", {}};
  if (n > kMaxRingOrder) return AxiomViolation{"order <= " + std::to_string(kMaxRingOrder), {}};
  const std::size_t cells = std::size_t{n} * n;
  if (t.add.size() != cells || t.mul.size() != cells) return AxiomViolation{"table shape order x order", {}};
  for (std::size_t i = 0; i < cells; ++i) {
    if (t.add[i] >= n) return AxiomViolation{"addition entry in range", {std::uint32_t(i / n), std::uint32_t(i % n)}};
    if (t.mul[i] >= n)
      return AxiomViolation{"multiplication entry in range", {std::uint32_t(i / n), std::uint32_t(i % n)}};
  }
  if (t.zero >= n || t.one >= n) return AxiomViolation{"zero and one in range", {}};
  if (!t.element_names.empty() && t.element_names.size() != n)
    return AxiomViolation{"one name per element", {}};
  if (t.zero == t.one) return AxiomViolation{"nonzero unity (one != zero)", {t.one}};

  auto A = [&](std::uint32_t a, std::uint32_t b) { return t.add[std::size_t{a} * n + b]; };
  auto M = [&](std::uint32_t a, std::uint32_t b) { return t.mul[std::size_t{a} * n + b]; };

  for (std::uint32_t a = 0; a < n; ++a) {
    if (A(a, t.zero) != a) return AxiomViolation{"additive identity (a+0=a)", {a}};
    if (M(t.one, a) != a) return AxiomViolation{"multiplicative unity (1*a=a)", {a}};
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::uint32_t b = 0; b < n; ++b) {
      if (A(a, b) != A(b, a)) return AxiomViolation{"additive commutativity (a+b=b+a)", {a, b}};
      if (M(a, b) != M(b, a)) return AxiomViolation{"multiplicative commutativity (ab=ba)", {a, b}};
      has_inverse = has_inverse || A(a, b) == t.zero;
    }
    if (!has_inverse) return AxiomViolation{"additive inverse exists", {a}};
  }

  if (n <= kExhaustiveValidationOrder) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        const auto ab_sum = A(a, b);
        const auto ab_prod = M(a, b);
        for (std::uint32_t c = 0; c < n; ++c) {
          if (A(ab_sum, c) != A(a, A(b, c))) return AxiomViolation{"additive associativity ((a+b)+c=a+(b+c))", {a, b, c}};
          if (M(a, A(b, c)) != A(ab_prod, M(a, c))) return AxiomViolation{"distributivity (a(b+c)=ab+ac)", {a, b, c}};
          if (M(ab_prod, c) != M(a, M(b, c))) return AxiomViolation{"multiplicative associativity ((ab)c=a(bc))", {a, b, c}};
        }
      }
    return std::nullopt;
  }

  // Large rings: Light's associativity test on an additive generating set,
  // then bilinearity and trilinear associativity on generators only.
  const auto gens = additive_generators(n, t.add, t.zero);
  if (!gens) return AxiomViolation{"additive associativity (generated group)", {}};
  for (auto g : *gens)
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        if (A(A(a, g), b) != A(a, A(g, b))) return AxiomViolation{"additive associativity ((a+b)+c=a+(b+c))", {a, g, b}};
        if (M(a, A(b, g)) != A(M(a, b), M(a, g))) return AxiomViolation{"distributivity (a(b+c)=ab+ac)", {a, b, g}};
      }
  for (auto x : *gens)
    for (auto y : *gens)
      for (auto z : *gens)
        if (M(M(x, y), z) != M(x, M(y, z))) return AxiomViolation{"multiplicative associativity ((ab)c=a(bc))", {x, y, z}};
  return std::nullopt;
}

}  // namespace detail

/// Validates the tables, throwing AxiomError on the first violated law.
inline void validate(const RingTables& t) {
  if (auto v = detail::find_violation(t)) {
    std::string msg = "ring '" + t.label + "' violates " + v->axiom;
    if (!v->witness.empty()) msg += " at " + detail::join_indices(v->witness, t.element_names);
    throw AxiomError(v->axiom, v->witness, msg);
  }
}

/// Immutable finite commutative unital ring. Copies share the same tables.
class FiniteRing {
 public:
  /// Validates and adopts the tables. Throws AxiomError.
  static FiniteRing from_tables(RingTables tables) {
    validate(tables);
    auto impl = std::make_shared<Impl>();
    const std::uint32_t n = tables.order;
    if (tables.element_names.empty()) {
      tables.element_names.reserve(n);
      for (std::uint32_t i = 0; i < n; ++i) tables.element_names.push_back(std::to_string(i));
    }
    impl->neg.resize(n);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        if (tables.add[std::size_t{a} * n + b] == tables.zero) {
          impl->neg[a] = static_cast<std::uint16_t>(b);
          break;
        }
    impl->add.assign(tables.add.begin(), tables.add.end());
    impl->mul.assign(tables.mul.begin(), tables.mul.end());
    impl->order = n;
    impl->zero = tables.zero;
    impl->one = tables.one;
    impl->label = std::move(tables.label);
    impl->names = std::move(tables.element_names);
    return FiniteRing(std::move(impl));
  }

  std::uint32_t order() const { return impl_->order; }
  ElementId zero() const { return ElementId(impl_->zero); }
  ElementId one() const { return ElementId(impl_->one); }
  const std::string& label() const { return impl_->label; }
  const std::vector<std::string>& element_names() const { return impl_->names; }
  const std::string& name(ElementId a) const { return impl_->names[check(a).index()]; }

  std::optional<ElementId> find(std::string_view name) const {
    const auto& names = impl_->names;
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return ElementId(static_cast<std::uint32_t>(it - names.begin()));
  }

  ElementId check(ElementId a) const {
    if (a.index() >= impl_->order)
      throw std::out_of_range("element index " + std::to_string(a.index()) + " out of range for ring '" +
                              impl_->label + "' of order " + std::to_string(impl_->order));
    return a;
  }

  ElementId add(ElementId a, ElementId b) const { return ElementId(add_index(check(a).index(), check(b).index())); }
  ElementId mul(ElementId a, ElementId b) const { return ElementId(mul_index(check(a).index(), check(b).index())); }
  ElementId neg(ElementId a) const { return ElementId(neg_index(check(a).index())); }
  ElementId sub(ElementId a, ElementId b) const { return add(a, neg(b)); }
  ElementId pow(ElementId a, std::uint64_t exponent) const {
    if (exponent < 1) throw std::invalid_argument("pow requires exponent >= 1");
    std::uint32_t acc = check(a).index();
    for (std::uint64_t i = 1; i < exponent; ++i) acc = mul_index(acc, a.index());
    return ElementId(acc);
  }

  // Unchecked index arithmetic for hot loops.
  std::uint32_t add_index(std::uint32_t a, std::uint32_t b) const { return impl_->add[std::size_t{a} * impl_->order + b]; }
  std::uint32_t mul_index(std::uint32_t a, std::uint32_t b) const { return impl_->mul[std::size_t{a} * impl_->order + b]; }
  std::uint32_t neg_index(std::uint32_t a) const { return impl_->neg[a]; }

  RingTables tables() const {
    RingTables t;
    t.order = impl_->order;
    t.add.assign(impl_->add.begin(), impl_->add.end());
    t.mul.assign(impl_->mul.begin(), impl_->mul.end());
    t.zero = impl_->zero;
    t.one = impl_->one;
    t.label = impl_->label;
    t.element_names = impl_->names;
    return t;
  }

  /// Identity, not structural equality: copies of one ring compare equal.
  bool same_as(const FiniteRing& other) const { return impl_ == other.impl_; }

 private:
  struct Impl {
    std::uint32_t order = 0;
    std::vector<std::uint16_t> add, mul, neg;
    std::uint32_t zero = 0, one = 0;
    std::string label;
    std::vector<std::string> names;
  };
  explicit FiniteRing(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

// ---------------------------------------------------------------------------
// Constructors

inline FiniteRing make_zn(std::uint32_t n) {
  if (n < 2) throw RingError("Z_n requires n >= 2 (the zero ring is excluded); got n = " + std::to_string(n));
  if (n > kMaxRingOrder) throw RingError("Z_n order " + std::to_string(n) + " exceeds " + std::to_string(kMaxRingOrder));
  RingTables t;
  t.order = n;
  t.add.resize(std::size_t{n} * n);
  t.mul.resize(std::size_t{n} * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      t.add[std::size_t{a} * n + b] = (a + b) % n;
      t.mul[std::size_t{a} * n + b] = static_cast<std::uint32_t>((std::uint64_t{a} * b) % n);
    }
  t.zero = 0;
  t.one = 1;
  t.label = "Z_" + std::to_string(n);
  return FiniteRing::from_tables(std::move(t));
}

/// Power set of `atoms` with symmetric difference and intersection. Element
/// index is the subset bitmask; names concatenate atom names ("0" = empty).
inline FiniteRing make_boolean(const std::vector<std::string>& atoms) {
  const auto k = atoms.size();
  if (k < 1) throw RingError("Boolean ring requires at least one atom (2^0 is the zero ring)");
  if (k > 12) throw RingError("Boolean ring with " + std::to_string(k) + " atoms exceeds order " + std::to_string(kMaxRingOrder));
  const std::uint32_t n = 1u << k;
  RingTables t;
  t.order = n;
  t.add.resize(std::size_t{n} * n);
  t.mul.resize(std::size_t{n} * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      t.add[std::size_t{a} * n + b] = a ^ b;
      t.mul[std::size_t{a} * n + b] = a & b;
    }
  t.zero = 0;
  t.one = n - 1;
  t.label = "B_" + std::to_string(k);
  t.element_names.reserve(n);
  for (std::uint32_t mask = 0; mask < n; ++mask) {
    std::string name;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) name += atoms[i];
    t.element_names.push_back(name.empty() ? "0" : name);
  }
  return FiniteRing::from_tables(std::move(t));
}

inline FiniteRing make_boolean(std::uint32_t k) {
  if (k < 1) throw RingError("Boolean ring requires k >= 1 (2^0 is the zero ring)");
  if (k > 12) throw RingError("Boolean ring B_" + std::to_string(k) + " exceeds order " + std::to_string(kMaxRingOrder));
  std::vector<std::string> atoms;
  for (std::uint32_t i = 0; i < k; ++i) atoms.emplace_back(1, static_cast<char>('a' + i));
  return make_boolean(atoms);
}

/// Componentwise ring on the Cartesian product; the last factor varies fastest.
inline FiniteRing make_product(std::span<const FiniteRing> factors) {
  if (factors.empty()) throw RingError("product requires at least one factor");
  std::uint64_t order = 1;
  for (const auto& f : factors) {
    order *= f.order();
    if (order > kMaxRingOrder) throw RingError("product order exceeds " + std::to_string(kMaxRingOrder));
  }
  const auto n = static_cast<std::uint32_t>(order);
  const std::size_t k = factors.size();

  auto decode = [&](std::uint32_t index) {
    std::vector<std::uint32_t> coords(k);
    for (std::size_t i = k; i-- > 0;) {
      coords[i] = index % factors[i].order();
      index /= factors[i].order();
    }
    return coords;
  };
  auto encode = [&](const std::vector<std::uint32_t>& coords) {
    std::uint32_t index = 0;
    for (std::size_t i = 0; i < k; ++i) index = index * factors[i].order() + coords[i];
    return index;
  };

  std::vector<std::vector<std::uint32_t>> coords(n);
  for (std::uint32_t a = 0; a < n; ++a) coords[a] = decode(a);

  RingTables t;
  t.order = n;
  t.add.resize(std::size_t{n} * n);
  t.mul.resize(std::size_t{n} * n);
  std::vector<std::uint32_t> s(k), p(k);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < k; ++i) {
        s[i] = factors[i].add_index(coords[a][i], coords[b][i]);
        p[i] = factors[i].mul_index(coords[a][i], coords[b][i]);
      }
      t.add[std::size_t{a} * n + b] = encode(s);
      t.mul[std::size_t{a} * n + b] = encode(p);
    }
  std::vector<std::uint32_t> zeros(k), ones(k);
  for (std::size_t i = 0; i < k; ++i) {
    zeros[i] = factors[i].zero().index();
    ones[i] = factors[i].one().index();
  }
  t.zero = encode(zeros);
  t.one = encode(ones);

  for (std::size_t i = 0; i < k; ++i) {
    const auto& l = factors[i].label();
    const bool wrap = l.find_first_of("x=") != std::string::npos;
    if (i) t.label += "x";
    t.label += wrap ? "(" + l + ")" : l;
  }
  t.element_names.reserve(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::string name = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) name += ",";
      name += factors[i].element_names()[coords[a][i]];
    }
    t.element_names.push_back(name + ")");
  }
  return FiniteRing::from_tables(std::move(t));
}

inline FiniteRing make_product(std::initializer_list<FiniteRing> factors) {
  return make_product(std::span<const FiniteRing>(factors.begin(), factors.size()));
}

inline bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Structure constants: product[i][j] is the Z_p coefficient vector of
/// e_i * e_j. Basis element 0 must act as the identity.
struct AlgebraSpec {
  std::uint32_t p = 0;
  std::vector<std::string> basis_names;
  std::vector<std::vector<std::vector<std::uint32_t>>> product;
  std::string label;
};

/// Ring of order p^dim on coefficient vectors (little-endian base p index).
/// Throws AxiomError naming the violating basis triple.
inline FiniteRing make_algebra(const AlgebraSpec& spec) {
  const std::uint32_t p = spec.p;
  const std::size_t dim = spec.basis_names.size();
  if (!is_prime_number(p)) throw RingError("algebra characteristic " + std::to_string(p) + " is not prime");
  if (dim < 1) throw RingError("algebra requires at least one basis element");
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    order *= p;
    if (order > kMaxRingOrder) throw RingError("algebra order exceeds " + std::to_string(kMaxRingOrder));
  }
  const auto& c = spec.product;
  if (c.size() != dim) throw RingError("structure constants must be dim x dim");
  for (std::size_t i = 0; i < dim; ++i) {
    if (c[i].size() != dim) throw RingError("structure constants must be dim x dim");
    for (std::size_t j = 0; j < dim; ++j) {
      if (c[i][j].size() != dim) throw RingError("structure constant vectors must have length dim");
      for (auto coef : c[i][j])
        if (coef >= p) throw RingError("structure constant out of range for Z_" + std::to_string(p));
    }
  }
  const auto& names = spec.basis_names;
  auto triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    return std::vector<std::uint32_t>{std::uint32_t(i), std::uint32_t(j), std::uint32_t(k)};
  };
  auto fail = [&](const std::string& axiom, std::vector<std::uint32_t> w) {
    std::string msg = "algebra '" + spec.label + "' violates " + axiom + " at basis (";
    for (std::size_t i = 0; i < w.size(); ++i) msg += (i ? ", " : "") + names[w[i]];
    throw AxiomError(axiom, std::move(w), msg + ")");
  };
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<std::uint32_t> unit(dim, 0);
    unit[j] = 1;
    if (c[0][j] != unit || c[j][0] != unit) fail("multiplicative unity (e_1 is the identity)", {0, std::uint32_t(j)});
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (c[i][j] != c[j][i]) fail("multiplicative commutativity (ab=ba)", {std::uint32_t(i), std::uint32_t(j)});

  using Vec = std::vector<std::uint32_t>;
  auto multiply = [&](const Vec& u, const Vec& v) {
    Vec out(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
      if (!u[i]) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (!v[j]) continue;
        const std::uint64_t s = std::uint64_t{u[i]} * v[j] % p;
        for (std::size_t k = 0; k < dim; ++k) out[k] = static_cast<std::uint32_t>((out[k] + s * c[i][j][k]) % p);
      }
    }
    return out;
  };
  auto basis = [&](std::size_t i) {
    Vec e(dim, 0);
    e[i] = 1;
    return e;
  };
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (multiply(multiply(basis(i), basis(j)), basis(k)) != multiply(basis(i), multiply(basis(j), basis(k))))
          fail("multiplicative associativity ((ab)c=a(bc))", triple(i, j, k));

  const auto n = static_cast<std::uint32_t>(order);
  auto decode = [&](std::uint32_t index) {
    Vec v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      v[i] = index % p;
      index /= p;
    }
    return v;
  };
  auto encode = [&](const Vec& v) {
    std::uint32_t index = 0;
    for (std::size_t i = dim; i-- > 0;) index = index * p + v[i];
    return index;
  };
  std::vector<Vec> vecs(n);
  for (std::uint32_t a = 0; a < n; ++a) vecs[a] = decode(a);

  RingTables t;
  t.order = n;
  t.add.resize(std::size_t{n} * n);
  t.mul.resize(std::size_t{n} * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      Vec s(dim);
      for (std::size_t i = 0; i < dim; ++i) s[i] = (vecs[a][i] + vecs[b][i]) % p;
      t.add[std::size_t{a} * n + b] = encode(s);
      t.mul[std::size_t{a} * n + b] = encode(multiply(vecs[a], vecs[b]));
    }
  t.zero = 0;
  t.one = encode(basis(0));
  t.label = spec.label.empty() ? "F" + std::to_string(p) + "-algebra" : spec.label;
  t.element_names.reserve(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::string name;
    for (std::size_t i = 0; i < dim; ++i) {
      const auto coef = vecs[a][i];
      if (!coef) continue;
      if (!name.empty()) name += "+";
      if (names[i] == "1") name += std::to_string(coef);
      else if (coef == 1) name += names[i];
      else name += std::to_string(coef) + names[i];
    }
    t.element_names.push_back(name.empty() ? "0" : name);
  }
  return FiniteRing::from_tables(std::move(t));
}

/// Raw ingestion from order x order matrices.
inline FiniteRing make_table_ring(std::uint32_t order, const std::vector<std::vector<std::uint32_t>>& add,
                                  const std::vector<std::vector<std::uint32_t>>& mul, std::uint32_t zero, std::uint32_t one,
                                  std::string label = "table", std::vector<std::string> element_names = {}) {
  auto flatten = [&](const std::vector<std::vector<std::uint32_t>>& m, const char* which) {
    if (m.size() != order) throw RingError(std::string(which) + " table must have " + std::to_string(order) + " rows");
    std::vector<std::uint32_t> flat;
    flat.reserve(std::size_t{order} * order);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (m[r].size() != order)
        throw RingError(std::string(which) + " table row " + std::to_string(r) + " must have " + std::to_string(order) + " entries");
      flat.insert(flat.end(), m[r].begin(), m[r].end());
    }
    return flat;
  };
  RingTables t;
  t.order = order;
  t.add = flatten(add, "add");
  t.mul = flatten(mul, "mul");
  t.zero = zero;
  t.one = one;
  t.label = std::move(label);
  t.element_names = std::move(element_names);
  return FiniteRing::from_tables(std::move(t));
}

// ---------------------------------------------------------------------------
// Element-level helpers

inline bool is_idempotent(const FiniteRing& r, ElementId a) { return r.mul(a, a) == a; }

/// Additive order of a (smallest k >= 1 with k*a = 0).
inline std::uint32_t additive_order(const FiniteRing& r, ElementId a) {
  std::uint32_t acc = r.check(a).index();
  std::uint32_t k = 1;
  while (acc != r.zero().index()) {
    acc = r.add_index(acc, a.index());
    ++k;
  }
  return k;
}

}  // namespace pprir
