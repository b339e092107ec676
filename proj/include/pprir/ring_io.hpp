#pragma once

// Ring description files (JSON, one ring per document) and element-name
// lists. See docs/ring-format.md for the schema.

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pprir/element_set.hpp"
#include "pprir/finite_ring.hpp"

namespace pprir {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Splits on commas that are not nested inside (), [] or {}.
inline std::vector<std::string> split_top_level(std::string_view text, char sep = ',') {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(' || ch == '[' || ch == '{') ++depth;
    if (ch == ')' || ch == ']' || ch == '}') --depth;
    if (ch == sep && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  parts.push_back(current);
  return parts;
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

/// Parses "a,b,c" or "{a,b,c}" into element ids by display name. An empty
/// list ("" or "{}") yields no elements.
inline std::vector<ElementId> parse_element_list(const FiniteRing& r, std::string_view text) {
  std::string body = trim(text);
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}') body = trim(std::string_view(body).substr(1, body.size() - 2));
  std::vector<ElementId> out;
  if (body.empty()) return out;
  for (const auto& raw : split_top_level(body)) {
    const auto name = trim(raw);
    auto id = r.find(name);
    if (!id) throw FormatError("unknown element '" + name + "' in ring '" + r.label() + "'");
    out.push_back(*id);
  }
  return out;
}

/// "{n0,n1,...}" with members in ascending index order.
inline std::string format_element_set(const FiniteRing& r, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ",";
    first = false;
    out += r.element_names()[i];
  });
  return out + "}";
}

namespace detail {

inline void require_fields(const nlohmann::json& doc, std::initializer_list<std::string_view> required,
                           std::initializer_list<std::string_view> optional) {
  if (!doc.is_object()) throw FormatError("ring document must be a JSON object");
  for (auto key : required)
    if (!doc.contains(std::string(key))) throw FormatError("missing field '" + std::string(key) + "'");
  for (const auto& [key, _] : doc.items()) {
    if (key == "kind") continue;
    bool known = false;
    for (auto k : required) known = known || key == k;
    for (auto k : optional) known = known || key == k;
    if (!known) throw FormatError("unknown field '" + key + "'");
  }
}

inline std::uint32_t as_index(const nlohmann::json& v, std::string_view what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > std::int64_t{kMaxRingOrder} * kMaxRingOrder)
    throw FormatError(std::string(what) + " must be a nonnegative integer");
  return v.get<std::uint32_t>();
}

inline std::vector<std::vector<std::uint32_t>> as_matrix(const nlohmann::json& v, std::uint32_t order, std::string_view what) {
  if (!v.is_array() || v.size() != order)
    throw FormatError(std::string(what) + " must be an array of " + std::to_string(order) + " rows");
  std::vector<std::vector<std::uint32_t>> m;
  for (std::size_t r = 0; r < v.size(); ++r) {
    const auto& row = v[r];
    if (!row.is_array() || row.size() != order)
      throw FormatError(std::string(what) + " row " + std::to_string(r) + " must have " + std::to_string(order) + " entries");
    std::vector<std::uint32_t> out;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const auto x = as_index(row[c], what);
      if (x >= order)
        throw FormatError(std::string(what) + "[" + std::to_string(r) + "][" + std::to_string(c) + "] = " + std::to_string(x) +
                          " out of range for order " + std::to_string(order));
      out.push_back(x);
    }
    m.push_back(std::move(out));
  }
  return m;
}

/// Parses a Z_p-combination such as "1+x", "2x+y", "2*y" or "0".
inline std::vector<std::uint32_t> parse_combination(std::string_view text, const std::vector<std::string>& basis, std::uint32_t p) {
  std::vector<std::uint32_t> v(basis.size(), 0);
  const std::string s = trim(text);
  if (s.empty()) throw FormatError("empty combination");
  for (const auto& raw : split_top_level(s, '+')) {
    const auto term = trim(raw);
    if (term.empty()) throw FormatError("empty term in combination '" + s + "'");
    std::size_t pos = 0;
    while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) ++pos;
    std::uint64_t coef = 1;
    if (pos > 0) coef = std::stoull(term.substr(0, pos));
    std::string rest = trim(std::string_view(term).substr(pos));
    if (!rest.empty() && rest.front() == '*') rest = trim(std::string_view(rest).substr(1));
    std::size_t index = 0;
    if (rest.empty()) {
      if (pos == 0) throw FormatError("bad term '" + term + "'");
      index = 0;  // bare integer: multiple of the identity
    } else {
      auto it = std::find(basis.begin(), basis.end(), rest);
      if (it == basis.end()) throw FormatError("unknown basis element '" + rest + "' in '" + s + "'");
      index = static_cast<std::size_t>(it - basis.begin());
    }
    v[index] = static_cast<std::uint32_t>((v[index] + coef) % p);
  }
  return v;
}

inline FiniteRing parse_algebra(const nlohmann::json& doc, const std::string& label) {
  AlgebraSpec spec;
  spec.p = as_index(doc.at("p"), "p");
  if (!doc.at("basis_names").is_array()) throw FormatError("basis_names must be an array of strings");
  for (const auto& b : doc.at("basis_names")) {
    if (!b.is_string()) throw FormatError("basis_names must be an array of strings");
    spec.basis_names.push_back(b.get<std::string>());
  }
  const auto dim = spec.basis_names.size();
  if (dim < 1) throw FormatError("basis_names must not be empty");
  if (std::set<std::string>(spec.basis_names.begin(), spec.basis_names.end()).size() != dim)
    throw FormatError("basis_names must be distinct");
  spec.label = label;

  spec.product.assign(dim, std::vector<std::vector<std::uint32_t>>(dim));
  std::vector<std::vector<bool>> given(dim, std::vector<bool>(dim, false));
  auto unit = [&](std::size_t i) {
    std::vector<std::uint32_t> e(dim, 0);
    e[i] = 1;
    return e;
  };
  for (std::size_t j = 0; j < dim; ++j) {
    spec.product[0][j] = unit(j);
    spec.product[j][0] = unit(j);
  }
  const auto& mul = doc.at("mul");
  if (!mul.is_object()) throw FormatError("mul must be an object mapping \"xi*xj\" to combinations");
  for (const auto& [key, value] : mul.items()) {
    const auto star = key.find('*');
    if (star == std::string::npos) throw FormatError("mul key '" + key + "' must have the form xi*xj");
    const auto lhs = trim(std::string_view(key).substr(0, star));
    const auto rhs = trim(std::string_view(key).substr(star + 1));
    auto find = [&](const std::string& n) {
      auto it = std::find(spec.basis_names.begin(), spec.basis_names.end(), n);
      if (it == spec.basis_names.end()) throw FormatError("unknown basis element '" + n + "' in mul key '" + key + "'");
      return static_cast<std::size_t>(it - spec.basis_names.begin());
    };
    const auto i = find(lhs), j = find(rhs);
    if (!value.is_string()) throw FormatError("mul['" + key + "'] must be a string");
    if (given[i][j]) throw FormatError("duplicate mul key '" + key + "'");
    given[i][j] = true;
    spec.product[i][j] = parse_combination(value.get<std::string>(), spec.basis_names, spec.p);
    if (!given[j][i] && i != j && i != 0 && j != 0) spec.product[j][i] = spec.product[i][j];
  }
  for (std::size_t i = 1; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j)
      if (!given[i][j] && !given[j][i])
        throw FormatError("missing product " + spec.basis_names[i] + "*" + spec.basis_names[j]);
  return make_algebra(spec);
}

}  // namespace detail

/// Builds a ring from one description document. Throws FormatError for
/// schema problems and AxiomError/RingError for invalid rings.
inline FiniteRing parse_ring(const nlohmann::json& doc, const std::string& default_label = "") {
  if (!doc.is_object() || !doc.contains("kind") || !doc.at("kind").is_string())
    throw FormatError("ring document needs a string field 'kind'");
  const auto kind = doc.at("kind").get<std::string>();
  auto label_or = [&](const std::string& fallback) {
    if (doc.contains("label")) {
      if (!doc.at("label").is_string()) throw FormatError("label must be a string");
      return doc.at("label").get<std::string>();
    }
    return fallback;
  };

  if (kind == "zn") {
    detail::require_fields(doc, {"n"}, {"label"});
    auto n = detail::as_index(doc.at("n"), "n");
    auto r = make_zn(n);
    if (!doc.contains("label")) return r;
    auto t = r.tables();
    t.label = label_or(t.label);
    return FiniteRing::from_tables(std::move(t));
  }
  if (kind == "boolean") {
    detail::require_fields(doc, {"atoms"}, {"label"});
    const auto& atoms = doc.at("atoms");
    FiniteRing r = [&] {
      if (atoms.is_number_integer()) return make_boolean(detail::as_index(atoms, "atoms"));
      if (!atoms.is_array()) throw FormatError("atoms must be a count or an array of names");
      std::vector<std::string> names;
      for (const auto& a : atoms) {
        if (!a.is_string() || a.get<std::string>().empty()) throw FormatError("atom names must be nonempty strings");
        names.push_back(a.get<std::string>());
      }
      return make_boolean(names);
    }();
    if (!doc.contains("label")) return r;
    auto t = r.tables();
    t.label = label_or(t.label);
    return FiniteRing::from_tables(std::move(t));
  }
  if (kind == "product") {
    detail::require_fields(doc, {"factors"}, {"label"});
    const auto& fs = doc.at("factors");
    if (!fs.is_array() || fs.empty()) throw FormatError("factors must be a nonempty array of ring documents");
    std::vector<FiniteRing> factors;
    for (const auto& f : fs) factors.push_back(parse_ring(f));
    auto r = make_product(factors);
    if (!doc.contains("label")) return r;
    auto t = r.tables();
    t.label = label_or(t.label);
    return FiniteRing::from_tables(std::move(t));
  }
  if (kind == "algebra") {
    detail::require_fields(doc, {"p", "basis_names", "mul"}, {"label"});
    return detail::parse_algebra(doc, label_or(default_label));
  }
  if (kind == "table") {
    detail::require_fields(doc, {"order", "zero", "one", "add", "mul"}, {"label", "element_names"});
    const auto order = detail::as_index(doc.at("order"), "order");
    if (order < 2 || order > kMaxRingOrder)
      throw FormatError("order must be in [2, " + std::to_string(kMaxRingOrder) + "]");
    const auto zero = detail::as_index(doc.at("zero"), "zero");
    const auto one = detail::as_index(doc.at("one"), "one");
    if (zero >= order || one >= order) throw FormatError("zero and one must be element indices below order");
    std::vector<std::string> names;
    if (doc.contains("element_names")) {
      const auto& ns = doc.at("element_names");
      if (!ns.is_array() || ns.size() != order) throw FormatError("element_names must list one name per element");
      for (const auto& n : ns) {
        if (!n.is_string()) throw FormatError("element_names must be strings");
        names.push_back(n.get<std::string>());
      }
      if (std::set<std::string>(names.begin(), names.end()).size() != order)
        throw FormatError("element_names must be distinct");
    }
    return make_table_ring(order, detail::as_matrix(doc.at("add"), order, "add"), detail::as_matrix(doc.at("mul"), order, "mul"),
                           zero, one, label_or(default_label.empty() ? "table" : default_label), std::move(names));
  }
  throw FormatError("unknown ring kind '" + kind + "'");
}

inline FiniteRing parse_ring_text(std::string_view text, const std::string& default_label = "") {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  return parse_ring(doc, default_label);
}

/// Loads a ring file; the label defaults to the file stem.
inline FiniteRing load_ring_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open ring file '" + path.string() + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_ring_text(text, path.stem().string());
}

/// Serializes any ring as a kind=table document.
inline nlohmann::json ring_to_json(const FiniteRing& r) {
  const auto t = r.tables();
  auto matrix = [&](const std::vector<std::uint32_t>& flat) {
    nlohmann::json m = nlohmann::json::array();
    for (std::uint32_t a = 0; a < t.order; ++a)
      m.push_back(std::vector<std::uint32_t>(flat.begin() + std::ptrdiff_t(a) * t.order, flat.begin() + std::ptrdiff_t(a + 1) * t.order));
    return m;
  };
  return nlohmann::json{{"kind", "table"},           {"label", t.label}, {"order", t.order},    {"zero", t.zero},
                        {"one", t.one},              {"add", matrix(t.add)}, {"mul", matrix(t.mul)},
                        {"element_names", t.element_names}};
}

}  // namespace pprir
