// pprir: command-line front end for the finite-ring ideal engine and the
// claim audit.
//
// Commands:
//   describe <ringfile>                       order and classification flags
//   ideals <ringfile> [--json|--dot]          full ideal lattice
//   spectrum <ringfile>                       prime ideals
//   classify-ideal <ringfile> --elements ...  every predicate for (elements)
//   quotient <ringfile> --elements ...        R/(elements)
//   audit [--corpus default|<dir>] [--claim <id>|all] [--json] [--expect-verified <id>]
//   zmodel example2 | zmodel classify <Z^k:(...)>
//
// Exit codes: 0 success, 1 --expect-verified claim refuted, 2 input error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pprir/pprir.hpp"

namespace {

using nlohmann::ordered_json;
using namespace pprir;

constexpr int kExitRefuted = 1;
constexpr int kExitInputError = 2;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

ordered_json names_json(const FiniteRing& r, const Ideal& ideal) {
  ordered_json arr = ordered_json::array();
  ideal.members().for_each([&](std::size_t i) { arr.push_back(r.element_names()[i]); });
  return arr;
}

int cmd_describe(const std::string& path, bool json) {
  const auto r = load_ring_file(path);
  const auto lattice = all_ideals(r);
  const auto c = classify_ring(r, lattice);
  const auto spectrum = prime_spectrum(r, lattice);
  if (json) {
    ordered_json o;
    o["ring"] = r.label();
    o["order"] = r.order();
    o["zero"] = r.name(r.zero());
    o["one"] = r.name(r.one());
    o["domain"] = c.is_domain;
    o["field"] = c.is_field;
    o["boolean"] = c.is_boolean;
    o["pprir"] = c.is_pprir;
    o["pprid"] = c.is_pprid;
    o["pprir_witness"] = c.pprir_witness ? ordered_json(c.pprir_witness->to_string()) : ordered_json(nullptr);
    o["ideals"] = lattice.size();
    o["primes"] = spectrum.size();
    std::cout << o.dump(2) << "\n";
    return 0;
  }
  std::cout << "ring:    " << r.label() << "\n"
            << "order:   " << r.order() << "\n"
            << "zero:    " << r.name(r.zero()) << "\n"
            << "one:     " << r.name(r.one()) << "\n"
            << "domain:  " << yes_no(c.is_domain) << "\n"
            << "field:   " << yes_no(c.is_field) << "\n"
            << "boolean: " << yes_no(c.is_boolean) << "\n"
            << "PPRIR:   " << yes_no(c.is_pprir);
  if (c.pprir_witness) std::cout << " (non-principal prime " << c.pprir_witness->to_string() << ")";
  std::cout << "\n"
            << "PPRID:   " << yes_no(c.is_pprid) << "\n"
            << "ideals:  " << lattice.size() << "\n"
            << "primes:  " << spectrum.size() << "\n";
  return 0;
}

int cmd_ideals(const std::string& path, bool json, bool dot) {
  const auto r = load_ring_file(path);
  const auto lattice = all_ideals(r);
  if (dot) {
    std::cout << lattice_to_dot(lattice);
    return 0;
  }
  if (json) {
    ordered_json o;
    o["ring"] = r.label();
    o["order"] = r.order();
    ordered_json ideals = ordered_json::array();
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      const auto& ideal = lattice[i];
      const auto pr = is_principal(r, ideal);
      ordered_json e;
      e["index"] = i;
      e["members"] = names_json(r, ideal);
      e["size"] = ideal.size();
      e["generator"] = pr.generator ? ordered_json(r.name(*pr.generator)) : ordered_json(nullptr);
      e["prime"] = is_prime(r, ideal);
      e["maximal"] = is_maximal(r, ideal, lattice);
      ideals.push_back(std::move(e));
    }
    o["ideals"] = std::move(ideals);
    ordered_json edges = ordered_json::array();
    for (auto [a, b] : lattice.covers()) edges.push_back({a, b});
    o["covers"] = std::move(edges);
    std::cout << o.dump(2) << "\n";
    return 0;
  }
  std::cout << r.label() << ": " << lattice.size() << " ideals\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& ideal = lattice[i];
    const auto pr = is_principal(r, ideal);
    std::cout << "  I" << i << " " << ideal.to_string();
    if (pr.generator) std::cout << " = (" << r.name(*pr.generator) << ")";
    else std::cout << " non-principal";
    if (is_prime(r, ideal)) std::cout << " prime";
    if (is_maximal(r, ideal, lattice)) std::cout << " maximal";
    std::cout << "\n";
  }
  std::cout << "covers:";
  for (auto [a, b] : lattice.covers()) std::cout << " I" << a << "<I" << b;
  std::cout << "\n";
  return 0;
}

int cmd_spectrum(const std::string& path) {
  const auto r = load_ring_file(path);
  const auto spectrum = prime_spectrum(r);
  std::cout << r.label() << ": " << spectrum.size() << " prime ideals\n";
  for (const auto& p : spectrum) {
    const auto pr = is_principal(r, p);
    std::cout << "  " << p.to_string();
    if (pr.generator) std::cout << " = (" << r.name(*pr.generator) << ")";
    else std::cout << " non-principal";
    std::cout << "\n";
  }
  return 0;
}

int cmd_classify_ideal(const std::string& path, const std::string& elements, bool json) {
  const auto r = load_ring_file(path);
  const auto gens = parse_element_list(r, elements);
  const auto ideal = ideal_generated(r, gens);
  const auto lattice = all_ideals(r);
  const auto pr = is_principal(r, ideal);
  const auto rad = radical(r, ideal);
  const bool prime = is_prime(r, ideal);
  const bool maximal = is_maximal(r, ideal, lattice);
  const bool semiprime = is_semiprime(r, ideal);
  const bool primary = is_primary(r, ideal);
  std::vector<Ideal> minimal;
  if (ideal.is_proper()) minimal = minimal_primes_over(r, ideal, lattice);
  if (json) {
    ordered_json o;
    o["ring"] = r.label();
    o["ideal"] = names_json(r, ideal);
    o["proper"] = ideal.is_proper();
    o["principal"] = pr.principal;
    o["generator"] = pr.generator ? ordered_json(r.name(*pr.generator)) : ordered_json(nullptr);
    o["prime"] = prime;
    o["maximal"] = maximal;
    o["semiprime"] = semiprime;
    o["primary"] = primary;
    o["ppri"] = prime && pr.principal;
    o["radical"] = names_json(r, rad);
    ordered_json mins = ordered_json::array();
    for (const auto& m : minimal) mins.push_back(names_json(r, m));
    o["minimal_primes"] = std::move(mins);
    std::cout << o.dump(2) << "\n";
    return 0;
  }
  std::cout << "ideal:     " << ideal.to_string() << " (" << ideal.size() << " of " << r.order() << ")\n"
            << "principal: " << yes_no(pr.principal);
  if (pr.generator) std::cout << " (generator " << r.name(*pr.generator) << ")";
  std::cout << "\n"
            << "prime:     " << yes_no(prime) << "\n"
            << "maximal:   " << yes_no(maximal) << "\n"
            << "semiprime: " << yes_no(semiprime) << "\n"
            << "primary:   " << yes_no(primary) << "\n"
            << "PPRI:      " << yes_no(prime && pr.principal) << "\n"
            << "radical:   " << rad.to_string() << "\n";
  if (ideal.is_proper()) {
    std::cout << "minimal primes over:";
    for (const auto& m : minimal) std::cout << " " << m.to_string();
    std::cout << "\n";
  }
  return 0;
}

int cmd_quotient(const std::string& path, const std::string& elements, bool json) {
  const auto r = load_ring_file(path);
  const auto ideal = ideal_generated(r, parse_element_list(r, elements));
  const auto q = quotient_ring(r, ideal);
  const auto c = classify_ring(q.quotient);
  if (json) {
    ordered_json o;
    o["ideal"] = names_json(r, ideal);
    o["order"] = q.quotient.order();
    ordered_json cosets = ordered_json::array();
    for (const auto& coset : q.cosets) {
      ordered_json names = ordered_json::array();
      for (auto e : coset) names.push_back(r.name(e));
      cosets.push_back(std::move(names));
    }
    o["cosets"] = std::move(cosets);
    o["domain"] = c.is_domain;
    o["field"] = c.is_field;
    o["pprir"] = c.is_pprir;
    o["quotient"] = ring_to_json(q.quotient);
    std::cout << o.dump(2) << "\n";
    return 0;
  }
  std::cout << "quotient: " << q.quotient.label() << "\n"
            << "order:    " << q.quotient.order() << "\n"
            << "cosets:\n";
  for (std::size_t i = 0; i < q.cosets.size(); ++i) {
    std::cout << "  " << q.quotient.element_names()[i] << " = {";
    for (std::size_t j = 0; j < q.cosets[i].size(); ++j) std::cout << (j ? "," : "") << r.name(q.cosets[i][j]);
    std::cout << "}\n";
  }
  std::cout << "domain:   " << yes_no(c.is_domain) << "\n"
            << "field:    " << yes_no(c.is_field) << "\n"
            << "PPRIR:    " << yes_no(c.is_pprir) << "\n";
  return 0;
}

int cmd_audit(const std::string& corpus_arg, const std::string& claim_arg, bool json, const std::string& expect,
              unsigned jobs, std::uint32_t endo_cap) {
  const Corpus corpus = corpus_arg == "default" ? default_corpus() : load_corpus_dir(corpus_arg);
  std::vector<ClaimId> claims;
  if (claim_arg == "all") claims.assign(std::begin(kAllClaims), std::end(kAllClaims));
  else claims.push_back(parse_claim_id(claim_arg));
  std::optional<ClaimId> expected;
  if (!expect.empty()) expected = parse_claim_id(expect);

  AuditOptions opt;
  opt.jobs = jobs;
  if (endo_cap) opt.endomorphism_cap = endo_cap;
  const auto reports = run_audit(claims, corpus, opt);
  std::cout << render_report(reports, json ? "json" : "text");

  if (expected) {
    for (const auto& r : reports)
      if (r.claim == *expected && r.status == ClaimStatus::refuted) {
        std::cerr << "expected " << to_string(*expected) << " verified, but it is refuted on " << r.ring << "\n";
        return kExitRefuted;
      }
  }
  return 0;
}

int cmd_zmodel_example2() {
  const auto res = zmodel::audit_ex2();
  std::cout << "ideal:     " << res.ideal.literal() << " = " << res.ideal.pretty() << "\n"
            << "prime:     " << yes_no(res.prime) << "\n"
            << "principal: yes (generator " << zmodel::ZProductIdeal(res.generator).tuple() << ")\n"
            << "maximal:   " << yes_no(res.maximal) << "\n"
            << "chain:     " << res.outcome.witness.value_or("") << "\n"
            << "EX2 " << to_string(res.outcome.status) << "\n";
  return res.outcome.status == ClaimStatus::verified ? 0 : kExitRefuted;
}

int cmd_zmodel_classify(const std::string& literal) {
  const auto ideal = zmodel::parse_literal(literal);
  const auto mid = zmodel::z_strict_intermediate(ideal);
  std::cout << "ideal:     " << ideal.literal() << " = " << ideal.pretty() << "\n"
            << "prime:     " << yes_no(zmodel::z_is_prime(ideal)) << "\n"
            << "maximal:   " << yes_no(zmodel::z_is_maximal(ideal)) << "\n"
            << "generator: " << zmodel::ZProductIdeal(zmodel::z_principal_witness(ideal)).tuple() << "\n";
  if (mid) std::cout << "strictly between it and Z^" << ideal.arity() << ": " << mid->tuple() << " = " << mid->pretty() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite commutative ring ideal engine and claim audit"};
  app.require_subcommand(1);

  std::string ring_file, elements, corpus = "default", claim = "all", expect, zliteral;
  bool json = false, dot = false;
  unsigned jobs = 0;
  std::uint32_t endo_cap = 0;

  auto* describe = app.add_subcommand("describe", "Order and classification flags of a ring");
  describe->add_option("ringfile", ring_file, "Ring description file")->required();
  describe->add_flag("--json", json, "Emit JSON");

  auto* ideals = app.add_subcommand("ideals", "Full ideal lattice");
  ideals->add_option("ringfile", ring_file, "Ring description file")->required();
  ideals->add_flag("--json", json, "Emit JSON");
  ideals->add_flag("--dot", dot, "Emit the Hasse diagram as Graphviz DOT");

  auto* spectrum = app.add_subcommand("spectrum", "Prime ideals of a ring");
  spectrum->add_option("ringfile", ring_file, "Ring description file")->required();

  auto* classify = app.add_subcommand("classify-ideal", "All predicates for the ideal generated by the given elements");
  classify->add_option("ringfile", ring_file, "Ring description file")->required();
  classify->add_option("--elements", elements, "Comma-separated element names")->required();
  classify->add_flag("--json", json, "Emit JSON");

  auto* quotient = app.add_subcommand("quotient", "Quotient by the ideal generated by the given elements");
  quotient->add_option("ringfile", ring_file, "Ring description file")->required();
  quotient->add_option("--elements", elements, "Comma-separated element names")->required();
  quotient->add_flag("--json", json, "Emit JSON");

  auto* audit = app.add_subcommand("audit", "Check every claim over a corpus of rings");
  audit->add_option("--corpus", corpus, "'default' or a directory of ring files")->capture_default_str();
  audit->add_option("--claim", claim, "Claim id or 'all'")->capture_default_str();
  audit->add_flag("--json", json, "Emit JSON reports");
  audit->add_option("--expect-verified", expect, "Exit 1 if this claim has any refuted report");
  audit->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)");
  audit->add_option("--endo-cap", endo_cap, "Endomorphism search cap (default 16 or PPRIR_ENDO_CAP)");

  auto* zm = app.add_subcommand("zmodel", "Symbolic ideals of Z^k");
  zm->require_subcommand(1);
  auto* example2 = zm->add_subcommand("example2", "Prime, principal, non-maximal Z x {0} in Z^2");
  auto* zclassify = zm->add_subcommand("classify", "Classify an ideal literal such as Z^2:(1,0)");
  zclassify->add_option("literal", zliteral, "Ideal literal")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*describe) return cmd_describe(ring_file, json);
    if (*ideals) return cmd_ideals(ring_file, json, dot);
    if (*spectrum) return cmd_spectrum(ring_file);
    if (*classify) return cmd_classify_ideal(ring_file, elements, json);
    if (*quotient) return cmd_quotient(ring_file, elements, json);
    if (*audit) return cmd_audit(corpus, claim, json, expect, jobs, endo_cap);
    if (*example2) return cmd_zmodel_example2();
    if (*zclassify) return cmd_zmodel_classify(zliteral);
  } catch (const AxiomError& e) {
    std::cerr << "error: axiom violated: " << e.axiom() << "\n  " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
