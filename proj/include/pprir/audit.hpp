#pragma once

// Claim catalog, corpus, per-ring claim checkers and report rendering.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <filesystem>
#include <mutex>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "pprir/claim.hpp"
#include "pprir/finite_ring.hpp"
#include "pprir/homomorphism.hpp"
#include "pprir/ideal.hpp"
#include "pprir/quotient.hpp"
#include "pprir/ring_io.hpp"
#include "pprir/zmodel.hpp"

namespace pprir {

enum class ClaimId { THM1, PROP1, PROP2, PROP3, PROP4, PROPRAD, THM2, THM3, THM5, THM6, EX1FIELD, EX2 };

inline constexpr ClaimId kAllClaims[] = {ClaimId::THM1,  ClaimId::PROP1, ClaimId::PROP2, ClaimId::PROP3,
                                         ClaimId::PROP4, ClaimId::PROPRAD, ClaimId::THM2, ClaimId::THM3,
                                         ClaimId::THM5,  ClaimId::THM6,  ClaimId::EX1FIELD, ClaimId::EX2};

inline std::string_view to_string(ClaimId c) {
  switch (c) {
    case ClaimId::THM1: return "THM1";
    case ClaimId::PROP1: return "PROP1";
    case ClaimId::PROP2: return "PROP2";
    case ClaimId::PROP3: return "PROP3";
    case ClaimId::PROP4: return "PROP4";
    case ClaimId::PROPRAD: return "PROPRAD";
    case ClaimId::THM2: return "THM2";
    case ClaimId::THM3: return "THM3";
    case ClaimId::THM5: return "THM5";
    case ClaimId::THM6: return "THM6";
    case ClaimId::EX1FIELD: return "EX1FIELD";
    case ClaimId::EX2: return "EX2";
  }
  return "?";
}

inline ClaimId parse_claim_id(std::string_view s) {
  for (auto c : kAllClaims)
    if (to_string(c) == s) return c;
  throw std::invalid_argument("unknown claim id '" + std::string(s) + "'");
}

struct ClaimReport {
  ClaimId claim = ClaimId::THM1;
  std::string ring;  // ring label, or "zmodel"
  ClaimStatus status = ClaimStatus::verified;
  std::optional<std::string> witness;
  std::string note;
  std::chrono::microseconds elapsed{0};

  friend bool operator==(const ClaimReport&, const ClaimReport&) = default;
};

inline constexpr std::string_view kZModelLabel = "zmodel";

// ---------------------------------------------------------------------------
// Corpus

class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<FiniteRing> rings) {
    for (auto& r : rings) add(std::move(r));
  }

  void add(FiniteRing r) {
    for (const auto& existing : rings_)
      if (existing.label() == r.label()) throw std::invalid_argument("duplicate corpus label '" + r.label() + "'");
    rings_.push_back(std::move(r));
  }

  const std::vector<FiniteRing>& rings() const& { return rings_; }
  std::vector<FiniteRing> rings() && { return std::move(rings_); }
  std::size_t size() const { return rings_.size(); }

  const FiniteRing* find(std::string_view label) const {
    for (const auto& r : rings_)
      if (r.label() == label) return &r;
    return nullptr;
  }

 private:
  std::vector<FiniteRing> rings_;
};

namespace corpus_rings {

using Vec = std::vector<std::uint32_t>;

/// F_2[x,y]/(x,y)^2: the smallest corpus ring with a non-principal prime.
inline FiniteRing ring_a() {
  const Vec zero{0, 0, 0};
  return make_algebra({2,
                       {"1", "x", "y"},
                       {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 0}, zero, zero}, {{0, 0, 1}, zero, zero}},
                       "A=F2[x,y]/(x,y)^2"});
}

inline FiniteRing f4() { return make_algebra({2, {"1", "x"}, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}}, "F4=F2[x]/(x^2+x+1)"}); }

/// F_p[x]/(x^2).
inline FiniteRing dual_numbers(std::uint32_t p) {
  return make_algebra({p, {"1", "x"}, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}}, "F" + std::to_string(p) + "[x]/(x^2)"});
}

inline FiniteRing f2_x_cubed() {
  const Vec zero{0, 0, 0};
  return make_algebra({2,
                       {"1", "x", "x^2"},
                       {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 0}, {0, 0, 1}, zero}, {{0, 0, 1}, zero, zero}},
                       "F2[x]/(x^3)"});
}

}  // namespace corpus_rings

inline constexpr std::string_view kRingALabel = "A=F2[x,y]/(x,y)^2";

/// Z_n (2..64), B_1..B_4, four products, five structure-constant algebras.
inline Corpus default_corpus() {
  Corpus c;
  for (std::uint32_t n = 2; n <= 64; ++n) c.add(make_zn(n));
  for (std::uint32_t k = 1; k <= 4; ++k) c.add(make_boolean(k));
  c.add(make_product({make_zn(2), make_zn(3)}));
  c.add(make_product({make_zn(2), make_zn(4)}));
  c.add(make_product({make_zn(4), make_zn(9)}));
  c.add(make_product({make_zn(2), make_zn(2), make_zn(2)}));
  c.add(corpus_rings::ring_a());
  c.add(corpus_rings::f4());
  c.add(corpus_rings::dual_numbers(2));
  c.add(corpus_rings::dual_numbers(3));
  c.add(corpus_rings::f2_x_cubed());
  return c;
}

/// Every *.json ring file in `dir`, in filename order.
inline Corpus load_corpus_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw FormatError("corpus directory '" + dir.string() + "' does not exist");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  Corpus c;
  for (const auto& f : files) {
    try {
      c.add(load_ring_file(f));
    } catch (const std::exception& e) {
      throw FormatError(f.filename().string() + ": " + e.what());
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Per-ring analysis shared by the claim checkers

struct RingProfile {
  FiniteRing ring;
  IdealLattice lattice;
  std::vector<std::size_t> primes;    // lattice indices
  std::vector<std::size_t> maximals;  // lattice indices
  bool pprir = false;
  std::optional<std::size_t> pprir_witness;
  bool boolean = false;
  bool field = false;
};

inline RingProfile profile_ring(const FiniteRing& r) {
  RingProfile p{r, all_ideals(r), {}, {}, false, std::nullopt, is_boolean_ring(r), is_field(r)};
  for (std::size_t i = 0; i < p.lattice.size(); ++i) {
    const auto& ideal = p.lattice[i];
    if (is_prime(r, ideal)) p.primes.push_back(i);
    if (is_maximal(r, ideal, p.lattice)) p.maximals.push_back(i);
  }
  p.pprir = true;
  for (auto i : p.primes)
    if (!is_principal(r, p.lattice[i]).principal) {
      p.pprir = false;
      p.pprir_witness = i;
      break;
    }
  return p;
}

struct AuditOptions {
  std::uint32_t endomorphism_cap = endomorphism_cap_from_env();
  unsigned jobs = 0;  // 0 = hardware concurrency
  std::uint64_t subset_seed = 0x5eed5eedULL;
  std::size_t sampled_subsets = 100;
};

namespace checks {

inline std::string vacuous(std::string_view what) { return "hypothesis not met (" + std::string(what) + "); holds vacuously"; }

inline ClaimOutcome prop1(const RingProfile& p) {
  if (!p.pprir) return ClaimOutcome::verified(vacuous("ring is not PPRIR"));
  for (auto i : p.maximals)
    if (!is_ppri(p.ring, p.lattice[i])) return ClaimOutcome::refuted(p.lattice[i].to_string(), "maximal ideal is not PPRI");
  return ClaimOutcome::verified(std::to_string(p.maximals.size()) + " maximal ideals are PPRI");
}

inline ClaimOutcome prop2(const RingProfile& p) {
  if (!p.boolean) return ClaimOutcome::verified(vacuous("ring is not Boolean"));
  if (!p.pprir) return ClaimOutcome::verified(vacuous("ring is not PPRIR"));
  for (std::size_t i = 0; i < p.lattice.size(); ++i) {
    const bool ppri = is_ppri(p.ring, p.lattice[i]);
    const bool maximal = std::find(p.maximals.begin(), p.maximals.end(), i) != p.maximals.end();
    if (ppri != maximal)
      return ClaimOutcome::refuted(p.lattice[i].to_string(), ppri ? "PPRI but not maximal" : "maximal but not PPRI");
  }
  return ClaimOutcome::verified("PPRI set equals maximal set (" + std::to_string(p.maximals.size()) + " ideals)");
}

inline ClaimOutcome prop3(const RingProfile& p) {
  std::size_t count = 0;
  for (auto i : p.primes) {
    const auto& ideal = p.lattice[i];
    if (!is_principal(p.ring, ideal).principal) continue;
    ++count;
    if (!is_semiprime(p.ring, ideal)) return ClaimOutcome::refuted(ideal.to_string(), "PPRI that is not semiprime");
  }
  return ClaimOutcome::verified(std::to_string(count) + " PPRI checked");
}

inline ClaimOutcome prop4(const RingProfile& p) {
  if (!p.pprir) return ClaimOutcome::verified(vacuous("ring is not PPRIR"));
  std::size_t count = 0;
  for (const auto& ideal : p.lattice.ideals()) {
    if (!is_primary(p.ring, ideal)) continue;
    ++count;
    const auto rad = radical(p.ring, ideal);
    if (!is_ppri(p.ring, rad)) return ClaimOutcome::refuted(ideal.to_string(), "radical " + rad.to_string() + " is not PPRI");
  }
  return ClaimOutcome::verified(std::to_string(count) + " primary ideals; every radical is PPRI");
}

inline ClaimOutcome proprad(const RingProfile& p) {
  for (auto i : p.primes) {
    const auto& prime = p.lattice[i];
    const auto rad = radical(p.ring, prime);
    if (rad.members() != prime.members()) return ClaimOutcome::refuted(prime.to_string(), "Rad(P) = " + rad.to_string() + " differs from P");
    if (p.pprir && !is_ppri(p.ring, rad)) return ClaimOutcome::refuted(prime.to_string(), "Rad(P) is not PPRI in a PPRIR ring");
  }
  return ClaimOutcome::verified(std::to_string(p.primes.size()) + " primes satisfy Rad(P) = P" +
                                (p.pprir ? "; all PPRI" : "; PPRI part vacuous (ring is not PPRIR)"));
}

/// Finite rings satisfy the ascending chain condition on primes, so the
/// converse direction predicts every corpus ring is PPRIR.
inline ClaimOutcome thm2(const RingProfile& p) {
  if (p.pprir) return ClaimOutcome::verified("ACC on primes holds (finite ring) and ring is PPRIR");
  return ClaimOutcome::refuted(p.lattice[*p.pprir_witness].to_string(),
                               "ACC on primes holds (finite ring) but this prime is not principal");
}

inline ClaimOutcome thm5(const RingProfile& p, const AuditOptions& opt) {
  const auto k = p.primes.size();
  // (a) every nonempty family of primes has a member not strictly inside another member.
  auto has_maximal_member = [&](const std::vector<std::size_t>& family) {
    for (auto a : family) {
      bool strictly_inside = false;
      for (auto b : family)
        if (a != b && p.lattice[a].is_proper_subset_of(p.lattice[b])) strictly_inside = true;
      if (!strictly_inside) return true;
    }
    return false;
  };
  auto family_string = [&](const std::vector<std::size_t>& family) {
    std::string s = "[";
    for (std::size_t i = 0; i < family.size(); ++i) s += (i ? "," : "") + p.lattice[family[i]].to_string();
    return s + "]";
  };
  std::size_t families = 0;
  if (k <= 4) {
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      std::vector<std::size_t> family;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) family.push_back(p.primes[i]);
      ++families;
      if (!has_maximal_member(family)) return ClaimOutcome::refuted(family_string(family), "family without a maximal member");
    }
  } else {
    std::mt19937_64 rng(opt.subset_seed);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t s = 0; s < opt.sampled_subsets; ++s) {
      std::vector<std::size_t> family;
      while (family.empty())
        for (auto i : p.primes)
          if (coin(rng)) family.push_back(i);
      ++families;
      if (!has_maximal_member(family)) return ClaimOutcome::refuted(family_string(family), "family without a maximal member");
    }
  }
  const std::string part_a = "(a) " + std::to_string(families) + (k <= 4 ? " families (exhaustive)" : " families (sampled)") + " have maximal members";
  if (!p.pprir)
    return ClaimOutcome::refuted(p.lattice[*p.pprir_witness].to_string(), part_a + "; (b) ring is not PPRIR: this prime is not principal");
  return ClaimOutcome::verified(part_a + "; (b) ring is PPRIR");
}

inline ClaimOutcome thm6(const RingProfile& p) {
  std::size_t proper = 0, hypothesis = 0;
  for (const auto& ideal : p.lattice.ideals()) {
    if (!ideal.is_proper()) continue;
    ++proper;
    const auto mins = minimal_primes_over(p.ring, ideal, p.lattice);
    std::set<ElementSet> distinct;
    for (const auto& m : mins) distinct.insert(m.members());
    if (mins.empty() || distinct.size() != mins.size())
      return ClaimOutcome::refuted(ideal.to_string(), mins.empty() ? "no minimal prime over a proper ideal" : "duplicate minimal primes");
    bool all_ppri = true;
    for (const auto& m : mins) all_ppri = all_ppri && is_principal(p.ring, m).principal;
    hypothesis += all_ppri;
  }
  return ClaimOutcome::verified(std::to_string(proper) + " proper ideals have finite minimal-prime lists; hypothesis (all minimal primes PPRI) held for " +
                                std::to_string(hypothesis) + (p.pprir ? "" : "; ring is not PPRIR"));
}

inline ClaimOutcome ex1field(const RingProfile& p) {
  if (!p.field) return ClaimOutcome::verified(vacuous("ring is not a field"));
  if (!p.pprir) return ClaimOutcome::refuted(p.lattice[*p.pprir_witness].to_string(), "field that is not PPRIR");
  return ClaimOutcome::verified("field is PPRIR");
}

inline ClaimOutcome run(ClaimId claim, const RingProfile& p, const AuditOptions& opt) {
  switch (claim) {
    case ClaimId::THM1: return audit_thm1(p.ring, p.lattice);
    case ClaimId::PROP1: return prop1(p);
    case ClaimId::PROP2: return prop2(p);
    case ClaimId::PROP3: return prop3(p);
    case ClaimId::PROP4: return prop4(p);
    case ClaimId::PROPRAD: return proprad(p);
    case ClaimId::THM2: return thm2(p);
    case ClaimId::THM3: return audit_thm3(p.ring, opt.endomorphism_cap);
    case ClaimId::THM5: return thm5(p, opt);
    case ClaimId::THM6: return thm6(p);
    case ClaimId::EX1FIELD: return ex1field(p);
    case ClaimId::EX2: break;
  }
  throw std::invalid_argument("claim " + std::string(to_string(claim)) + " is not a per-ring claim");
}

}  // namespace checks

/// Runs `claims` over the corpus. Reports are ordered claim-major, rings in
/// corpus order; EX2 yields a single "zmodel" report. Rings are processed
/// concurrently but the output order does not depend on scheduling.
inline std::vector<ClaimReport> run_audit(std::span<const ClaimId> claims, const Corpus& corpus, const AuditOptions& opt = {}) {
  using clock = std::chrono::steady_clock;
  std::vector<ClaimId> ring_claims;
  for (auto c : claims)
    if (c != ClaimId::EX2) ring_claims.push_back(c);

  const auto n = corpus.size();
  std::vector<std::vector<ClaimReport>> per_ring(n);
  if (!ring_claims.empty()) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          const auto& ring = corpus.rings()[i];
          const auto start = clock::now();
          const auto profile = profile_ring(ring);
          const auto profile_time = clock::now() - start;
          for (auto c : ring_claims) {
            const auto t0 = clock::now();
            auto outcome = checks::run(c, profile, opt);
            const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - t0 + profile_time);
            per_ring[i].push_back({c, ring.label(), outcome.status, std::move(outcome.witness), std::move(outcome.note), elapsed});
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    unsigned jobs = opt.jobs ? opt.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
    {
      std::vector<std::jthread> pool;
      for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
      worker();
    }
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<ClaimReport> out;
  for (auto c : claims) {
    if (c == ClaimId::EX2) {
      const auto t0 = clock::now();
      auto res = zmodel::audit_ex2();
      out.push_back({c, std::string(kZModelLabel), res.outcome.status, res.outcome.witness, res.outcome.note,
                     std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - t0)});
      continue;
    }
    const auto slot = static_cast<std::size_t>(std::find(ring_claims.begin(), ring_claims.end(), c) - ring_claims.begin());
    for (std::size_t i = 0; i < n; ++i) out.push_back(per_ring[i][slot]);
  }
  return out;
}

inline std::vector<ClaimReport> run_claim(ClaimId claim, const Corpus& corpus, const AuditOptions& opt = {}) {
  const ClaimId one[] = {claim};
  return run_audit(one, corpus, opt);
}

inline std::vector<ClaimReport> run_claim(std::string_view claim, const Corpus& corpus, const AuditOptions& opt = {}) {
  return run_claim(parse_claim_id(claim), corpus, opt);
}

// ---------------------------------------------------------------------------
// Rendering

/// Text: one line per report, "CLAIM ring status [witness]"; skipped reports
/// append their reason in parentheses. JSON: array of objects with fields
/// claim, ring, status, witness (string or null), note, elapsed_ms.
inline std::string render_report(const std::vector<ClaimReport>& reports, std::string_view format) {
  if (format == "text") {
    std::string out;
    for (const auto& r : reports) {
      out += std::string(to_string(r.claim)) + " " + r.ring + " " + std::string(to_string(r.status));
      if (r.witness) out += " " + *r.witness;
      if (r.status == ClaimStatus::skipped) out += " (" + r.note + ")";
      out += "\n";
    }
    return out;
  }
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      nlohmann::ordered_json o;
      o["claim"] = to_string(r.claim);
      o["ring"] = r.ring;
      o["status"] = to_string(r.status);
      o["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
      o["note"] = r.note;
      o["elapsed_ms"] = static_cast<double>(r.elapsed.count()) / 1000.0;
      arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
  }
  throw std::invalid_argument("unknown report format '" + std::string(format) + "' (expected text or json)");
}

inline std::vector<ClaimReport> parse_reports(std::string_view json_text) {
  const auto doc = nlohmann::json::parse(json_text);
  if (!doc.is_array()) throw FormatError("report document must be a JSON array");
  std::vector<ClaimReport> out;
  for (const auto& o : doc) {
    ClaimReport r;
    r.claim = parse_claim_id(o.at("claim").get<std::string>());
    r.ring = o.at("ring").get<std::string>();
    r.status = parse_claim_status(o.at("status").get<std::string>());
    if (!o.at("witness").is_null()) r.witness = o.at("witness").get<std::string>();
    r.note = o.value("note", "");
    r.elapsed = std::chrono::microseconds(std::llround(o.at("elapsed_ms").get<double>() * 1000.0));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace pprir
