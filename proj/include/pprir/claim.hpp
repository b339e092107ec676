#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pprir {

enum class ClaimStatus { verified, refuted, skipped };

inline std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::verified: return "verified";
    case ClaimStatus::refuted: return "refuted";
    case ClaimStatus::skipped: return "skipped";
  }
  return "?";
}

inline ClaimStatus parse_claim_status(std::string_view s) {
  if (s == "verified") return ClaimStatus::verified;
  if (s == "refuted") return ClaimStatus::refuted;
  if (s == "skipped") return ClaimStatus::skipped;
  throw std::invalid_argument("unknown claim status '" + std::string(s) + "'");
}

/// Result of checking one statement on one ring. A refutation carries a
/// witness; a skip carries its reason in `note`.
struct ClaimOutcome {
  ClaimStatus status = ClaimStatus::verified;
  std::optional<std::string> witness;
  std::string note;

  static ClaimOutcome verified(std::string note = {}) { return {ClaimStatus::verified, std::nullopt, std::move(note)}; }
  static ClaimOutcome refuted(std::string witness, std::string note = {}) {
    return {ClaimStatus::refuted, std::move(witness), std::move(note)};
  }
  static ClaimOutcome skipped(std::string reason) { return {ClaimStatus::skipped, std::nullopt, std::move(reason)}; }

  friend bool operator==(const ClaimOutcome&, const ClaimOutcome&) = default;
};

}  // namespace pprir
