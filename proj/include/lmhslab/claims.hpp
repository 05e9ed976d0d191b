#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace lmhslab {

enum class Verdict { CONFIRMED, REFUTED, UNVERIFIABLE, CONDITIONAL };
std::string to_string(Verdict v);

/// Verdict on one half of a compound statement.
struct ClaimPart {
  std::string label;
  Verdict verdict = Verdict::UNVERIFIABLE;
  std::string detail;
  friend bool operator==(const ClaimPart&, const ClaimPart&) = default;
};

struct ClaimRecord {
  std::string id;
  std::string statement;
  Verdict verdict = Verdict::UNVERIFIABLE;
  nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
  std::vector<ClaimPart> parts;
  std::string notes;
};

struct AuditConfig {
  /// Restrict to these ids (any order; output keeps the canonical order).
  std::vector<std::string> only;
  /// Adds the isotropic-cycle companion of "n-squared".
  bool isotropic_variant = false;
  /// Height bound for root searches and quartic scans.
  std::int64_t height_bound = 2;
};

/// Canonical order of every check id.
std::vector<std::string> claim_ids(bool isotropic_variant = true);

/// Throws PreconditionError for unknown ids or a bound below 1.
std::vector<ClaimRecord> run_audit(const AuditConfig& config = {});

/// Re-runs the check behind `record` and compares verdicts, parts and
/// evidence exactly.
bool replay(const ClaimRecord& record, std::int64_t height_bound = 2);

nlohmann::ordered_json audit_to_json(const std::vector<ClaimRecord>& records);
std::string audit_to_text(const std::vector<ClaimRecord>& records);

}  // namespace lmhslab
