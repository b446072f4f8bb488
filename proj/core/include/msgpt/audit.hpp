#pragma once

// Audit of the numeric claims the analysis makes about specific instances.
// Records values and verdicts; never throws on a refuted claim.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace msgpt {

enum class Verdict { kConfirmed, kRefutedByEngine, kOutOfRange };

std::string_view to_string(Verdict verdict);

struct AuditRecord {
  std::string id;
  std::string context;
  std::string claim;
  std::string claimed;
  std::vector<std::pair<std::string, std::string>> engine_values;  // key -> value
  std::vector<std::string> details;
  Verdict verdict = Verdict::kOutOfRange;
};

struct AuditReport {
  std::vector<AuditRecord> records;

  const AuditRecord* find(std::string_view id) const;
};

AuditReport audit_claims();

/// One `key=value` record per claim followed by indented detail lines.
void write_audit_text(std::ostream& os, const AuditReport& report);
void write_audit_json(std::ostream& os, const AuditReport& report);

}  // namespace msgpt
