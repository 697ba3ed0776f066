// Serialization of sweep, identity, audit, and reconstruction results.
// json is line-oriented (one object per line) and byte-deterministic for a
// fixed input sequence; residues are decimal strings in [0, modulus).
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cbsum/catalog.hpp"
#include "cbsum/identities.hpp"
#include "cbsum/sweep.hpp"

namespace cbsum {

enum class ReportFormat { json, csv, table };

// Accepts "json", "csv", "table"; throws ConfigError otherwise.
ReportFormat parse_report_format(const std::string& name);

void emit_check_results(std::ostream& os, const std::vector<CheckResult>& rs,
                        ReportFormat fmt);
void emit_identity_cases(std::ostream& os, const std::vector<IdentityCase>& cs,
                         ReportFormat fmt);
void emit_audit_report(std::ostream& os, const AuditReport& rep,
                       ReportFormat fmt);
void emit_reconstructions(std::ostream& os,
                          const std::vector<ReconstructionCandidate>& cs,
                          ReportFormat fmt);
// Roster listing: id, source, confidence, target exponent, cap, description.
void emit_check_roster(std::ostream& os, ReportFormat fmt);

}  // namespace cbsum
