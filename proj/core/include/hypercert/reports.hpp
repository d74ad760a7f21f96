#pragma once

#include <string>
#include <vector>

#include "hypercert/projectivity.hpp"

namespace hypercert {

enum class ReportFormat { Table, Structured };

struct CheckResult {
  /// Stable identifier, e.g. "lemma-span/A1/p3r2/steinberg/alpha".
  std::string id;
  /// Name of the mathematical statement the check verifies.
  std::string anchor;
  bool passed = false;
  Evidence evidence;
  /// Empty for passing checks.
  std::string witness;
};

struct Report {
  std::string target;
  Evidence config;
  std::vector<CheckResult> checks;

  std::size_t passed_count() const;
  bool all_passed() const { return passed_count() == checks.size(); }
};

/// Deterministic text. Structured output is JSON with schema
/// "hypercert.report/1" (see docs/formats.md).
std::string emit_report(const Report& report, ReportFormat format);

/// Flattens a projectivity report into evidence entries.
Evidence to_evidence(const ProjectivityReport& r);

}  // namespace hypercert
