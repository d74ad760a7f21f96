#include "hypercert/reports.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace hypercert {

std::size_t Report::passed_count() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }));
}

Evidence to_evidence(const ProjectivityReport& r) {
  Evidence e{{"subject", r.subject},
             {"algebra", to_string(r.algebra)},
             {"verdict", r.free() ? "free of rank " + std::to_string(r.required_rank) : to_string(r.verdict)},
             {"dim", std::to_string(r.module_dim)},
             {"algebra_dim", std::to_string(r.algebra_dim)},
             {"criterion", r.criterion}};
  e.insert(e.end(), r.evidence.begin(), r.evidence.end());
  return e;
}

namespace {

std::string table(const Report& report) {
  std::ostringstream os;
  os << "hypercert report: " << report.target << '\n';
  for (const auto& [k, v] : report.config) os << "  " << k << ": " << v << '\n';
  for (const auto& c : report.checks) {
    os << (c.passed ? "PASS  " : "FAIL  ") << c.id << "  [" << c.anchor << "]";
    for (const auto& [k, v] : c.evidence) os << "  " << k << "=" << v;
    os << '\n';
    if (!c.passed) os << "      witness: " << (c.witness.empty() ? "(none recorded)" : c.witness) << '\n';
  }
  const auto passed = report.passed_count();
  os << "summary: " << report.checks.size() << " checks, " << passed << " passed, " << report.checks.size() - passed
     << " failed\n";
  return os.str();
}

std::string structured(const Report& report) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = "hypercert.report/1";
  j["target"] = report.target;
  ordered_json cfg = ordered_json::object();
  for (const auto& [k, v] : report.config) cfg[k] = v;
  j["config"] = cfg;
  const auto passed = report.passed_count();
  j["summary"] = {{"checks", report.checks.size()}, {"passed", passed}, {"failed", report.checks.size() - passed}};
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json e = ordered_json::object();
    for (const auto& [k, v] : c.evidence) e[k] = v;
    ordered_json item = {{"id", c.id}, {"anchor", c.anchor}, {"verdict", c.passed ? "pass" : "fail"}, {"evidence", e}};
    if (!c.passed) item["witness"] = c.witness;
    checks.push_back(std::move(item));
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

}  // namespace

std::string emit_report(const Report& report, ReportFormat format) {
  return format == ReportFormat::Table ? table(report) : structured(report);
}

}  // namespace hypercert
