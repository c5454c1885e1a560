#include "gravfock/report.h"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace gravfock {

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.passed; }));
}

void Report::sort_cases() {
  std::stable_sort(cases.begin(), cases.end(), [](const CaseResult& a, const CaseResult& b) { return a.name < b.name; });
}

std::string render_json(const Report& r) {
  using json = nlohmann::ordered_json;
  json cfg = json::object();
  for (const auto& [k, v] : r.config) cfg[k] = v;
  json cases = json::array();
  for (const auto& c : r.cases) {
    json j;
    j["name"] = c.name;
    j["status"] = c.passed ? "pass" : "fail";
    j["detail"] = c.detail;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["tolerance"] = c.tolerance ? json(*c.tolerance) : json(nullptr);
    cases.push_back(std::move(j));
  }
  json out;
  out["suite"] = r.suite;
  out["seed"] = r.seed;
  out["config"] = std::move(cfg);
  out["cases"] = std::move(cases);
  return out.dump(2) + "\n";
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "suite " << r.suite << " (seed " << r.seed << ")\n";
  for (const auto& c : r.cases) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
    if (!c.passed && (!c.lhs.empty() || !c.rhs.empty())) {
      os << "    lhs: " << c.lhs << "\n    rhs: " << c.rhs << "\n";
    }
  }
  os << r.cases.size() - r.failures() << "/" << r.cases.size() << " cases passed\n";
  return os.str();
}

std::string render(const Report& r, ReportFormat f) { return f == ReportFormat::Json ? render_json(r) : render_text(r); }

}  // namespace gravfock
