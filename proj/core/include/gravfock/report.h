#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gravfock/config.h"

namespace gravfock {

struct CaseResult {
  std::string name;
  bool passed{false};
  std::string detail;
  std::string lhs;
  std::string rhs;
  /// Absent for exact (symbolic) cases.
  std::optional<double> tolerance;
};

struct Report {
  std::string suite;
  std::uint64_t seed{0};
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<CaseResult> cases;

  bool passed() const;
  std::size_t failures() const;
  /// Stable sort of the cases by name.
  void sort_cases();
};

/// {suite, seed, config, cases:[{name, status, detail, lhs, rhs, tolerance}]},
/// two-space indented, trailing newline. No timestamps, so equal inputs give
/// byte-identical output.
std::string render_json(const Report& r);
std::string render_text(const Report& r);
std::string render(const Report& r, ReportFormat f);

}  // namespace gravfock
