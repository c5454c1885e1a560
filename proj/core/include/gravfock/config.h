#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gravfock/gravlimit.h"
#include "gravfock/lsz.h"

namespace gravfock {

enum class ReportFormat { Text, Json };

/// Usage or configuration error; the command-line tool maps it to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  double tolerance{1e-12};
  double i_epsilon{1e-8};
  std::uint64_t seed{1};
  Rational lambda{1};
  Rational v_reg{1};
  double z{1.0};
  double z2{1.0};
  double z3{1.0};
  ReportFormat format{ReportFormat::Text};

  /// Throws ConfigError unless tolerance, i_epsilon, lambda, v_reg > 0 and z, z2, z3 lie in (0, 1].
  void validate() const;

  RegularizationConfig regularization() const { return {lambda, v_reg}; }
  LSZRecipe recipe() const { return {z, z2, z3, true}; }

  /// Key/value pairs in a fixed order, as echoed in reports.
  std::vector<std::pair<std::string, std::string>> entries() const;
};

/// Applies one `key=value` setting. Throws ConfigError for unknown keys or bad values.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Flat `key = value` text; `#` starts a comment. Keys: tolerance, i_epsilon,
/// seed, lambda, v_reg, z, z2, z3, format. The result is validated.
RunConfig parse_config(std::string_view text, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});

ReportFormat parse_format(std::string_view s);
const char* to_string(ReportFormat f);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace gravfock
