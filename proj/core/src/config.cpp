#include "gravfock/config.h"

#include <charconv>
#include <fstream>
#include <sstream>

namespace gravfock {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view key, std::string_view v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError("invalid number for " + std::string(key) + ": '" + std::string(v) + "'");
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

ReportFormat parse_format(std::string_view s) {
  if (s == "text") return ReportFormat::Text;
  if (s == "json") return ReportFormat::Json;
  throw ConfigError("format must be text or json, got '" + std::string(s) + "'");
}

const char* to_string(ReportFormat f) { return f == ReportFormat::Json ? "json" : "text"; }

void RunConfig::validate() const {
  if (!(tolerance > 0.0)) throw ConfigError("tolerance must be > 0");
  if (!(i_epsilon > 0.0)) throw ConfigError("i_epsilon must be > 0");
  if (!(lambda > 0)) throw ConfigError("lambda must be > 0");
  if (!(v_reg > 0)) throw ConfigError("v_reg must be > 0");
  for (const auto& [name, v] : {std::pair{"z", z}, std::pair{"z2", z2}, std::pair{"z3", z3}}) {
    if (!(v > 0.0 && v <= 1.0)) throw ConfigError(std::string(name) + " must lie in (0, 1]");
  }
}

std::vector<std::pair<std::string, std::string>> RunConfig::entries() const {
  return {{"tolerance", format_double(tolerance)},
          {"i_epsilon", format_double(i_epsilon)},
          {"seed", std::to_string(seed)},
          {"lambda", to_string(lambda)},
          {"v_reg", to_string(v_reg)},
          {"z", format_double(z)},
          {"z2", format_double(z2)},
          {"z3", format_double(z3)},
          {"format", to_string(format)}};
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
  try {
    if (key == "tolerance") cfg.tolerance = parse_double(key, value);
    else if (key == "i_epsilon") cfg.i_epsilon = parse_double(key, value);
    else if (key == "seed") {
      std::uint64_t s = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), s);
      if (ec != std::errc() || ptr != value.data() + value.size()) throw ConfigError("invalid seed '" + std::string(value) + "'");
      cfg.seed = s;
    } else if (key == "lambda") cfg.lambda = parse_rational(value);
    else if (key == "v_reg") cfg.v_reg = parse_rational(value);
    else if (key == "z") cfg.z = parse_double(key, value);
    else if (key == "z2") cfg.z2 = parse_double(key, value);
    else if (key == "z3") cfg.z3 = parse_double(key, value);
    else if (key == "format") cfg.format = parse_format(value);
    else throw ConfigError("unknown configuration key '" + std::string(key) + "'");
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(key) + ": " + e.what());
  }
}

RunConfig parse_config(std::string_view text, RunConfig base) {
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view l = line;
    if (auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    l = trim(l);
    if (l.empty()) continue;
    const auto eq = l.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(number) + ": expected key=value");
    }
    try {
      apply_setting(base, trim(l.substr(0, eq)), trim(l.substr(eq + 1)));
    } catch (const ConfigError& e) {
      throw ConfigError("config line " + std::to_string(number) + ": " + e.what());
    }
  }
  base.validate();
  return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

}  // namespace gravfock
