#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gravfock/config.h"
#include "gravfock/fock.h"
#include "gravfock/gravlimit.h"
#include "gravfock/lsz.h"
#include "gravfock/normal_order.h"
#include "gravfock/parser.h"
#include "gravfock/propagator.h"
#include "gravfock/report.h"
#include "gravfock/spec_files.h"
#include "gravfock/suites.h"

using namespace gravfock;
using json = nlohmann::ordered_json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct GlobalFlags {
  std::string config_path;
  std::optional<double> tol;
  std::optional<double> epsilon;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;
  std::optional<std::string> lambda;
  std::optional<std::string> v_reg;
};

RunConfig resolve_config(const GlobalFlags& f) {
  RunConfig cfg;
  if (!f.config_path.empty()) cfg = load_config_file(f.config_path);
  if (f.tol) cfg.tolerance = *f.tol;
  if (f.epsilon) cfg.i_epsilon = *f.epsilon;
  if (f.seed) cfg.seed = *f.seed;
  if (f.format) cfg.format = parse_format(*f.format);
  if (f.lambda) apply_setting(cfg, "lambda", *f.lambda);
  if (f.v_reg) apply_setting(cfg, "v_reg", *f.v_reg);
  cfg.validate();
  return cfg;
}

void emit(const RunConfig& cfg, const std::string& command, const std::vector<std::string>& inputs,
          const std::vector<std::pair<std::string, std::string>>& results) {
  if (cfg.format == ReportFormat::Json) {
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    json r = json::object();
    for (const auto& [k, v] : results) r[k] = v;
    j["result"] = std::move(r);
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (results.size() == 1) {
    std::cout << results.front().second << "\n";
    return;
  }
  for (const auto& [k, v] : results) std::cout << k << ": " << v << "\n";
}

std::optional<FieldKind> two_point_kind(const OperatorExpr& e) {
  if (e.size() != 1) return std::nullopt;
  const auto& f = e.terms().begin()->first.factors;
  if (f.size() != 2 || f[0].dagger() || !f[1].dagger() || f[0].species() != f[1].species()) return std::nullopt;
  switch (f[0].species()) {
    case Species::Scalar: return FieldKind::Scalar;
    case Species::Gauge: return FieldKind::Gauge;
    default: return FieldKind::Dirac;
  }
}

int run_reduce(const RunConfig& cfg, const std::string& greens, const std::string& legs) {
  const GreenFunction g = load_green_function(greens, legs);
  const Amplitude amp = lsz_reduce(g, cfg.recipe(), cfg.regularization());
  const OperatorExpr oracle = elastic_oracle(g, cfg.regularization());
  const bool match = oracle == amp.elastic;

  std::ostringstream connected;
  connected << format_double(amp.connected.real()) << (amp.connected.imag() < 0 ? "" : "+")
            << format_double(amp.connected.imag()) << "i";
  if (cfg.format == ReportFormat::Json) {
    json j;
    j["legs"] = g.legs.size();
    j["pairings"] = amp.pairings.size();
    j["elastic"] = to_string(amp.elastic);
    j["normalized_elastic"] = to_string(amp.normalized_elastic);
    j["elastic_matches_wick_oracle"] = match;
    j["lambda_power"] = amp.lambda_power ? json(*amp.lambda_power) : json(nullptr);
    j["connected"] = connected.str();
    j["connected_is_zero"] = amp.connected_is_zero;
    json att = json::array();
    for (const auto& a : amp.attachments) att.push_back({{"leg", a.leg + 1}, {"kind", a.kind}});
    j["attachments"] = std::move(att);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "legs: " << g.legs.size() << "\n"
              << "pairings: " << amp.pairings.size() << "\n"
              << "elastic: " << to_string(amp.elastic) << "\n"
              << "normalized elastic: " << to_string(amp.normalized_elastic) << "\n"
              << "elastic matches Wick oracle: " << (match ? "yes" : "no") << "\n"
              << "lambda power: " << (amp.lambda_power ? std::to_string(*amp.lambda_power) : "mixed") << "\n"
              << "connected: " << (amp.connected_is_zero ? "0" : connected.str()) << "\n";
    for (const auto& a : amp.attachments) std::cout << "leg " << a.leg + 1 << ": " << a.kind << "\n";
  }
  return match ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic Fock-space algebra with inner momenta, gravitational limit and LSZ reduction"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags flags;
  app.add_option("--config", flags.config_path, "Flat key=value configuration file");
  app.add_option("--tol", flags.tol, "Tolerance for numeric checks (default 1e-12)");
  app.add_option("--epsilon", flags.epsilon, "i epsilon used in numeric kernels (default 1e-8)");
  app.add_option("--seed", flags.seed, "Random seed");
  app.add_option("--format", flags.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--lambda", flags.lambda, "Length scale Lambda (rational)");
  app.add_option("--v-reg", flags.v_reg, "Regularized inner volume V_reg (rational)");

  std::string suite = "all";
  std::string output;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "ccr, car, gauge, kinematics, fock, gravlimit, propagators, lsz, unitarity or all");
  verify->add_option("--output", output, "Also write the report to this file");

  std::string lhs, rhs, expr;
  auto* comm = app.add_subcommand("commutator", "Print [A, B] in normal form");
  comm->add_option("A", lhs)->required();
  comm->add_option("B", rhs)->required();
  auto* anti = app.add_subcommand("anticommutator", "Print {A, B} in normal form");
  anti->add_option("A", lhs)->required();
  anti->add_option("B", rhs)->required();
  auto* vev_cmd = app.add_subcommand("vev", "Vacuum expectation value; a leading T marks a time-ordered product");
  vev_cmd->add_option("EXPR", expr)->required();
  auto* parse_cmd = app.add_subcommand("parse", "Parse and print the canonical form");
  parse_cmd->add_option("EXPR", expr)->required();
  auto* nf_cmd = app.add_subcommand("normal-form", "Reorder into normal form keeping contact terms");
  nf_cmd->add_option("EXPR", expr)->required();
  auto* no_cmd = app.add_subcommand("normal-order", "Normal ordering :EXPR: without contact terms");
  no_cmd->add_option("EXPR", expr)->required();
  auto* limit_cmd = app.add_subcommand("limit", "Gravitational limit of an expression");
  limit_cmd->add_option("EXPR", expr)->required();
  std::string greens, legs;
  auto* reduce_cmd = app.add_subcommand("reduce", "LSZ reduction of a Green-function spec");
  reduce_cmd->add_option("GREENS", greens, "Green-function spec file")->required()->check(CLI::ExistingFile);
  reduce_cmd->add_option("--legs", legs, "Legs spec file")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  RunConfig cfg;
  try {
    cfg = resolve_config(flags);
    if (verify->parsed() && !is_suite(suite)) throw ConfigError("unknown suite '" + suite + "'");
  } catch (const std::exception& e) {
    std::cerr << "gravfock: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (verify->parsed()) {
      const Report rep = run_suite(suite, cfg);
      const std::string text = render(rep, cfg.format);
      std::cout << text;
      if (!output.empty()) {
        std::ofstream f(output, std::ios::binary);
        if (!f) {
          std::cerr << "gravfock: cannot write '" << output << "'\n";
          return kUsage;
        }
        f << text;
      }
      return rep.passed() ? kPass : kFail;
    }
    if (comm->parsed()) {
      emit(cfg, "commutator", {lhs, rhs}, {{"value", to_string(commutator(parse_expression(lhs), parse_expression(rhs)))}});
    } else if (anti->parsed()) {
      emit(cfg, "anticommutator", {lhs, rhs},
           {{"value", to_string(anticommutator(parse_expression(lhs), parse_expression(rhs)))}});
    } else if (vev_cmd->parsed()) {
      const TimeOrdered t = parse_maybe_time_ordered(expr);
      std::vector<std::pair<std::string, std::string>> results{{"value", to_string(vev(t.expr))}};
      if (t.time_ordered) {
        if (const auto kind = two_point_kind(t.expr)) {
          const PropagatorSpec spec{*kind, 1.0, cfg.i_epsilon};
          const WickCheck w = wick_two_point(*kind, FieldMasses{}, cfg.tolerance);
          results.emplace_back("propagator", spec.describe());
          results.emplace_back("momentum integrand", w.lhs);
          results.emplace_back("matches propagator", w.passed ? "yes" : "no: " + w.detail);
          if (!w.passed) {
            emit(cfg, "vev", {expr}, results);
            return kFail;
          }
        }
      }
      emit(cfg, "vev", {expr}, results);
    } else if (parse_cmd->parsed()) {
      emit(cfg, "parse", {expr}, {{"value", to_string(parse_expression(expr))}});
    } else if (nf_cmd->parsed()) {
      emit(cfg, "normal-form", {expr}, {{"value", to_string(reduce_to_normal_form(parse_expression(expr)))}});
    } else if (no_cmd->parsed()) {
      emit(cfg, "normal-order", {expr}, {{"value", to_string(normal_order(parse_expression(expr)))}});
    } else if (limit_cmd->parsed()) {
      emit(cfg, "limit", {expr}, {{"value", to_string(grav_limit_expr(parse_expression(expr), cfg.regularization()))}});
    } else if (reduce_cmd->parsed()) {
      return run_reduce(cfg, greens, legs);
    }
  } catch (const ParseError& e) {
    std::cerr << "gravfock: parse error at " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "gravfock: " << e.what() << "\n";
    return kFail;
  }
  return kPass;
}
