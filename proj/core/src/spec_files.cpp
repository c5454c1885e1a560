#include "gravfock/spec_files.h"

#include <cctype>
#include <fstream>
#include <sstream>

#include "gravfock/parser.h"

namespace gravfock {

namespace {

constexpr std::size_t kAllLegs = static_cast<std::size_t>(-1);

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : line) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if ((c == ' ' || c == '\t' || c == '\r') && depth == 0) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

FieldKind parse_kind(const std::string& s, int line) {
  if (s == "scalar") return FieldKind::Scalar;
  if (s == "dirac") return FieldKind::Dirac;
  if (s == "gauge") return FieldKind::Gauge;
  throw SpecError("unknown field kind '" + s + "'", line);
}

Discrete parse_discrete(const std::string& s) {
  if (!s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-')) return Discrete::bound(std::stoi(s));
  return Discrete::symbol(s);
}

void parse_line(const std::vector<std::string>& tok, int line, GreenFunction& g) {
  const auto kv = [&](const std::string& t) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw SpecError("expected key=value, got '" + t + "'", line);
    return std::pair{t.substr(0, eq), t.substr(eq + 1)};
  };

  if (tok[0] == "field") {
    if (tok.size() < 2) throw SpecError("field needs a kind", line);
    FieldSpec f{parse_kind(tok[1], line), Rational(1)};
    for (std::size_t i = 2; i < tok.size(); ++i) {
      const auto [k, v] = kv(tok[i]);
      if (k != "mass") throw SpecError("unknown field attribute '" + k + "'", line);
      f.mass = parse_rational(v);
    }
    for (const auto& existing : g.fields)
      if (existing.kind == f.kind) throw SpecError(std::string("field ") + to_string(f.kind) + " declared twice", line);
    g.fields.push_back(f);
  } else if (tok[0] == "vertex") {
    VertexRule v;
    Rational re, im;
    bool legs_given = false;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (tok[i] == "constant") continue;
      const auto [k, val] = kv(tok[i]);
      if (k == "re") re = parse_rational(val);
      else if (k == "im") im = parse_rational(val);
      else if (k == "legs") {
        legs_given = true;
        if (val == "all") {
          v.legs = {kAllLegs};
        } else {
          std::istringstream ss(val);
          std::string item;
          while (std::getline(ss, item, ',')) {
            const int idx = std::stoi(item);
            if (idx < 1) throw SpecError("leg indices start at 1", line);
            v.legs.push_back(static_cast<std::size_t>(idx - 1));
          }
        }
      } else {
        throw SpecError("unknown vertex attribute '" + k + "'", line);
      }
    }
    if (!legs_given) throw SpecError("vertex needs legs=", line);
    v.factor = ComplexRational(re, im);
    g.vertices.push_back(std::move(v));
  } else if (tok[0] == "leg") {
    if (tok.size() < 3) throw SpecError("leg needs a direction and a field kind", line);
    Leg leg;
    if (tok[1] == "in") leg.incoming = true;
    else if (tok[1] == "out") leg.incoming = false;
    else throw SpecError("leg direction must be in or out", line);
    leg.kind = parse_kind(tok[2], line);
    bool have_p = false;
    for (std::size_t i = 3; i < tok.size(); ++i) {
      if (tok[i] == "particle") { leg.antiparticle = false; continue; }
      if (tok[i] == "antiparticle") { leg.antiparticle = true; continue; }
      const auto [k, v] = kv(tok[i]);
      if (k == "p") {
        leg.momentum = parse_momentum_label(v);
        have_p = true;
      } else if (k == "E") leg.energy = parse_rational(v);
      else if (k == "s") leg.spin = parse_discrete(v);
      else if (k == "g") leg.polarization = parse_discrete(v);
      else if (k == "G") leg.inner_polarization = parse_discrete(v);
      else throw SpecError("unknown leg attribute '" + k + "'", line);
    }
    if (!have_p) throw SpecError("leg needs p=", line);
    g.legs.push_back(std::move(leg));
  } else {
    throw SpecError("unknown directive '" + tok[0] + "'", line);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

SpecError::SpecError(const std::string& message, int line)
    : std::invalid_argument("line " + std::to_string(line) + ": " + message), line_(line) {}

void parse_green_spec(std::string_view text, GreenFunction& g) {
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    try {
      parse_line(tok, number, g);
    } catch (const SpecError&) {
      throw;
    } catch (const std::exception& e) {
      throw SpecError(e.what(), number);
    }
  }
}

void finalize_green_function(GreenFunction& g) {
  for (auto& v : g.vertices) {
    if (v.legs.size() == 1 && v.legs[0] == kAllLegs) {
      v.legs.clear();
      for (std::size_t i = 0; i < g.legs.size(); ++i) v.legs.push_back(i);
    }
  }
  validate_legs(g);
}

GreenFunction load_green_function(const std::string& greens_path, const std::string& legs_path) {
  GreenFunction g;
  const auto wrap = [](const std::string& path, const std::string& text, GreenFunction& into) {
    try {
      parse_green_spec(text, into);
    } catch (const SpecError& e) {
      throw std::invalid_argument(path + ": " + e.what());
    }
  };
  wrap(greens_path, read_file(greens_path), g);
  if (!legs_path.empty()) wrap(legs_path, read_file(legs_path), g);
  finalize_green_function(g);
  return g;
}

}  // namespace gravfock
