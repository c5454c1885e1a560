#include "gravfock/parser.h"

#include <cctype>

namespace gravfock {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  OperatorExpr parse_all() {
    OperatorExpr e = expr();
    skip_ws();
    if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
    return e;
  }

  bool consume_time_order() {
    skip_ws();
    if (peek() == 'T' && !ident_char(peek(1)) && peek(1) != '\'' && peek(1) != '(') {
      ++pos_;
      return true;
    }
    return false;
  }

  MomentumLabel momentum_only() {
    MomentumLabel k = momentum();
    skip_ws();
    if (!at_end()) fail("trailing input after momentum label");
    return k;
  }

  InnerLabel inner_only() {
    InnerLabel k = inner();
    skip_ws();
    if (!at_end()) fail("trailing input after inner label");
    return k;
  }

 private:
  std::string_view text_;
  std::size_t pos_{0};

  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_ws();
    if (!ident_start(peek())) fail("expected identifier");
    const std::size_t start = pos_;
    while (ident_char(peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool number_start() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))));
  }

  std::string number_text() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    };
    digits();
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      digits();
      return std::string(text_.substr(start, pos_ - start));
    }
    if (peek() == '.') {
      ++pos_;
      digits();
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (std::isdigit(static_cast<unsigned char>(peek(1))) ||
         ((peek(1) == '-' || peek(1) == '+') && std::isdigit(static_cast<unsigned char>(peek(2)))))) {
      pos_ += 2;
      digits();
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational signed_rational() {
    skip_ws();
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
      skip_ws();
    }
    if (!number_start()) fail("expected number");
    const std::string t = number_text();
    Rational r;
    try {
      r = parse_rational(t);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    return neg ? Rational(-r) : r;
  }

  int integer() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000) fail("integer too large");
      ++pos_;
    }
    return static_cast<int>(neg ? -v : v);
  }

  template <std::size_t N>
  std::array<Rational, N> vector() {
    expect('[');
    std::array<Rational, N> v;
    for (std::size_t i = 0; i < N; ++i) {
      if (i) expect(',');
      v[i] = signed_rational();
    }
    expect(']');
    return v;
  }

  MomentumLabel momentum() {
    skip_ws();
    if (peek() == '[') return MomentumLabel::bound(vector<3>());
    return MomentumLabel::symbol(identifier());
  }

  InnerLabel inner() {
    skip_ws();
    if (peek() == '[') return InnerLabel::bound(vector<4>());
    const std::size_t save = pos_;
    const std::string name = identifier();
    if ((name == "os" || name == "osD" || name == "osA") && accept('(')) {
      MomentumLabel k = momentum();
      expect(')');
      const MassTag tag = name == "os" ? MassTag::Scalar : (name == "osD" ? MassTag::Dirac : MassTag::Gauge);
      return InnerLabel::on_shell(std::move(k), tag);
    }
    pos_ = save;
    return InnerLabel::symbol(identifier());
  }

  Discrete discrete() {
    skip_ws();
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-') return Discrete::bound(integer());
    return Discrete::symbol(identifier());
  }

  // "name=" prefix inside an operator label list.
  void key(const char* name) {
    const std::string id = identifier();
    if (id != name) fail(std::string("expected '") + name + "='");
    expect('=');
  }

  OperatorExpr ladder(char head) {
    bool dagger = accept('\'');
    expect('(');
    MomentumLabel k = momentum();
    std::optional<Discrete> spin, gamma, big_gamma;
    std::optional<InnerLabel> big_k;
    const bool fermion = head == 'b' || head == 'd';
    const bool gauge = head == 'A';
    if (fermion) {
      expect(',');
      key("s");
      spin = discrete();
    } else if (gauge) {
      expect(',');
      key("g");
      gamma = discrete();
    }
    if (accept(';')) big_k = inner();
    if (gauge) {
      expect(',');
      key("G");
      big_gamma = discrete();
    }
    expect(')');

    Species species = Species::Scalar;
    if (head == 'b') species = Species::DiracParticle;
    if (head == 'd') species = Species::DiracAntiparticle;
    if (gauge) species = Species::Gauge;
    InnerLabel inner_label = big_k ? *big_k : InnerLabel::on_shell(k, mass_tag(species));
    try {
      if (fermion) return OperatorExpr::op(LadderOperator::dirac(species, k, *spin, inner_label, dagger));
      if (gauge) return OperatorExpr::op(LadderOperator::gauge(k, *gamma, inner_label, *big_gamma, dagger));
      return OperatorExpr::op(LadderOperator::scalar(k, inner_label, dagger));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  bool zero_argument() {
    skip_ws();
    const std::size_t save = pos_;
    if (peek() == '0') {
      ++pos_;
      if (accept(')')) return true;
    }
    pos_ = save;
    return false;
  }

  OperatorExpr atom_or_operator(const std::string& name, std::size_t name_start) {
    if (name.size() == 1 && (name == "a" || name == "b" || name == "d" || name == "A")) {
      return ladder(name[0]);
    }
    if (name == "Lambda") return OperatorExpr::atom(LambdaAtom{});
    if (name == "twopi") return OperatorExpr::atom(TwoPiAtom{});
    if (name == "Vreg") return OperatorExpr::atom(VregAtom{});
    if (name == "i") return OperatorExpr::number(ComplexRational::i());
    if (name == "omega" || name == "omega_A" || name == "k0m") {
      expect('(');
      MomentumLabel k = momentum();
      expect(')');
      if (name == "k0m") return OperatorExpr::atom(EnergyOverMassAtom{k});
      return OperatorExpr::atom(OmegaAtom{k, name == "omega" ? MassTag::Scalar : MassTag::Gauge});
    }
    if (name == "delta3") {
      expect('(');
      if (zero_argument()) return OperatorExpr::atom(Delta3Zero{});
      MomentumLabel p = momentum();
      expect(',');
      MomentumLabel q = momentum();
      expect(')');
      return OperatorExpr::atom(delta3(p, q));
    }
    if (name == "delta4") {
      expect('(');
      if (zero_argument()) return OperatorExpr::atom(Delta4Zero{});
      InnerLabel p = inner();
      expect(',');
      InnerLabel q = inner();
      expect(')');
      return OperatorExpr::atom(delta4(p, q));
    }
    if (name == "kron" || name == "eta" || name == "etaI") {
      expect('(');
      Discrete s = discrete();
      expect(',');
      Discrete t = discrete();
      expect(')');
      if (name == "kron") return OperatorExpr::atom(kronecker(s, t));
      return OperatorExpr::atom(metric(s, t, name == "etaI"));
    }
    pos_ = name_start;
    fail("unknown operator or symbol '" + name + "'");
  }

  OperatorExpr primary() {
    skip_ws();
    if (accept('(')) {
      OperatorExpr e = expr();
      expect(')');
      return e;
    }
    if (number_start()) {
      const std::string t = number_text();
      Rational r;
      try {
        r = parse_rational(t);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
      if (peek() == 'i' && !ident_char(peek(1))) {
        ++pos_;
        return OperatorExpr::number(ComplexRational(Rational(0), r));
      }
      return OperatorExpr::number(ComplexRational(r));
    }
    if (ident_start(peek())) {
      const std::size_t start = pos_;
      const std::string name = identifier();
      return atom_or_operator(name, start);
    }
    if (at_end()) fail("unexpected end of input");
    fail("unexpected '" + std::string(1, peek()) + "'");
  }

  OperatorExpr power() {
    const std::size_t start = pos_;
    OperatorExpr base = primary();
    if (!accept('^')) return base;
    const int n = integer();
    if (base.size() == 1 && base.terms().begin()->first.factors.empty()) {
      const auto& [t, c] = *base.terms().begin();
      if (n < 0 && !(c == ComplexRational(1))) {
        pos_ = start;
        fail("negative powers are only allowed on atoms");
      }
      AtomPowers atoms;
      for (const auto& [a, p] : t.atoms) multiply_into(atoms, a, p * n);
      ComplexRational coeff(1);
      for (int j = 0; j < (n < 0 ? 0 : n); ++j) coeff *= c;
      OperatorExpr out;
      try {
        out.add({}, std::move(atoms), coeff);
      } catch (const std::domain_error& e) {
        pos_ = start;
        fail(e.what());
      }
      return out;
    }
    if (n < 0) {
      pos_ = start;
      fail("negative powers are only allowed on atoms");
    }
    OperatorExpr out = OperatorExpr::number(ComplexRational(1));
    for (int j = 0; j < n; ++j) out *= base;
    return out;
  }

  bool product_continues() {
    skip_ws();
    const char c = peek();
    return c == '(' || ident_start(c) || number_start();
  }

  OperatorExpr product() {
    OperatorExpr e = power();
    while (true) {
      if (accept('*')) {
        e *= power();
      } else if (product_continues()) {
        e *= power();
      } else {
        return e;
      }
    }
  }

  OperatorExpr expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = peek() == '-';
      ++pos_;
    }
    OperatorExpr e = product();
    if (neg) e = -e;
    while (true) {
      if (accept('+')) {
        e += product();
      } else if (accept('-')) {
        e -= product();
      } else {
        return e;
      }
    }
  }
};

}  // namespace

OperatorExpr parse_expression(std::string_view text) { return Parser(text).parse_all(); }

TimeOrdered parse_maybe_time_ordered(std::string_view text) {
  Parser p(text);
  TimeOrdered out;
  out.time_ordered = p.consume_time_order();
  out.expr = p.parse_all();
  return out;
}

OperatorExpr parse_ket(std::string_view text) {
  std::string s(text);
  const auto bar = s.rfind("|0>");
  if (bar == std::string::npos) throw ParseError("ket must end with |0>", 1, static_cast<int>(s.size()) + 1);
  for (std::size_t i = bar + 3; i < s.size(); ++i) {
    if (!std::isspace(static_cast<unsigned char>(s[i]))) {
      throw ParseError("trailing input after |0>", 1, static_cast<int>(i) + 1);
    }
  }
  s.resize(bar);
  bool blank = true;
  for (char c : s) blank = blank && std::isspace(static_cast<unsigned char>(c));
  if (blank) return OperatorExpr::number(ComplexRational(1));
  return parse_expression(s);
}

MomentumLabel parse_momentum_label(std::string_view text) { return Parser(text).momentum_only(); }
InnerLabel parse_inner_label(std::string_view text) { return Parser(text).inner_only(); }

}  // namespace gravfock
