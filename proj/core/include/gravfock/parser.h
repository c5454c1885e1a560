#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "gravfock/operator_expr.h"

namespace gravfock {

// Expression grammar (whitespace insignificant):
//
//   expr    := ['+'|'-'] product (('+'|'-') product)*
//   product := power (['*'] power)*
//   power   := primary ['^' ['-'] integer]
//   primary := number ['i'] | 'i' | '(' expr ')' | operator | atom
//   operator:= head [''']  '(' mom [',s=' d] [',g=' d] [';' inner] [',G=' d] ')'
//   head    := 'a' | 'b' | 'd' | 'A'
//   mom     := ident | '[' r ',' r ',' r ']'
//   inner   := ident | '[' r ',' r ',' r ',' r ']' | ('os'|'osD'|'osA') '(' mom ')'
//   atom    := 'Lambda' | 'twopi' | 'Vreg' | 'omega(' mom ')' | 'omega_A(' mom ')'
//            | 'k0m(' mom ')' | 'delta3(' mom ',' mom ')' | 'delta3(0)'
//            | 'delta4(' inner ',' inner ')' | 'delta4(0)'
//            | 'kron(' d ',' d ')' | 'eta(' d ',' d ')' | 'etaI(' d ',' d ')'
//
// An operator without ';inner' is barred: its inner label is the on-shell
// momentum of its own field.

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

OperatorExpr parse_expression(std::string_view text);

/// A time-ordered product is written with a leading `T`.
struct TimeOrdered {
  bool time_ordered{false};
  OperatorExpr expr;
};
TimeOrdered parse_maybe_time_ordered(std::string_view text);

/// `<expr> |0>`: the expression applied to the vacuum. `|0>` alone is the vacuum.
OperatorExpr parse_ket(std::string_view text);

MomentumLabel parse_momentum_label(std::string_view text);
InnerLabel parse_inner_label(std::string_view text);

}  // namespace gravfock
