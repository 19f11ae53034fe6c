#pragma once

#include <memory>
#include <string>

namespace neutro {

enum class connective {
  not_,
  and_,
  or_weak,
  or_strong,
  implies,
  iff,
  nand_,
  nor_,
};

/// Formula AST: atoms plus the eight connectives.
struct expr;
using expr_ptr = std::shared_ptr<const expr>;

struct expr {
  enum class kind { atom, unary, binary };

  kind node;
  std::string name;   // atom
  connective op{};    // unary/binary
  expr_ptr lhs, rhs;  // unary uses lhs only

  static expr_ptr atom(std::string name);
  static expr_ptr negation(expr_ptr operand);
  static expr_ptr binary(connective op, expr_ptr lhs, expr_ptr rhs);
};

bool structurally_equal(const expr& a, const expr& b);
inline bool structurally_equal(const expr_ptr& a, const expr_ptr& b) {
  return structurally_equal(*a, *b);
}

/// Grammar, tightest first: `!`; `&`; `^`; `|` / `NAND` / `NOR` (one tier,
/// non-mixing without parentheses); `->` (right-assoc); `<->` (loosest,
/// right-assoc).  Atoms match [A-Za-z][A-Za-z0-9_]*.
expr_ptr parse_expr(const std::string& text);

/// Minimal-parentheses canonical text; parse_expr(format_expr(e)) == e.
std::string format_expr(const expr_ptr& e);

} // namespace neutro
