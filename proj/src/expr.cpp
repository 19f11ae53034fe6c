#include "neutro/expr.hpp"

#include <cctype>
#include <vector>

#include "neutro/errors.hpp"

namespace neutro {

expr_ptr expr::atom(std::string name) {
  auto e = std::make_shared<expr>();
  e->node = kind::atom;
  e->name = std::move(name);
  return e;
}

expr_ptr expr::negation(expr_ptr operand) {
  auto e = std::make_shared<expr>();
  e->node = kind::unary;
  e->op = connective::not_;
  e->lhs = std::move(operand);
  return e;
}

expr_ptr expr::binary(connective op, expr_ptr lhs, expr_ptr rhs) {
  auto e = std::make_shared<expr>();
  e->node = kind::binary;
  e->op = op;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

bool structurally_equal(const expr& a, const expr& b) {
  if (a.node != b.node)
    return false;
  switch (a.node) {
  case expr::kind::atom:
    return a.name == b.name;
  case expr::kind::unary:
    return structurally_equal(*a.lhs, *b.lhs);
  case expr::kind::binary:
    return a.op == b.op && structurally_equal(*a.lhs, *b.lhs) &&
           structurally_equal(*a.rhs, *b.rhs);
  }
  return false;
}

namespace {

enum class tok {
  end,
  ident,
  bang,
  amp,
  caret,
  pipe,
  nand,
  nor,
  arrow,
  darrow,
  lparen,
  rparen,
};

struct token {
  tok type;
  std::string text;
  int column; // 1-based
};

std::vector<token> lex(const std::string& text) {
  std::vector<token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_'))
        ++j;
      const std::string word = text.substr(i, j - i);
      if (word == "NAND")
        out.push_back({tok::nand, word, col});
      else if (word == "NOR")
        out.push_back({tok::nor, word, col});
      else
        out.push_back({tok::ident, word, col});
      i = j;
      continue;
    }
    switch (c) {
    case '!': out.push_back({tok::bang, "!", col}); ++i; break;
    case '&': out.push_back({tok::amp, "&", col}); ++i; break;
    case '^': out.push_back({tok::caret, "^", col}); ++i; break;
    case '|': out.push_back({tok::pipe, "|", col}); ++i; break;
    case '(': out.push_back({tok::lparen, "(", col}); ++i; break;
    case ')': out.push_back({tok::rparen, ")", col}); ++i; break;
    case '-':
      if (i + 1 < text.size() && text[i + 1] == '>') {
        out.push_back({tok::arrow, "->", col});
        i += 2;
        break;
      }
      throw parse_error("unknown token '-'", 1, col);
    case '<':
      if (i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '>') {
        out.push_back({tok::darrow, "<->", col});
        i += 3;
        break;
      }
      throw parse_error("unknown token '<'", 1, col);
    default:
      throw parse_error(std::string("unknown token '") + c + "'", 1, col);
    }
  }
  out.push_back({tok::end, "", static_cast<int>(text.size()) + 1});
  return out;
}

class parser {
public:
  explicit parser(const std::string& text) : tokens_(lex(text)) {}

  expr_ptr run() {
    expr_ptr e = iff_level();
    if (peek().type != tok::end)
      throw parse_error("unexpected '" + peek().text + "'", 1, peek().column);
    return e;
  }

private:
  const token& peek() const { return tokens_[pos_]; }
  token take() { return tokens_[pos_++]; }

  // A missing operand at end of input is reported at the operator that
  // demanded it.
  expr_ptr operand_after(const token& op_tok,
                         expr_ptr (parser::*rule)()) {
    if (peek().type == tok::end)
      throw parse_error("missing operand after '" + op_tok.text + "'", 1,
                        op_tok.column);
    return (this->*rule)();
  }

  expr_ptr iff_level() {
    expr_ptr lhs = implies_level();
    if (peek().type == tok::darrow) {
      const token op = take();
      return expr::binary(connective::iff, std::move(lhs),
                          operand_after(op, &parser::iff_level));
    }
    return lhs;
  }

  expr_ptr implies_level() {
    expr_ptr lhs = or_level();
    if (peek().type == tok::arrow) {
      const token op = take();
      return expr::binary(connective::implies, std::move(lhs),
                          operand_after(op, &parser::implies_level));
    }
    return lhs;
  }

  expr_ptr or_level() {
    expr_ptr lhs = xor_level();
    tok tier_op = tok::end;
    while (peek().type == tok::pipe || peek().type == tok::nand ||
           peek().type == tok::nor) {
      const token op = take();
      if (tier_op == tok::end)
        tier_op = op.type;
      else if (tier_op != op.type)
        throw parse_error("cannot mix '" + op.text +
                              "' with the preceding operator; parenthesize",
                          1, op.column);
      const connective c = op.type == tok::pipe  ? connective::or_weak
                           : op.type == tok::nand ? connective::nand_
                                                  : connective::nor_;
      lhs = expr::binary(c, std::move(lhs),
                         operand_after(op, &parser::xor_level));
    }
    return lhs;
  }

  expr_ptr xor_level() {
    expr_ptr lhs = and_level();
    while (peek().type == tok::caret) {
      const token op = take();
      lhs = expr::binary(connective::or_strong, std::move(lhs),
                         operand_after(op, &parser::and_level));
    }
    return lhs;
  }

  expr_ptr and_level() {
    expr_ptr lhs = unary_level();
    while (peek().type == tok::amp) {
      const token op = take();
      lhs = expr::binary(connective::and_, std::move(lhs),
                         operand_after(op, &parser::unary_level));
    }
    return lhs;
  }

  expr_ptr unary_level() {
    if (peek().type == tok::bang) {
      const token op = take();
      return expr::negation(operand_after(op, &parser::unary_level));
    }
    return primary();
  }

  expr_ptr primary() {
    const token t = take();
    switch (t.type) {
    case tok::ident:
      return expr::atom(t.text);
    case tok::lparen: {
      expr_ptr e = iff_level();
      if (peek().type != tok::rparen)
        throw parse_error("unbalanced parentheses: expected ')'", 1,
                          peek().type == tok::end ? t.column : peek().column);
      take();
      return e;
    }
    case tok::end:
      throw parse_error("unexpected end of input", 1, t.column);
    default:
      throw parse_error("unexpected '" + t.text + "'", 1, t.column);
    }
  }

  std::vector<token> tokens_;
  std::size_t pos_ = 0;
};

int precedence(const expr& e) {
  if (e.node == expr::kind::atom)
    return 7;
  if (e.node == expr::kind::unary)
    return 6;
  switch (e.op) {
  case connective::and_: return 5;
  case connective::or_strong: return 4;
  case connective::or_weak:
  case connective::nand_:
  case connective::nor_: return 3;
  case connective::implies: return 2;
  case connective::iff: return 1;
  default: return 0;
  }
}

const char* op_text(connective c) {
  switch (c) {
  case connective::and_: return " & ";
  case connective::or_weak: return " | ";
  case connective::or_strong: return " ^ ";
  case connective::implies: return " -> ";
  case connective::iff: return " <-> ";
  case connective::nand_: return " NAND ";
  case connective::nor_: return " NOR ";
  default: return "";
  }
}

bool right_assoc(connective c) {
  return c == connective::implies || c == connective::iff;
}

void format_into(const expr& e, std::string& out);

void format_child(const expr& parent, const expr& child, bool assoc_side,
                  std::string& out) {
  const int pp = precedence(parent), cp = precedence(child);
  bool parens = cp < pp;
  if (cp == pp && !parens) {
    if (!assoc_side)
      parens = true;
    // the |/NAND/NOR tier is non-mixing: a same-tier child with a
    // different operator must be parenthesized even on the assoc side
    else if (parent.node == expr::kind::binary &&
             child.node == expr::kind::binary && parent.op != child.op)
      parens = true;
  }
  if (parens)
    out += '(';
  format_into(child, out);
  if (parens)
    out += ')';
}

void format_into(const expr& e, std::string& out) {
  switch (e.node) {
  case expr::kind::atom:
    out += e.name;
    return;
  case expr::kind::unary:
    out += '!';
    if (precedence(*e.lhs) < precedence(e)) {
      out += '(';
      format_into(*e.lhs, out);
      out += ')';
    } else {
      format_into(*e.lhs, out);
    }
    return;
  case expr::kind::binary: {
    const bool ra = right_assoc(e.op);
    format_child(e, *e.lhs, !ra, out);
    out += op_text(e.op);
    format_child(e, *e.rhs, ra, out);
    return;
  }
  }
}

} // namespace

expr_ptr parse_expr(const std::string& text) { return parser(text).run(); }

std::string format_expr(const expr_ptr& e) {
  std::string out;
  format_into(*e, out);
  return out;
}

} // namespace neutro
