#pragma once

// Plain-text expression language for q-series.
//
//   expr     := term (("+" | "-") term)*
//   term     := unary (("*" | "/") unary)*
//   unary    := "-" unary | power
//   power    := atom ("^" exponent)?
//   exponent := int | "-" int | identifier | "(" expr ")"
//   atom     := int | "i" | "w" | "q" | identifier | call | "(" expr ")"
//   call     := identifier "(" args ")"      (arguments separated by "," or ";")
//   sum      := "sum" "(" identifier (">=" ["-"] int)? ";" expr ")"
//
// Rationals are quotients of integer literals. `inf` is an ordinary
// identifier, meaningful as a pochhammer count.

#include <gmpxx.h>

#include <cctype>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qmock/error.hpp"

namespace qmock {

enum class NodeKind { number, imag_unit, cube_root, q, var, add, sub, mul, div, neg, pow, call, sum };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  NodeKind kind = NodeKind::number;
  mpz_class number;               // number
  std::string name;               // var, call, sum index
  std::optional<long> lower;      // sum lower bound
  std::vector<NodePtr> args;      // operands / call arguments / sum body
};

namespace ast {

inline NodePtr make(NodeKind k) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  return n;
}

inline NodePtr number(const mpz_class& v) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::number;
  n->number = v;
  return n;
}

inline NodePtr number(long v) { return number(mpz_class(v)); }
inline NodePtr imag_unit() { return make(NodeKind::imag_unit); }
inline NodePtr cube_root() { return make(NodeKind::cube_root); }
inline NodePtr q() { return make(NodeKind::q); }

inline NodePtr var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::var;
  n->name = std::move(name);
  return n;
}

inline NodePtr binary(NodeKind k, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->args = {std::move(a), std::move(b)};
  return n;
}

inline NodePtr add(NodePtr a, NodePtr b) { return binary(NodeKind::add, std::move(a), std::move(b)); }
inline NodePtr sub(NodePtr a, NodePtr b) { return binary(NodeKind::sub, std::move(a), std::move(b)); }
inline NodePtr mul(NodePtr a, NodePtr b) { return binary(NodeKind::mul, std::move(a), std::move(b)); }
inline NodePtr div(NodePtr a, NodePtr b) { return binary(NodeKind::div, std::move(a), std::move(b)); }
inline NodePtr pow(NodePtr a, NodePtr b) { return binary(NodeKind::pow, std::move(a), std::move(b)); }

inline NodePtr neg(NodePtr a) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::neg;
  n->args = {std::move(a)};
  return n;
}

inline NodePtr call(std::string name, std::vector<NodePtr> args) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::call;
  n->name = std::move(name);
  n->args = std::move(args);
  return n;
}

inline NodePtr sum(std::string index, std::optional<long> lower, NodePtr body) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::sum;
  n->name = std::move(index);
  n->lower = lower;
  n->args = {std::move(body)};
  return n;
}

}  // namespace ast

inline bool structurally_equal(const NodePtr& a, const NodePtr& b) {
  if (a->kind != b->kind || a->name != b->name || a->lower != b->lower || a->args.size() != b->args.size())
    return false;
  if (a->kind == NodeKind::number && a->number != b->number) return false;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!structurally_equal(a->args[i], b->args[i])) return false;
  return true;
}

// ---------------------------------------------------------------- parser

class Parser {
 public:
  explicit Parser(std::string text) : src_(std::move(text)) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ < src_.size()) error({"operator", "end of input"});
    return e;
  }

 private:
  [[noreturn]] void error(const std::set<std::string>& expected) {
    skip_ws();
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream os;
    os << "line " << line << ", column " << col << ": found ";
    if (pos_ >= src_.size())
      os << "end of input";
    else
      os << "'" << src_[pos_] << "'";
    os << "; expected one of {";
    bool first = true;
    for (const auto& e : expected) {
      os << (first ? "" : ", ") << e;
      first = false;
    }
    os << "}";
    fail(ErrorKind::parse_error, os.str());
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error({std::string("'") + c + "'"});
  }

  bool at_digit() {
    skip_ws();
    return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
  }

  bool at_ident() {
    skip_ws();
    return pos_ < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_');
  }

  mpz_class integer() {
    if (!at_digit()) error({"integer"});
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return mpz_class(src_.substr(start, pos_ - start));
  }

  std::string identifier() {
    if (!at_ident()) error({"identifier"});
    std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  NodePtr expr() {
    NodePtr lhs = term();
    while (true) {
      if (accept('+'))
        lhs = ast::add(lhs, term());
      else if (accept('-'))
        lhs = ast::sub(lhs, term());
      else
        return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (true) {
      if (accept('*'))
        lhs = ast::mul(lhs, unary());
      else if (accept('/'))
        lhs = ast::div(lhs, unary());
      else
        return lhs;
    }
  }

  NodePtr unary() {
    if (accept('-')) return ast::neg(unary());
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (!accept('^')) return base;
    return ast::pow(base, exponent());
  }

  NodePtr exponent() {
    if (accept('-')) {
      if (!at_digit()) error({"integer"});
      return ast::neg(ast::number(integer()));
    }
    if (at_digit()) return ast::number(integer());
    if (accept('(')) {
      NodePtr e = expr();
      expect(')');
      return e;
    }
    if (at_ident()) return ast::var(identifier());
    error({"integer", "'-'", "identifier", "'('"});
  }

  NodePtr atom() {
    if (at_digit()) return ast::number(integer());
    if (accept('(')) {
      NodePtr e = expr();
      expect(')');
      return e;
    }
    if (!at_ident()) error({"integer", "identifier", "'('", "'-'"});
    std::string name = identifier();
    if (peek('(')) {
      ++pos_;
      if (name == "sum") return sum_rest();
      std::vector<NodePtr> args;
      if (!accept(')')) {
        args.push_back(expr());
        while (accept(',') || accept(';')) args.push_back(expr());
        expect(')');
      }
      return ast::call(name, std::move(args));
    }
    if (name == "q") return ast::q();
    if (name == "i") return ast::imag_unit();
    if (name == "w") return ast::cube_root();
    return ast::var(name);
  }

  NodePtr sum_rest() {
    std::string index = identifier();
    std::optional<long> lower;
    if (accept('>')) {
      expect('=');
      bool negative = accept('-');
      mpz_class v = integer();
      if (!v.fits_slong_p()) error({"small integer"});
      lower = negative ? -v.get_si() : v.get_si();
    }
    if (!accept(';') && !accept(',')) error({"';'", "'>='"});
    NodePtr body = expr();
    expect(')');
    return ast::sum(index, lower, body);
  }

  std::string src_;
  std::size_t pos_ = 0;
};

inline NodePtr parse_expression(const std::string& text) { return Parser(text).parse(); }

// ------------------------------------------------------------- formatter

namespace detail {

inline int precedence(const NodePtr& n) {
  switch (n->kind) {
    case NodeKind::add:
    case NodeKind::sub: return 1;
    case NodeKind::mul:
    case NodeKind::div: return 2;
    case NodeKind::neg: return 3;
    case NodeKind::pow: return 4;
    default: return 5;
  }
}

inline void format_into(std::ostringstream& os, const NodePtr& n);

inline void format_at_least(std::ostringstream& os, const NodePtr& n, int min_prec) {
  if (precedence(n) < min_prec) {
    os << "(";
    format_into(os, n);
    os << ")";
  } else {
    format_into(os, n);
  }
}

inline void format_exponent(std::ostringstream& os, const NodePtr& e) {
  if (e->kind == NodeKind::number) {
    os << e->number.get_str();
  } else if (e->kind == NodeKind::neg && e->args[0]->kind == NodeKind::number) {
    os << "-" << e->args[0]->number.get_str();
  } else if (e->kind == NodeKind::var) {
    os << e->name;
  } else {
    os << "(";
    format_into(os, e);
    os << ")";
  }
}

inline void format_into(std::ostringstream& os, const NodePtr& n) {
  switch (n->kind) {
    case NodeKind::number: os << n->number.get_str(); return;
    case NodeKind::imag_unit: os << "i"; return;
    case NodeKind::cube_root: os << "w"; return;
    case NodeKind::q: os << "q"; return;
    case NodeKind::var: os << n->name; return;
    case NodeKind::add:
    case NodeKind::sub:
      format_at_least(os, n->args[0], 1);
      os << (n->kind == NodeKind::add ? " + " : " - ");
      format_at_least(os, n->args[1], 2);
      return;
    case NodeKind::mul:
    case NodeKind::div:
      format_at_least(os, n->args[0], 2);
      os << (n->kind == NodeKind::mul ? "*" : "/");
      format_at_least(os, n->args[1], 3);
      return;
    case NodeKind::neg:
      os << "-";
      format_at_least(os, n->args[0], 3);
      return;
    case NodeKind::pow:
      format_at_least(os, n->args[0], 5);
      os << "^";
      format_exponent(os, n->args[1]);
      return;
    case NodeKind::call: {
      os << n->name << "(";
      const bool theta = n->name == "j" && n->args.size() == 2;
      for (std::size_t i = 0; i < n->args.size(); ++i) {
        if (i > 0) os << (theta ? "; " : ", ");
        format_into(os, n->args[i]);
      }
      os << ")";
      return;
    }
    case NodeKind::sum:
      os << "sum(" << n->name;
      if (n->lower) os << ">=" << *n->lower;
      os << "; ";
      format_into(os, n->args[0]);
      os << ")";
      return;
  }
}

}  // namespace detail

// Canonical, parseable rendering.
inline std::string format_expression(const NodePtr& n) {
  std::ostringstream os;
  detail::format_into(os, n);
  return os.str();
}

}  // namespace qmock
