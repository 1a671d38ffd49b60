// Copyright 2026 The revsurf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "revsurf/expression.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <utility>

#include "revsurf/errors.hpp"

namespace revsurf {

namespace {

constexpr std::array<std::pair<std::string_view, Function>, 7> kFunctions{{
    {"sin", Function::sin},
    {"cos", Function::cos},
    {"tan", Function::tan},
    {"exp", Function::exp},
    {"ln", Function::ln},
    {"sqrt", Function::sqrt},
    {"abs", Function::abs},
}};

std::optional<Function> lookup_function(std::string_view name) {
  for (const auto& [n, fn] : kFunctions) {
    if (n == name) return fn;
  }
  return std::nullopt;
}

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Length of the decimal literal starting at text[pos], or 0 if none.
std::size_t scan_number(std::string_view text, std::size_t pos) {
  std::size_t i = pos;
  std::size_t digits = 0;
  while (i < text.size() && is_digit(text[i])) ++i, ++digits;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && is_digit(text[i])) ++i, ++digits;
  }
  if (digits == 0) return 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
    if (j < text.size() && is_digit(text[j])) {
      while (j < text.size() && is_digit(text[j])) ++j;
      i = j;
    }
  }
  return i - pos;
}

std::string token_text(const Token& t) {
  return t.kind == TokenKind::end ? std::string("end of input")
                                  : "'" + t.lexeme + "'";
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  NodePtr run() {
    if (tokens_.empty() || tokens_.back().kind != TokenKind::end) {
      throw ParseError(ParseError::Kind::syntax, 0,
                       "token stream is not terminated");
    }
    NodePtr root = expr();
    const Token& t = peek();
    if (t.kind == TokenKind::rparen) {
      throw ParseError(ParseError::Kind::unbalanced_paren, t.offset,
                       "unmatched ')'");
    }
    if (t.kind != TokenKind::end) {
      throw ParseError(ParseError::Kind::syntax, t.offset,
                       "unexpected " + token_text(t));
    }
    return root;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() {
    const Token& t = tokens_[pos_];
    if (t.kind != TokenKind::end) ++pos_;
    return t;
  }
  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    advance();
    return true;
  }

  void expect_rparen() {
    const Token& t = peek();
    if (t.kind == TokenKind::rparen) {
      advance();
      return;
    }
    if (t.kind == TokenKind::end) {
      throw ParseError(ParseError::Kind::unbalanced_paren, t.offset,
                       "missing ')'");
    }
    throw ParseError(ParseError::Kind::syntax, t.offset,
                     "expected ')' but found " + token_text(t));
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept(TokenKind::plus)) {
        lhs = Node::make_binary(BinaryOp::add, lhs, term());
      } else if (accept(TokenKind::minus)) {
        lhs = Node::make_binary(BinaryOp::sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = factor();
    for (;;) {
      if (accept(TokenKind::star)) {
        lhs = Node::make_binary(BinaryOp::mul, lhs, factor());
      } else if (accept(TokenKind::slash)) {
        lhs = Node::make_binary(BinaryOp::div, lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  NodePtr factor() {
    if (accept(TokenKind::minus)) return Node::make_negate(factor());
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (!accept(TokenKind::caret)) return base;
    const std::size_t at = peek().offset;
    NodePtr exponent = factor();
    if (Expression(exponent).depends_on_s()) {
      throw ParseError(ParseError::Kind::syntax, at,
                       "exponent must be constant (no 's')");
    }
    return Node::make_binary(BinaryOp::pow, base, exponent);
  }

  NodePtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::number: {
        advance();
        double value = 0.0;
        std::from_chars(t.lexeme.data(), t.lexeme.data() + t.lexeme.size(),
                        value);
        return Node::make_constant(value);
      }
      case TokenKind::identifier: {
        advance();
        if (t.lexeme == "pi") return Node::make_pi();
        if (t.lexeme == "s") return Node::make_variable();
        auto fn = lookup_function(t.lexeme);
        if (!fn) {
          throw ParseError(ParseError::Kind::syntax, t.offset,
                           "unknown identifier '" + t.lexeme + "'");
        }
        const Token& open = peek();
        if (!accept(TokenKind::lparen)) {
          throw ParseError(ParseError::Kind::syntax, open.offset,
                           "expected '(' after '" + t.lexeme + "'");
        }
        if (peek().kind == TokenKind::rparen) {
          throw ParseError(ParseError::Kind::arity, peek().offset,
                           "'" + t.lexeme + "' takes exactly 1 argument, got 0");
        }
        NodePtr arg = expr();
        if (peek().kind == TokenKind::comma) {
          throw ParseError(ParseError::Kind::arity, peek().offset,
                           "'" + t.lexeme + "' takes exactly 1 argument");
        }
        expect_rparen();
        return Node::make_call(*fn, arg);
      }
      case TokenKind::lparen: {
        advance();
        NodePtr inner = expr();
        expect_rparen();
        return inner;
      }
      case TokenKind::end:
        throw ParseError(ParseError::Kind::syntax, t.offset,
                         "unexpected end of input");
      default:
        throw ParseError(ParseError::Kind::syntax, t.offset,
                         "unexpected " + token_text(t));
    }
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
};

double exponent_value(const Node& n) { return Expression(n.rhs).evaluate(0.0); }

Jet3 jet_of(const Node& n, double s) {
  switch (n.kind) {
    case NodeKind::constant:
      return Jet3::constant(n.value);
    case NodeKind::variable:
      return Jet3::variable(s);
    case NodeKind::negate:
      return -jet_of(*n.lhs, s);
    case NodeKind::binary: {
      const Jet3 f = jet_of(*n.lhs, s);
      switch (n.op) {
        case BinaryOp::add:
          return f + jet_of(*n.rhs, s);
        case BinaryOp::sub:
          return f - jet_of(*n.rhs, s);
        case BinaryOp::mul:
          return f * jet_of(*n.rhs, s);
        case BinaryOp::div: {
          const Jet3 g = jet_of(*n.rhs, s);
          if (g.v == 0.0) throw DomainError(s, "division by zero");
          return f / g;
        }
        case BinaryOp::pow: {
          const double p = exponent_value(n);
          if (f.v < 0.0 && p != std::floor(p)) {
            throw DomainError(s, "negative base with non-integer exponent");
          }
          if (f.v == 0.0 && p < 0.0) {
            throw DomainError(s, "zero raised to a negative power");
          }
          return pow(f, p);
        }
      }
      break;
    }
    case NodeKind::call: {
      const Jet3 u = jet_of(*n.lhs, s);
      switch (n.fn) {
        case Function::sin:
          return sin(u);
        case Function::cos:
          return cos(u);
        case Function::tan:
          return tan(u);
        case Function::exp:
          return exp(u);
        case Function::ln:
          if (u.v <= 0.0) throw DomainError(s, "ln of non-positive value");
          return log(u);
        case Function::sqrt:
          if (u.v < 0.0) throw DomainError(s, "sqrt of negative value");
          if (u.v == 0.0) {
            if (u.d1 == 0.0 && u.d2 == 0.0 && u.d3 == 0.0) return Jet3{};
            throw DomainError(s, "sqrt is not differentiable at 0");
          }
          return sqrt(u);
        case Function::abs:
          return abs(u);
      }
      break;
    }
  }
  throw DomainError(s, "malformed expression node");
}

double value_of(const Node& n, double s) {
  switch (n.kind) {
    case NodeKind::constant:
      return n.value;
    case NodeKind::variable:
      return s;
    case NodeKind::negate:
      return -value_of(*n.lhs, s);
    case NodeKind::binary: {
      const double a = value_of(*n.lhs, s);
      const double b = value_of(*n.rhs, s);
      switch (n.op) {
        case BinaryOp::add:
          return a + b;
        case BinaryOp::sub:
          return a - b;
        case BinaryOp::mul:
          return a * b;
        case BinaryOp::div:
          if (b == 0.0) throw DomainError(s, "division by zero");
          return a / b;
        case BinaryOp::pow:
          if (a < 0.0 && b != std::floor(b)) {
            throw DomainError(s, "negative base with non-integer exponent");
          }
          if (a == 0.0 && b < 0.0) {
            throw DomainError(s, "zero raised to a negative power");
          }
          return std::pow(a, b);
      }
      break;
    }
    case NodeKind::call: {
      const double u = value_of(*n.lhs, s);
      switch (n.fn) {
        case Function::sin:
          return std::sin(u);
        case Function::cos:
          return std::cos(u);
        case Function::tan:
          return std::tan(u);
        case Function::exp:
          return std::exp(u);
        case Function::ln:
          if (u <= 0.0) throw DomainError(s, "ln of non-positive value");
          return std::log(u);
        case Function::sqrt:
          if (u < 0.0) throw DomainError(s, "sqrt of negative value");
          return std::sqrt(u);
        case Function::abs:
          return std::fabs(u);
      }
      break;
    }
  }
  throw DomainError(s, "malformed expression node");
}

bool uses_variable(const Node& n) {
  switch (n.kind) {
    case NodeKind::constant:
      return false;
    case NodeKind::variable:
      return true;
    case NodeKind::negate:
    case NodeKind::call:
      return uses_variable(*n.lhs);
    case NodeKind::binary:
      return uses_variable(*n.lhs) || uses_variable(*n.rhs);
  }
  return false;
}

char op_char(BinaryOp op) {
  switch (op) {
    case BinaryOp::add:
      return '+';
    case BinaryOp::sub:
      return '-';
    case BinaryOp::mul:
      return '*';
    case BinaryOp::div:
      return '/';
    case BinaryOp::pow:
      return '^';
  }
  return '?';
}

void render(const Node& n, std::string& out) {
  switch (n.kind) {
    case NodeKind::constant: {
      if (n.named_pi) {
        out += "pi";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", n.value);
      out += buf;
      return;
    }
    case NodeKind::variable:
      out += 's';
      return;
    case NodeKind::negate:
      out += "(-";
      render(*n.lhs, out);
      out += ')';
      return;
    case NodeKind::binary:
      out += '(';
      render(*n.lhs, out);
      out += op_char(n.op);
      render(*n.rhs, out);
      out += ')';
      return;
    case NodeKind::call:
      out += function_name(n.fn);
      out += '(';
      render(*n.lhs, out);
      out += ')';
      return;
  }
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    TokenKind single = TokenKind::end;
    switch (c) {
      case '+': single = TokenKind::plus; break;
      case '-': single = TokenKind::minus; break;
      case '*': single = TokenKind::star; break;
      case '/': single = TokenKind::slash; break;
      case '^': single = TokenKind::caret; break;
      case '(': single = TokenKind::lparen; break;
      case ')': single = TokenKind::rparen; break;
      case ',': single = TokenKind::comma; break;
      default: break;
    }
    if (single != TokenKind::end) {
      tokens.push_back({single, std::string(1, c), i});
      ++i;
      continue;
    }
    if (const std::size_t len = scan_number(text, i); len > 0) {
      std::string lexeme(text.substr(i, len));
      double value = 0.0;
      auto [ptr, ec] =
          std::from_chars(lexeme.data(), lexeme.data() + lexeme.size(), value);
      if (ec != std::errc() || ptr != lexeme.data() + lexeme.size() ||
          !std::isfinite(value)) {
        throw ParseError(ParseError::Kind::lexical, i,
                         "number literal '" + lexeme + "' is not finite");
      }
      tokens.push_back({TokenKind::number, std::move(lexeme), i});
      i += len;
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      tokens.push_back(
          {TokenKind::identifier, std::string(text.substr(i, j - i)), i});
      i = j;
      continue;
    }
    throw ParseError(ParseError::Kind::lexical, i,
                     std::string("unexpected character '") + c + "'");
  }
  tokens.push_back({TokenKind::end, "", text.size()});
  return tokens;
}

std::string_view function_name(Function fn) {
  for (const auto& [n, f] : kFunctions) {
    if (f == fn) return n;
  }
  return "?";
}

NodePtr Node::make_constant(double value) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::constant;
  n->value = value;
  return n;
}

NodePtr Node::make_pi() {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::constant;
  n->value = std::numbers::pi;
  n->named_pi = true;
  return n;
}

NodePtr Node::make_variable() {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::variable;
  return n;
}

NodePtr Node::make_negate(NodePtr child) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::negate;
  n->lhs = std::move(child);
  return n;
}

NodePtr Node::make_binary(BinaryOp op, NodePtr lhs, NodePtr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::binary;
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

NodePtr Node::make_call(Function fn, NodePtr arg) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::call;
  n->fn = fn;
  n->lhs = std::move(arg);
  return n;
}

bool same_tree(const Node& a, const Node& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NodeKind::constant:
      return a.named_pi == b.named_pi && a.value == b.value;
    case NodeKind::variable:
      return true;
    case NodeKind::negate:
      return same_tree(*a.lhs, *b.lhs);
    case NodeKind::binary:
      return a.op == b.op && same_tree(*a.lhs, *b.lhs) &&
             same_tree(*a.rhs, *b.rhs);
    case NodeKind::call:
      return a.fn == b.fn && same_tree(*a.lhs, *b.lhs);
  }
  return false;
}

Expression::Expression(NodePtr root) : root_(std::move(root)) {
  if (!root_) throw Error("expression root is null");
}

double Expression::evaluate(double s) const {
  const double v = value_of(*root_, s);
  if (!std::isfinite(v)) throw DomainError(s, "non-finite value");
  return v;
}

Jet3 Expression::eval_jet3(double s) const {
  const Jet3 j = jet_of(*root_, s);
  if (!j.finite()) throw DomainError(s, "non-finite derivative");
  return j;
}

std::string Expression::to_string() const {
  std::string out;
  render(*root_, out);
  return out;
}

bool Expression::depends_on_s() const { return uses_variable(*root_); }

Expression parse(const std::vector<Token>& tokens) {
  return Expression(Parser(tokens).run());
}

Expression parse_expression(std::string_view text) {
  return parse(tokenize(text));
}

}  // namespace revsurf
