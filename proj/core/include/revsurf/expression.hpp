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

#pragma once

// Closed-form profile expressions in one variable `s`.
//
// Grammar (whitespace-insensitive):
//
//   expr   := term (("+"|"-") term)* ;
//   term   := factor (("*"|"/") factor)* ;
//   factor := "-" factor | power ;
//   power  := atom ("^" factor)? ;     right-assoc, exponent must not use s
//   atom   := NUMBER | "pi" | "s" | FN "(" expr ")" | "(" expr ")" ;
//   FN     := "sin"|"cos"|"tan"|"exp"|"ln"|"sqrt"|"abs" ;
//
// Precedence is ^ > unary minus > * / > + -, so "-s^2" is -(s^2) and
// "2^-1" is 2^(-1).

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "revsurf/jet.hpp"

namespace revsurf {

enum class TokenKind {
  number,
  identifier,
  plus,
  minus,
  star,
  slash,
  caret,
  lparen,
  rparen,
  comma,
  end,
};

struct Token {
  TokenKind kind;
  std::string lexeme;
  std::size_t offset;

  friend bool operator==(const Token&, const Token&) = default;
};

/// Splits `text` into tokens. The returned sequence always ends with a
/// TokenKind::end token whose offset is text.size(). Throws ParseError
/// (lexical) on characters outside the grammar.
std::vector<Token> tokenize(std::string_view text);

enum class NodeKind { constant, variable, negate, binary, call };
enum class BinaryOp { add, sub, mul, div, pow };
enum class Function { sin, cos, tan, exp, ln, sqrt, abs };

std::string_view function_name(Function fn);

struct Node;
using NodePtr = std::shared_ptr<const Node>;

/// Immutable AST node. Which fields are meaningful depends on `kind`:
/// constant uses `value` (and `named_pi` for the literal `pi`), binary uses
/// `op`, `lhs`, `rhs`, negate and call use `lhs` (call also `fn`).
struct Node {
  NodeKind kind = NodeKind::constant;
  double value = 0.0;
  bool named_pi = false;
  BinaryOp op = BinaryOp::add;
  Function fn = Function::sin;
  NodePtr lhs;
  NodePtr rhs;

  static NodePtr make_constant(double value);
  static NodePtr make_pi();
  static NodePtr make_variable();
  static NodePtr make_negate(NodePtr child);
  static NodePtr make_binary(BinaryOp op, NodePtr lhs, NodePtr rhs);
  static NodePtr make_call(Function fn, NodePtr arg);
};

/// Structural equality (constants compare by exact value).
bool same_tree(const Node& a, const Node& b);

/// A parsed expression. Cheap to copy; the tree is shared and immutable.
class Expression {
 public:
  explicit Expression(NodePtr root);

  const Node& root() const { return *root_; }
  const NodePtr& root_ptr() const { return root_; }

  /// Plain double evaluation. Independent of the jet path.
  double evaluate(double s) const;

  /// Value and first three derivatives with respect to s, propagated
  /// algebraically. Throws DomainError if s is outside the real domain.
  Jet3 eval_jet3(double s) const;

  /// Fully parenthesized rendering that parses back to an identical tree.
  std::string to_string() const;

  bool depends_on_s() const;

  friend bool operator==(const Expression& a, const Expression& b) {
    return same_tree(*a.root_, *b.root_);
  }

 private:
  NodePtr root_;
};

/// Parses a token stream produced by tokenize().
Expression parse(const std::vector<Token>& tokens);

/// tokenize() followed by parse().
Expression parse_expression(std::string_view text);

}  // namespace revsurf
