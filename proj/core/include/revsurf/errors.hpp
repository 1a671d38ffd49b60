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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace revsurf {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lexical, syntax, or arity error in a profile expression. `offset` is the
/// byte position in the source text.
class ParseError : public Error {
 public:
  enum class Kind { lexical, syntax, unbalanced_paren, arity };

  ParseError(Kind kind, std::size_t offset, const std::string& message);

  Kind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }
  /// Message without the offset prefix.
  const std::string& detail() const { return detail_; }

 private:
  Kind kind_;
  std::size_t offset_;
  std::string detail_;
};

/// Expression evaluated outside its real domain (ln of non-positive value,
/// division by zero, non-finite result).
class DomainError : public Error {
 public:
  DomainError(double s, const std::string& message);
  double at() const { return s_; }

 private:
  double s_;
};

/// Adaptive quadrature exhausted its evaluation budget.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// The radicand 1 - a'^2 of the height integral is genuinely negative, so
/// the height function would be complex valued.
class NotEmbeddableError : public Error {
 public:
  NotEmbeddableError(double witness_s, double a_prime, double lo, double hi);

  double witness_s() const { return witness_s_; }
  double witness_a_prime() const { return a_prime_; }
  double interval_lo() const { return lo_; }
  double interval_hi() const { return hi_; }

 private:
  double witness_s_;
  double a_prime_;
  double lo_;
  double hi_;
};

/// Two criteria that must agree did not. Always a numerical bug.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace revsurf
