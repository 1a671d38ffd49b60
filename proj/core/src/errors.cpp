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

#include "revsurf/errors.hpp"

#include <sstream>

namespace revsurf {

namespace {

std::string kind_label(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::lexical:
      return "lexical error";
    case ParseError::Kind::syntax:
      return "syntax error";
    case ParseError::Kind::unbalanced_paren:
      return "unbalanced parenthesis";
    case ParseError::Kind::arity:
      return "arity error";
  }
  return "parse error";
}

std::string with_point(double s, const std::string& message) {
  std::ostringstream os;
  os.precision(17);
  os << message << " at s = " << s;
  return os.str();
}

std::string not_embeddable_message(double s, double a_prime, double lo,
                                   double hi) {
  std::ostringstream os;
  os.precision(10);
  os << "not embeddable: 1 - a'(s)^2 < 0 on [" << lo << ", " << hi
     << "]; |a'| = " << (a_prime < 0 ? -a_prime : a_prime) << " at s = " << s;
  return os.str();
}

}  // namespace

ParseError::ParseError(Kind kind, std::size_t offset, const std::string& message)
    : Error(kind_label(kind) + " at offset " + std::to_string(offset) + ": " +
            message),
      kind_(kind),
      offset_(offset),
      detail_(message) {}

DomainError::DomainError(double s, const std::string& message)
    : Error(with_point(s, message)), s_(s) {}

NotEmbeddableError::NotEmbeddableError(double witness_s, double a_prime,
                                       double lo, double hi)
    : Error(not_embeddable_message(witness_s, a_prime, lo, hi)),
      witness_s_(witness_s),
      a_prime_(a_prime),
      lo_(lo),
      hi_(hi) {}

}  // namespace revsurf
