// Copyright 2026 The galois-cpm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "galois_cpm_cli/expression.hpp"

#include <cctype>
#include <string>

#include "galois_cpm/errors.hpp"
#include "galois_cpm/field_ops.hpp"

namespace galois_cpm::cli {

namespace {

class Parser {
 public:
  Parser(std::string_view text, FieldPtr field) : text_(text), field_(std::move(field)) {}

  FieldElement parse() {
    FieldElement v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  // expr := term (('+'|'-') term)*
  FieldElement expr() {
    FieldElement v = term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        v += term();
      } else if (c == '-') {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  // term := unary (('*'|'/')? unary)*
  FieldElement term() {
    FieldElement v = unary();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        v *= unary();
      } else if (c == '/') {
        ++pos_;
        v /= unary();
      } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c))) {
        v *= unary();
      } else {
        return v;
      }
    }
  }

  FieldElement unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  FieldElement power() {
    FieldElement base = primary();
    if (peek() != '^') return base;
    ++pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent expected");
    long e = std::stol(std::string(text_.substr(start, pos_ - start)));
    return galois_cpm::power(base, negative ? -e : e);
  }

  FieldElement primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      FieldElement v = expr();
      if (peek() != ')') fail("')' expected");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return FieldElement::rational(field_, Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      return variable(c);
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  FieldElement variable(char name) {
    if (field_->kind() == FieldKind::kSexticS3) {
      if (name == 'a') return FieldElement::basis(field_, 2);
      if (name == 'w') return FieldElement::basis(field_, 1);
      fail("unknown variable '" + std::string(1, name) + "' (use a, w)");
    }
    if (name == 'z') return FieldElement::generator(field_);
    fail("unknown variable '" + std::string(1, name) + "' (use z)");
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw AlgebraError(ErrorCode::kParse, what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  FieldPtr field_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElement parse_expression(std::string_view text, const FieldPtr& field) { return Parser(text, field).parse(); }

}  // namespace galois_cpm::cli
