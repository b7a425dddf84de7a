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

#include "galois_cpm/rational.hpp"

#include <cctype>
#include <ostream>

#include "galois_cpm/errors.hpp"

namespace galois_cpm {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidConductor: return "invalid-conductor";
    case ErrorCode::kInvalidPrime: return "invalid-prime";
    case ErrorCode::kInvalidDegree: return "invalid-degree";
    case ErrorCode::kContextMismatch: return "context-mismatch";
    case ErrorCode::kDivisionByZero: return "division-by-zero";
    case ErrorCode::kNotInGroup: return "not-in-group";
    case ErrorCode::kParentMismatch: return "parent-mismatch";
    case ErrorCode::kBoundExceeded: return "bound-exceeded";
    case ErrorCode::kNotNormal: return "not-normal";
    case ErrorCode::kSearchExhausted: return "search-exhausted";
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kNotInvolution: return "not-involution";
    case ErrorCode::kNotEquivariant: return "not-in-equivariant-subcategory";
    case ErrorCode::kNotDecohered: return "not-decohered";
    case ErrorCode::kInvalidTransversal: return "invalid-transversal";
    case ErrorCode::kInvalidPermutation: return "invalid-permutation";
    case ErrorCode::kUnsupportedField: return "unsupported-field";
    case ErrorCode::kZeroPolynomial: return "zero-polynomial";
    case ErrorCode::kParse: return "parse-error";
  }
  return "unknown";
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw AlgebraError(ErrorCode::kDivisionByZero, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start) {
    throw AlgebraError(ErrorCode::kParse, "bad rational '" + std::string(whole) + "'");
  }
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw AlgebraError(ErrorCode::kParse, "bad rational '" + std::string(whole) + "'");
    }
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Integer(digits, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  return Rational(parse_integer(s.substr(0, slash), text),
                  parse_integer(s.substr(slash + 1), text));
}

Integer Rational::height() const {
  Integer p = ::abs(q_.get_num());
  return p > q_.get_den() ? p : Integer(q_.get_den());
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw AlgebraError(ErrorCode::kDivisionByZero, "rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(unsigned long exponent) const {
  Rational r;
  mpz_pow_ui(r.q_.get_num_mpz_t(), q_.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.q_.get_den_mpz_t(), q_.get_den_mpz_t(), exponent);
  return r;
}

Rational Rational::inverse() const { return Rational(1) / *this; }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::to_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace galois_cpm
