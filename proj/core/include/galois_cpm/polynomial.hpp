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

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galois_cpm/rational.hpp"

namespace galois_cpm {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The coefficient vector never carries trailing zeros; the zero polynomial
/// has an empty coefficient vector.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(const Rational& c, std::size_t degree);
  /// x - root
  static RationalPolynomial linear_root(const Rational& root);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }

  RationalPolynomial monic() const;
  RationalPolynomial derivative() const;
  Rational evaluate(const Rational& x) const;

  RationalPolynomial operator-() const;
  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) = default;

  /// Euclidean division; throws on a zero divisor.
  std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& divisor) const;

  /// Human-readable form in x, highest degree first, e.g. "x^2 + x - 1".
  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

/// f / gcd(f, f'), made monic.
RationalPolynomial squarefree_part(const RationalPolynomial& f);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
  RationalPolynomial g, s, t;
};
ExtendedGcd extended_gcd(const RationalPolynomial& a, const RationalPolynomial& b);

/// Endpoint of a real interval; nullopt stands for -inf on the left and
/// +inf on the right.
struct RealInterval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  static RealInterval whole_line() { return {}; }
  static RealInterval positive() { return {Rational(0), std::nullopt}; }
  static RealInterval non_positive() { return {std::nullopt, Rational(0)}; }
};

/// Number of distinct real roots of f in the half-open interval (lo, hi],
/// decided exactly with a Sturm sequence. Repeated factors are removed first.
int sturm_root_count(const RationalPolynomial& f, const RealInterval& interval);

/// The Sturm chain f, f', -rem(f, f'), ... of a squarefree f.
std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& f);

/// Resultant of two polynomials via the Sylvester determinant.
Rational resultant(const RationalPolynomial& a, const RationalPolynomial& b);

/// disc(f) = (-1)^{n(n-1)/2} res(f, f') / lc(f). Degree-1 polynomials have
/// discriminant 1.
Rational discriminant(const RationalPolynomial& f);

}  // namespace galois_cpm
