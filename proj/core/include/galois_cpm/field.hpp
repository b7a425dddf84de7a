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

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "galois_cpm/linear_algebra.hpp"
#include "galois_cpm/polynomial.hpp"
#include "galois_cpm/rational.hpp"

namespace galois_cpm {

enum class FieldKind { kCyclotomic, kFinite, kSexticS3 };

/// Value identity of a field context. Two contexts with equal specs are the
/// same field with the same basis and the same automorphism order.
struct FieldSpec {
  FieldKind kind = FieldKind::kCyclotomic;
  long conductor = 0;  // cyclotomic only
  long prime = 0;      // finite only
  int degree_over_prime = 0;  // finite only

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// An automorphism of a field context, identified by its position in the
/// context's canonical automorphism order. Index 0 is always the identity.
struct GroupElement {
  std::size_t index = 0;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Coordinates over the context basis with a shared positive denominator:
/// value_i = num[i] / den. Canonical: gcd(den, num...) = 1. Finite-field
/// coordinates are residues in [0, p) with den = 1.
struct Coords {
  std::vector<Integer> num;
  Integer den = 1;

  friend bool operator==(const Coords&, const Coords&) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A concrete field: Q(zeta_n) in the power basis mod Phi_n, GF(p^m) in the
/// power basis mod the lexicographically least irreducible, or the splitting
/// field of x^3 - 2 with basis alpha^i omega^j. Immutable after construction.
class Field : public std::enable_shared_from_this<Field> {
 public:
  /// Q(zeta_n); throws invalid-conductor for n < 2.
  static FieldPtr cyclotomic(long n);
  /// GF(p^m); throws invalid-prime / invalid-degree.
  static FieldPtr finite(long p, int m);
  /// Q(alpha, omega) with alpha^3 = 2 and omega^2 = -1 - omega.
  static FieldPtr sextic_s3();
  static FieldPtr from_spec(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  FieldKind kind() const { return spec_.kind; }
  bool same_as(const Field& other) const { return this == &other || spec_ == other.spec_; }

  /// Dimension of the field over its prime field.
  std::size_t degree() const { return degree_; }
  /// 0 for the number fields, p for GF(p^m).
  long characteristic() const { return spec_.kind == FieldKind::kFinite ? spec_.prime : 0; }

  /// Phi_n for cyclotomic contexts, the modulus (lifted to Q) for finite ones.
  const RationalPolynomial& defining_polynomial() const { return defining_; }
  /// Residue coefficients of the finite-field modulus, lowest degree first.
  const std::vector<long>& modulus() const { return modulus_; }

  /// Name of the power-basis generator used in expressions ("z" or "a","w").
  std::string description() const;
  std::string basis_label(std::size_t i) const;

  // --- Automorphisms, in canonical order --------------------------------
  std::size_t automorphism_count() const { return aut_labels_.size(); }
  const std::string& automorphism_label(GroupElement g) const;
  /// phi_{g h} = phi_g o phi_h.
  GroupElement compose(GroupElement g, GroupElement h) const;
  GroupElement inverse(GroupElement g) const;
  /// The unit k with zeta -> zeta^k (cyclotomic only).
  long unit_of(GroupElement g) const;
  /// The element acting as zeta -> zeta^k; throws not-in-group.
  GroupElement element_for_unit(long k) const;
  /// Frobenius power t -> t^{p^j} (finite only).
  GroupElement frobenius_power(long j) const;
  /// tau^a sigma^b (sextic only).
  GroupElement s3_element(int tau_exp, int sigma_exp) const;
  /// Parses a label such as "2", "F^1", "t^2s" back into an element.
  GroupElement parse_element(const std::string& label) const;

  // --- Coordinate kernels ------------------------------------------------
  Coords zero() const;
  Coords one() const;
  Coords from_rational(const Rational& q) const;
  Coords basis_vector(std::size_t i) const;
  void normalize(Coords& c) const;
  bool is_zero(const Coords& c) const;
  Coords add(const Coords& a, const Coords& b) const;
  Coords sub(const Coords& a, const Coords& b) const;
  Coords neg(const Coords& a) const;
  Coords mul(const Coords& a, const Coords& b) const;
  /// Throws division-by-zero for a = 0.
  Coords inv(const Coords& a) const;
  Coords apply(const Coords& a, GroupElement g) const;
  Rational coordinate(const Coords& a, std::size_t i) const;
  Coords from_rationals(const std::vector<Rational>& values) const;

  /// Matrix of x -> a x in the context basis (residues as integers in GF(p)).
  DenseRationalMatrix multiplication_matrix(const Coords& a) const;

 private:
  struct Term {
    std::size_t index;
    Integer coefficient;
  };
  using SparseVector = std::vector<Term>;

  Field() = default;
  void reduce_mod_prime(Coords& c) const;
  void build_group_tables();
  Coords dense_from_sparse(const SparseVector& v) const;
  Coords inv_by_euclid(const Coords& a) const;
  Coords inv_by_solve(const Coords& a) const;
  Coords inv_finite(const Coords& a) const;

  FieldSpec spec_;
  std::size_t degree_ = 0;
  RationalPolynomial defining_;
  std::vector<long> modulus_;

  // Multiplication: raw product slot of (basis r, basis s) and the reduction
  // of every raw slot back to the basis.
  std::vector<std::size_t> raw_index_;
  std::size_t raw_size_ = 0;
  std::vector<SparseVector> reduce_;

  // Automorphisms: aut_images_[g][i] = image of basis vector i.
  std::vector<std::string> aut_labels_;
  std::vector<std::vector<SparseVector>> aut_images_;
  std::vector<std::vector<std::size_t>> aut_table_;
  std::vector<std::size_t> aut_inverse_;
  std::vector<long> units_;  // cyclotomic: unit for each element
};

/// An exact element of a field context.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, Coords coords);

  static FieldElement zero(const FieldPtr& f) { return {f, f->zero()}; }
  static FieldElement one(const FieldPtr& f) { return {f, f->one()}; }
  static FieldElement rational(const FieldPtr& f, const Rational& q) { return {f, f->from_rational(q)}; }
  static FieldElement basis(const FieldPtr& f, std::size_t i) { return {f, f->basis_vector(i)}; }
  static FieldElement from_rationals(const FieldPtr& f, const std::vector<Rational>& values) {
    return {f, f->from_rationals(values)};
  }
  /// zeta for cyclotomic, the residue class of x for finite fields.
  static FieldElement generator(const FieldPtr& f);

  const FieldPtr& field() const { return field_; }
  const Coords& coords() const { return coords_; }
  Rational coordinate(std::size_t i) const { return field_->coordinate(coords_, i); }
  std::vector<Rational> rational_coordinates() const;

  bool is_zero() const { return field_->is_zero(coords_); }
  bool is_one() const { return *this == one(field_); }
  /// True when the value lies in the prime field (Q or GF(p)).
  bool is_rational() const;
  /// The prime-field value; throws when !is_rational().
  Rational as_rational() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  FieldElement inverse() const;
  FieldElement pow(unsigned long exponent) const;
  FieldElement apply(GroupElement g) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  /// Total order: lexicographic on rational coordinates. Only meaningful
  /// between elements of one context.
  friend bool operator<(const FieldElement& a, const FieldElement& b);

  /// Sum of rational multiples of basis monomials, e.g. "1/2 + 3*z^2".
  std::string to_string() const;

 private:
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  Coords coords_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

/// field_arith as a single entry point.
enum class ArithOp { kAdd, kSub, kMul, kDiv };
FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op);

/// Phi_n by exact division of x^n - 1 by Phi_d for every proper divisor d.
RationalPolynomial cyclotomic_polynomial(long n);

bool is_prime(long n);

/// Lexicographically least monic irreducible of degree m over GF(p)
/// (coefficients compared from the highest non-leading degree down), found
/// by trial division by every monic polynomial of degree 1..m/2.
std::vector<long> least_monic_irreducible(long p, int m);

}  // namespace galois_cpm
