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

#include <cstdint>
#include <string>
#include <vector>

#include "galois_cpm/field.hpp"
#include "galois_cpm/polynomial.hpp"

namespace galois_cpm {

class Subgroup;

/// The automorphism group of a field context, elements in canonical order.
class GaloisGroup {
 public:
  explicit GaloisGroup(FieldPtr field);
  /// Gal(Q(zeta_n)/Q) = (Z/nZ)^x.
  static GaloisGroup unit_group(long n);

  const FieldPtr& field() const { return field_; }
  std::size_t order() const { return field_->automorphism_count(); }
  std::vector<GroupElement> elements() const;
  GroupElement identity() const { return GroupElement{0}; }
  GroupElement mul(GroupElement g, GroupElement h) const { return field_->compose(g, h); }
  GroupElement inverse(GroupElement g) const { return field_->inverse(g); }
  std::size_t element_order(GroupElement g) const;
  const std::string& label(GroupElement g) const { return field_->automorphism_label(g); }
  GroupElement parse(const std::string& label) const { return field_->parse_element(label); }
  /// Comma-separated labels; empty input gives no elements.
  std::vector<GroupElement> parse_list(const std::string& labels) const;

  Subgroup trivial() const;
  Subgroup full() const;
  Subgroup generated_by(const std::vector<GroupElement>& generators) const;

  friend bool operator==(const GaloisGroup& a, const GaloisGroup& b) { return a.field_->same_as(*b.field_); }

 private:
  FieldPtr field_;
};

/// A subgroup stored as a membership bitmask over the canonical order.
class Subgroup {
 public:
  Subgroup(FieldPtr field, std::uint64_t mask);

  const FieldPtr& field() const { return field_; }
  GaloisGroup parent() const { return GaloisGroup(field_); }
  std::uint64_t mask() const { return mask_; }
  std::size_t order() const;
  bool contains(GroupElement g) const { return g.index < 64 && ((mask_ >> g.index) & 1U) != 0; }
  std::vector<GroupElement> members() const;
  bool is_subgroup_of(const Subgroup& other) const;
  /// Greedy generating set in canonical order (empty for the trivial group).
  std::vector<GroupElement> generators() const;
  /// "<g1,g2>" from generators(); "<id>" style label of the identity when trivial.
  std::string label() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.mask_ == b.mask_ && a.field_->same_as(*b.field_);
  }

 private:
  FieldPtr field_;
  std::uint64_t mask_;
};

/// Throws parent-mismatch when H and K live over different contexts.
Subgroup join(const Subgroup& h, const Subgroup& k);
Subgroup meet(const Subgroup& h, const Subgroup& k);

bool is_normal(const Subgroup& h);

/// Left cosets gH in order of their least element.
std::vector<std::vector<GroupElement>> left_cosets(const Subgroup& h);

/// One representative per left coset of H.
struct Transversal {
  Subgroup subgroup;
  std::vector<GroupElement> reps;
};

/// Canonical reps: for each coset in order of its least element, that element.
Transversal left_transversal(const Subgroup& h);
/// Validates user-supplied reps (one per coset) and keeps their order.
Transversal make_transversal(const Subgroup& h, const std::vector<GroupElement>& reps);
/// Position of the coset gH in the order of t.reps.
std::size_t coset_position(const Transversal& t, GroupElement g);

/// Every subgroup, sorted by order then by member list.
class SubgroupLattice {
 public:
  static constexpr std::size_t kDefaultBound = 48;
  /// Throws bound-exceeded when |G| > bound.
  explicit SubgroupLattice(const GaloisGroup& g, std::size_t bound = kDefaultBound);

  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  std::size_t size() const { return subgroups_.size(); }
  std::size_t index_of(const Subgroup& h) const;
  const Subgroup& join(std::size_t i, std::size_t j) const { return subgroups_[join_[i][j]]; }
  const Subgroup& meet(std::size_t i, std::size_t j) const { return subgroups_[meet_[i][j]]; }
  /// Pairs (i, j) with subgroup i maximal in subgroup j.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

 private:
  std::vector<Subgroup> subgroups_;
  std::vector<std::vector<std::size_t>> join_;
  std::vector<std::vector<std::size_t>> meet_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

inline SubgroupLattice all_subgroups(const GaloisGroup& g, std::size_t bound = SubgroupLattice::kDefaultBound) {
  return SubgroupLattice(g, bound);
}

/// G/H for normal H, cosets ordered as in left_transversal(H).
class QuotientGroup {
 public:
  /// Throws not-normal.
  explicit QuotientGroup(const Subgroup& h);

  const Subgroup& subgroup() const { return subgroup_; }
  std::size_t order() const { return reps_.size(); }
  const std::vector<GroupElement>& representatives() const { return reps_; }
  std::size_t coset_of(GroupElement g) const;
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  /// Action of the coset on Fix(H) through its representative. Throws
  /// not-in-equivariant-subcategory when a is not H-fixed.
  FieldElement apply(const FieldElement& a, std::size_t coset) const;

 private:
  Subgroup subgroup_;
  std::vector<GroupElement> reps_;
  std::vector<std::vector<std::size_t>> table_;
};

bool is_fixed_by(const FieldElement& a, const Subgroup& h);

/// prod_{h in H} h(a).
FieldElement norm_rel(const FieldElement& a, const Subgroup& h);

/// N_{Fix(S)/Fix(H)}(a) for S <= H and a in Fix(S): product over a left
/// transversal of S in H. Throws not-in-equivariant-subcategory if a is not
/// S-fixed.
FieldElement subfield_norm(const FieldElement& a, const Subgroup& s, const Subgroup& h);

struct FixedField {
  FieldElement primitive;
  RationalPolynomial min_poly;
};

/// Primitive element of Fix(H) for characteristic-0 contexts. Tries the
/// trace of the generator first, then traces of basis vectors and small
/// integer combinations of them with coefficients up to search_bound.
FixedField fixed_field(const Subgroup& h, int search_bound = 3);

}  // namespace galois_cpm
