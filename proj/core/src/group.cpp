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

#include "galois_cpm/group.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "galois_cpm/errors.hpp"
#include "galois_cpm/field_ops.hpp"

namespace galois_cpm {

namespace {

constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

std::uint64_t closure(const FieldPtr& f, std::uint64_t mask) {
  const std::size_t n = f->automorphism_count();
  mask |= 1U;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (!(mask & bit(a))) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (!(mask & bit(b))) continue;
        std::size_t c = f->compose(GroupElement{a}, GroupElement{b}).index;
        if (!(mask & bit(c))) {
          mask |= bit(c);
          grew = true;
        }
      }
    }
  }
  return mask;
}

void check_same_parent(const Subgroup& h, const Subgroup& k) {
  if (!h.field()->same_as(*k.field())) throw AlgebraError(ErrorCode::kParentMismatch, "subgroups of different groups");
}

}  // namespace

// --- GaloisGroup ---------------------------------------------------------

GaloisGroup::GaloisGroup(FieldPtr field) : field_(std::move(field)) {
  if (field_->automorphism_count() > 64) {
    throw AlgebraError(ErrorCode::kBoundExceeded, "groups above 64 elements are not supported");
  }
}

GaloisGroup GaloisGroup::unit_group(long n) { return GaloisGroup(Field::cyclotomic(n)); }

std::vector<GroupElement> GaloisGroup::elements() const {
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < order(); ++i) out.push_back(GroupElement{i});
  return out;
}

std::size_t GaloisGroup::element_order(GroupElement g) const {
  std::size_t k = 1;
  GroupElement cur = g;
  while (cur.index != 0) {
    cur = mul(cur, g);
    ++k;
  }
  return k;
}

std::vector<GroupElement> GaloisGroup::parse_list(const std::string& labels) const {
  std::vector<GroupElement> out;
  std::stringstream ss(labels);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(parse(item));
  }
  return out;
}

Subgroup GaloisGroup::trivial() const { return Subgroup(field_, 1U); }

Subgroup GaloisGroup::full() const {
  return Subgroup(field_, order() == 64 ? ~std::uint64_t{0} : bit(order()) - 1);
}

Subgroup GaloisGroup::generated_by(const std::vector<GroupElement>& generators) const {
  std::uint64_t mask = 1U;
  for (const auto& g : generators) {
    if (g.index >= order()) throw AlgebraError(ErrorCode::kNotInGroup, "generator index out of range");
    mask |= bit(g.index);
  }
  return Subgroup(field_, closure(field_, mask));
}

// --- Subgroup ------------------------------------------------------------

Subgroup::Subgroup(FieldPtr field, std::uint64_t mask) : field_(std::move(field)), mask_(mask) {
  if (!(mask_ & 1U) || closure(field_, mask_) != mask_) {
    throw AlgebraError(ErrorCode::kNotInGroup, "member set is not a subgroup");
  }
}

std::size_t Subgroup::order() const { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<GroupElement> Subgroup::members() const {
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < 64; ++i) {
    if (mask_ & bit(i)) out.push_back(GroupElement{i});
  }
  return out;
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return field_->same_as(*other.field_) && (mask_ & ~other.mask_) == 0;
}

std::vector<GroupElement> Subgroup::generators() const {
  std::vector<GroupElement> gens;
  std::uint64_t span = 1U;
  for (const auto& g : members()) {
    if (span & bit(g.index)) continue;
    gens.push_back(g);
    span = closure(field_, span | bit(g.index));
  }
  return gens;
}

std::string Subgroup::label() const {
  auto gens = generators();
  std::string out = "<";
  if (gens.empty()) out += field_->automorphism_label(GroupElement{0});
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) out += ",";
    out += field_->automorphism_label(gens[i]);
  }
  return out + ">";
}

Subgroup join(const Subgroup& h, const Subgroup& k) {
  check_same_parent(h, k);
  return Subgroup(h.field(), closure(h.field(), h.mask() | k.mask()));
}

Subgroup meet(const Subgroup& h, const Subgroup& k) {
  check_same_parent(h, k);
  return Subgroup(h.field(), h.mask() & k.mask());
}

bool is_normal(const Subgroup& h) {
  const auto& f = h.field();
  for (std::size_t g = 0; g < f->automorphism_count(); ++g) {
    GroupElement ge{g};
    GroupElement gi = f->inverse(ge);
    for (const auto& x : h.members()) {
      if (!h.contains(f->compose(f->compose(ge, x), gi))) return false;
    }
  }
  return true;
}

std::vector<std::vector<GroupElement>> left_cosets(const Subgroup& h) {
  const auto& f = h.field();
  std::vector<std::vector<GroupElement>> out;
  std::uint64_t covered = 0;
  for (std::size_t g = 0; g < f->automorphism_count(); ++g) {
    if (covered & bit(g)) continue;
    std::vector<GroupElement> coset;
    for (const auto& x : h.members()) coset.push_back(f->compose(GroupElement{g}, x));
    std::sort(coset.begin(), coset.end());
    for (const auto& c : coset) covered |= bit(c.index);
    out.push_back(std::move(coset));
  }
  return out;
}

Transversal left_transversal(const Subgroup& h) {
  Transversal t{h, {}};
  for (const auto& coset : left_cosets(h)) t.reps.push_back(coset.front());
  return t;
}

Transversal make_transversal(const Subgroup& h, const std::vector<GroupElement>& reps) {
  const auto cosets = left_cosets(h);
  if (reps.size() != cosets.size()) {
    throw AlgebraError(ErrorCode::kInvalidTransversal,
                       "expected " + std::to_string(cosets.size()) + " representatives, got " + std::to_string(reps.size()));
  }
  std::vector<bool> hit(cosets.size(), false);
  for (const auto& r : reps) {
    bool found = false;
    for (std::size_t c = 0; c < cosets.size(); ++c) {
      if (std::find(cosets[c].begin(), cosets[c].end(), r) == cosets[c].end()) continue;
      if (hit[c]) throw AlgebraError(ErrorCode::kInvalidTransversal, "two representatives of one coset");
      hit[c] = found = true;
    }
    if (!found) throw AlgebraError(ErrorCode::kNotInGroup, "representative outside the group");
  }
  return Transversal{h, reps};
}

std::size_t coset_position(const Transversal& t, GroupElement g) {
  const auto& f = t.subgroup.field();
  // g in rH  <=>  r^{-1} g in H
  for (std::size_t i = 0; i < t.reps.size(); ++i) {
    if (t.subgroup.contains(f->compose(f->inverse(t.reps[i]), g))) return i;
  }
  throw AlgebraError(ErrorCode::kInvalidTransversal, "element in no coset");
}

// --- SubgroupLattice -----------------------------------------------------

SubgroupLattice::SubgroupLattice(const GaloisGroup& g, std::size_t bound) {
  if (g.order() > bound) {
    throw AlgebraError(ErrorCode::kBoundExceeded,
                       "group order " + std::to_string(g.order()) + " exceeds bound " + std::to_string(bound));
  }
  const auto& f = g.field();
  std::vector<std::uint64_t> masks;
  auto add = [&](std::uint64_t m) {
    if (std::find(masks.begin(), masks.end(), m) == masks.end()) {
      masks.push_back(m);
      return true;
    }
    return false;
  };
  std::vector<std::uint64_t> cyclic;
  for (std::size_t i = 0; i < g.order(); ++i) {
    std::uint64_t m = closure(f, bit(i));
    if (add(m)) cyclic.push_back(m);
  }
  // Every subgroup is a join of cyclic subgroups.
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (auto c : cyclic) add(closure(f, masks[i] | c));
  }
  for (auto m : masks) subgroups_.emplace_back(f, m);
  std::sort(subgroups_.begin(), subgroups_.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  const std::size_t n = subgroups_.size();
  join_.assign(n, std::vector<std::size_t>(n));
  meet_.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      join_[i][j] = index_of(galois_cpm::join(subgroups_[i], subgroups_[j]));
      meet_[i][j] = index_of(galois_cpm::meet(subgroups_[i], subgroups_[j]));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !subgroups_[i].is_subgroup_of(subgroups_[j])) continue;
      bool maximal = true;
      for (std::size_t k = 0; k < n && maximal; ++k) {
        if (k == i || k == j) continue;
        if (subgroups_[i].is_subgroup_of(subgroups_[k]) && subgroups_[k].is_subgroup_of(subgroups_[j])) maximal = false;
      }
      if (maximal) covers_.emplace_back(i, j);
    }
  }
}

std::size_t SubgroupLattice::index_of(const Subgroup& h) const {
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (subgroups_[i] == h) return i;
  }
  throw AlgebraError(ErrorCode::kParentMismatch, "subgroup not in this lattice");
}

// --- QuotientGroup -------------------------------------------------------

QuotientGroup::QuotientGroup(const Subgroup& h) : subgroup_(h) {
  if (!is_normal(h)) throw AlgebraError(ErrorCode::kNotNormal, h.label() + " is not normal");
  reps_ = left_transversal(h).reps;
  const auto& f = h.field();
  table_.assign(reps_.size(), std::vector<std::size_t>(reps_.size()));
  for (std::size_t a = 0; a < reps_.size(); ++a) {
    for (std::size_t b = 0; b < reps_.size(); ++b) table_[a][b] = coset_of(f->compose(reps_[a], reps_[b]));
  }
}

std::size_t QuotientGroup::coset_of(GroupElement g) const { return coset_position(Transversal{subgroup_, reps_}, g); }

FieldElement QuotientGroup::apply(const FieldElement& a, std::size_t coset) const {
  if (!is_fixed_by(a, subgroup_)) {
    throw AlgebraError(ErrorCode::kNotEquivariant, a.to_string() + " is not fixed by " + subgroup_.label());
  }
  return a.apply(reps_.at(coset));
}

// --- Fixed fields and norms ------------------------------------------------

bool is_fixed_by(const FieldElement& a, const Subgroup& h) {
  if (!a.field()->same_as(*h.field())) throw AlgebraError(ErrorCode::kContextMismatch, "element and subgroup differ in field");
  for (const auto& g : h.members()) {
    if (!(a.apply(g) == a)) return false;
  }
  return true;
}

FieldElement norm_rel(const FieldElement& a, const Subgroup& h) {
  if (!a.field()->same_as(*h.field())) throw AlgebraError(ErrorCode::kContextMismatch, "element and subgroup differ in field");
  return product_of_conjugates(a, h.members());
}

FieldElement subfield_norm(const FieldElement& a, const Subgroup& s, const Subgroup& h) {
  if (!s.is_subgroup_of(h)) throw AlgebraError(ErrorCode::kParentMismatch, s.label() + " is not inside " + h.label());
  if (!is_fixed_by(a, s)) throw AlgebraError(ErrorCode::kNotEquivariant, a.to_string() + " is not fixed by " + s.label());
  // Left transversal of S inside H.
  const auto& f = h.field();
  std::vector<GroupElement> reps;
  std::uint64_t covered = 0;
  for (const auto& g : h.members()) {
    if (covered & bit(g.index)) continue;
    reps.push_back(g);
    for (const auto& x : s.members()) covered |= bit(f->compose(g, x).index);
  }
  return product_of_conjugates(a, reps);
}

FixedField fixed_field(const Subgroup& h, int search_bound) {
  const auto& f = h.field();
  if (f->kind() == FieldKind::kFinite) throw AlgebraError(ErrorCode::kUnsupportedField, "fixed_field needs characteristic 0");
  const std::size_t target = f->automorphism_count() / h.order();
  auto trace = [&](const FieldElement& x) {
    FieldElement s = FieldElement::zero(f);
    for (const auto& g : h.members()) s += x.apply(g);
    return s;
  };
  auto accept = [&](const FieldElement& x) -> std::optional<FixedField> {
    auto mp = min_poly(x);
    if (static_cast<std::size_t>(mp.degree()) == target) return FixedField{x, mp};
    return std::nullopt;
  };

  if (auto r = accept(trace(FieldElement::generator(f)))) return *r;
  std::vector<FieldElement> traces;
  for (std::size_t j = 1; j < f->degree(); ++j) {
    FieldElement t = trace(FieldElement::basis(f, j));
    if (auto r = accept(t)) return *r;
    traces.push_back(t);
  }
  for (int c = 1; c <= search_bound; ++c) {
    for (int sign : {1, -1}) {
      for (std::size_t i = 0; i < traces.size(); ++i) {
        for (std::size_t j = i + 1; j < traces.size(); ++j) {
          if (auto r = accept(traces[i] + FieldElement::rational(f, Rational(sign * c)) * traces[j])) return *r;
        }
      }
    }
  }
  throw AlgebraError(ErrorCode::kSearchExhausted, "no primitive element of Fix(" + h.label() + ") within the bound");
}

}  // namespace galois_cpm
