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

#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "galois_cpm/errors.hpp"
#include "galois_cpm/field_ops.hpp"
#include "test_util.hpp"

namespace galois_cpm {
namespace {

using testing::subgroup;
using testing::subgroups_of;

// Oracle: every subset of (Z/n)^x containing 1 and closed under
// multiplication, by plain modular arithmetic.
std::size_t brute_force_subgroup_count(long n) {
  std::vector<long> units;
  for (long k = 1; k < n; ++k) {
    if (std::gcd(k, n) == 1) units.push_back(k);
  }
  const std::size_t m = units.size();
  std::size_t count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    if ((mask & 1U) == 0) continue;
    bool closed = true;
    for (std::size_t i = 0; i < m && closed; ++i) {
      if (((mask >> i) & 1U) == 0) continue;
      for (std::size_t j = 0; j < m && closed; ++j) {
        if (((mask >> j) & 1U) == 0) continue;
        const long prod = units[i] * units[j] % n;
        auto pos = static_cast<std::size_t>(std::find(units.begin(), units.end(), prod) - units.begin());
        closed = ((mask >> pos) & 1U) != 0;
      }
    }
    if (closed) ++count;
  }
  return count;
}

class UnitGroupLattice : public ::testing::TestWithParam<long> {};

TEST_P(UnitGroupLattice, CountMatchesBruteForce) {
  const long n = GetParam();
  EXPECT_EQ(SubgroupLattice(GaloisGroup::unit_group(n)).size(), brute_force_subgroup_count(n));
}

TEST_P(UnitGroupLattice, GaloisCorrespondence) {
  auto f = Field::cyclotomic(GetParam());
  GaloisGroup g(f);
  SubgroupLattice lattice(g);
  std::vector<FixedField> fixed;
  for (const auto& h : lattice.subgroups()) fixed.push_back(fixed_field(h));
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& h = lattice.subgroups()[i];
    EXPECT_EQ(static_cast<std::size_t>(fixed[i].min_poly.degree()) * h.order(), g.order());
    EXPECT_TRUE(is_fixed_by(fixed[i].primitive, h));
    EXPECT_EQ(min_poly(fixed[i].primitive), fixed[i].min_poly);
    for (std::size_t j = 0; j < lattice.size(); ++j) {
      const auto& k = lattice.subgroups()[j];
      EXPECT_EQ(h.is_subgroup_of(k), is_fixed_by(fixed[j].primitive, h));
      const auto& joined = lattice.join(i, j);
      EXPECT_TRUE(h.is_subgroup_of(joined) && k.is_subgroup_of(joined));
      EXPECT_EQ(lattice.meet(i, j).mask(), h.mask() & k.mask());
      for (const auto& other : lattice.subgroups()) {
        if (h.is_subgroup_of(other) && k.is_subgroup_of(other)) {
          EXPECT_TRUE(joined.is_subgroup_of(other));
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Conductors, UnitGroupLattice, ::testing::Values(3L, 5L, 7L, 8L, 9L, 12L, 15L, 16L, 21L));

TEST(Lattice, KnownShapes) {
  EXPECT_EQ(SubgroupLattice(GaloisGroup::unit_group(5)).size(), 3U);
  EXPECT_EQ(SubgroupLattice(GaloisGroup::unit_group(7)).size(), 4U);
  EXPECT_EQ(SubgroupLattice(GaloisGroup(Field::sextic_s3())).size(), 6U);
  SubgroupLattice l7(GaloisGroup::unit_group(7));
  EXPECT_EQ(l7.covers().size(), 4U);
  SubgroupLattice l5(GaloisGroup::unit_group(5));
  EXPECT_EQ(l5.covers().size(), 2U);
}

TEST(Lattice, BoundExceeded) {
  try {
    SubgroupLattice lattice(GaloisGroup::unit_group(101));
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBoundExceeded);
  }
}

TEST(FixedField, GaussianPeriodMinimalPolynomials) {
  auto f7 = Field::cyclotomic(7);
  EXPECT_EQ(fixed_field(subgroup(f7, "6")).min_poly.to_string(), "x^3 + x^2 - 2*x - 1");
  EXPECT_EQ(fixed_field(subgroup(f7, "2")).min_poly.to_string(), "x^2 + x + 2");
  auto f5 = Field::cyclotomic(5);
  EXPECT_EQ(fixed_field(subgroup(f5, "4")).min_poly.to_string(), "x^2 + x - 1");
  EXPECT_EQ(fixed_field(GaloisGroup(f5).full()).min_poly.degree(), 1);
}

TEST(Subgroups, ConstructionAndLabels) {
  auto f = Field::cyclotomic(7);
  GaloisGroup g(f);
  EXPECT_EQ(subgroup(f, "2").order(), 3U);
  EXPECT_EQ(subgroup(f, "3").order(), 6U);
  EXPECT_EQ(subgroup(f, "2").label(), "<2>");
  EXPECT_EQ(g.trivial().order(), 1U);
  EXPECT_EQ(g.element_order(g.parse("3")), 6U);
  EXPECT_THROW(Subgroup(f, 0b11), AlgebraError);  // {1, 2} is not closed
  EXPECT_THROW(g.parse("7"), AlgebraError);
  auto other = Field::cyclotomic(5);
  EXPECT_THROW(join(subgroup(f, "2"), GaloisGroup(other).full()), AlgebraError);
}

TEST(Cosets, PartitionTheGroup) {
  for (const auto& f : {Field::cyclotomic(12), Field::cyclotomic(7), Field::sextic_s3()}) {
    GaloisGroup g(f);
    for (const auto& h : subgroups_of(f)) {
      auto cosets = left_cosets(h);
      EXPECT_EQ(cosets.size() * h.order(), g.order());
      std::set<std::size_t> seen;
      for (const auto& c : cosets) {
        EXPECT_EQ(c.size(), h.order());
        for (const auto& x : c) EXPECT_TRUE(seen.insert(x.index).second);
      }
      auto t = left_transversal(h);
      for (std::size_t i = 0; i < t.reps.size(); ++i) {
        EXPECT_EQ(coset_position(t, t.reps[i]), i);
        EXPECT_EQ(t.reps[i], cosets[i].front());
      }
    }
  }
}

TEST(Transversal, ValidationAndUserOrder) {
  auto f = Field::sextic_s3();
  GaloisGroup g(f);
  Subgroup s = g.generated_by({f->s3_element(0, 1)});
  auto t = make_transversal(s, g.parse_list("t^2,id,t"));
  EXPECT_EQ(f->automorphism_label(t.reps.front()), "t^2");
  EXPECT_EQ(coset_position(t, f->s3_element(2, 1)), 0U);
  try {
    make_transversal(s, g.parse_list("id,s,t"));
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidTransversal);
  }
  EXPECT_THROW(make_transversal(s, g.parse_list("id,t")), AlgebraError);
}

TEST(Quotient, S3NormalityAndCosetAction) {
  auto f = Field::sextic_s3();
  GaloisGroup g(f);
  std::size_t non_normal = 0;
  for (const auto& h : subgroups_of(f)) {
    if (is_normal(h)) {
      EXPECT_NO_THROW(QuotientGroup{h});
    } else {
      ++non_normal;
      EXPECT_EQ(h.order(), 2U);
      try {
        QuotientGroup q(h);
        FAIL();
      } catch (const AlgebraError& e) {
        EXPECT_EQ(e.code(), ErrorCode::kNotNormal);
      }
    }
  }
  EXPECT_EQ(non_normal, 3U);
  Subgroup a3 = g.generated_by({f->s3_element(1, 0)});
  QuotientGroup q(a3);
  EXPECT_EQ(q.order(), 2U);
  FieldElement w = FieldElement::basis(f, 1);
  EXPECT_EQ(q.apply(w, 1), w * w);
  EXPECT_THROW(q.apply(FieldElement::basis(f, 2), 1), AlgebraError);
}

TEST(Quotient, RepresentativeIndependenceOnFixedElements) {
  auto f = Field::cyclotomic(12);
  Rng rng(21);
  for (const auto& h : subgroups_of(f)) {
    QuotientGroup q(h);
    for (int i = 0; i < 10; ++i) {
      FieldElement a = random_element(f, rng);
      FieldElement x = FieldElement::zero(f);
      for (const auto& y : h.members()) x += a.apply(y);
      for (std::size_t c = 0; c < q.order(); ++c) {
        for (const auto& y : h.members()) EXPECT_EQ(x.apply(f->compose(q.representatives()[c], y)), q.apply(x, c));
        for (std::size_t d = 0; d < q.order(); ++d) EXPECT_EQ(q.apply(q.apply(x, d), c), q.apply(x, q.mul(c, d)));
      }
    }
  }
}

TEST(Norms, RelativeNormTowerLaw) {
  Rng rng(22);
  for (long n : {5L, 7L, 12L}) {
    auto f = Field::cyclotomic(n);
    GaloisGroup g(f);
    for (const auto& h : subgroups_of(f)) {
      for (int i = 0; i < 10; ++i) {
        FieldElement a = random_element(f, rng);
        FieldElement rel = norm_rel(a, h);
        EXPECT_TRUE(is_fixed_by(rel, h));
        EXPECT_EQ(subfield_norm(rel, h, g.full()).as_rational(), norm_full(a));
      }
    }
  }
}

}  // namespace
}  // namespace galois_cpm
