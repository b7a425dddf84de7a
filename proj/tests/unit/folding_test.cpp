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

#include <gtest/gtest.h>

#include "galois_cpm/errors.hpp"
#include "galois_cpm/field_ops.hpp"
#include "galois_cpm/folding.hpp"
#include "test_util.hpp"

namespace galois_cpm {
namespace {

using testing::subgroup;
using testing::subgroups_of;

// Oracle: fld M entry at (r, c) is prod_g phi_g(M[r_g, c_g]).
Matrix fold_by_definition(const Matrix& m, const std::vector<GroupElement>& elems) {
  IndexCodec rows = IndexCodec::uniform(m.rows(), elems.size());
  IndexCodec cols = IndexCodec::uniform(m.cols(), elems.size());
  Matrix out(m.field(), rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto dr = rows.decode(r);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      auto dc = cols.decode(c);
      FieldElement v = FieldElement::one(m.field());
      for (std::size_t i = 0; i < elems.size(); ++i) v *= m.at(dr[i], dc[i]).apply(elems[i]);
      out.set(r, c, v);
    }
  }
  return out;
}

TEST(Fold, MatchesDefinition) {
  Rng rng(41);
  for (long n : {5L, 7L}) {
    auto f = Field::cyclotomic(n);
    GaloisGroup g(f);
    for (int i = 0; i < 5; ++i) {
      Matrix m = random_matrix(f, 2, n == 5 ? 2 : 1, rng);
      EXPECT_EQ(fold_complete(m, g), fold_by_definition(m, g.elements()));
    }
  }
}

TEST(Fold, ScalarIsTheFieldNorm) {
  Rng rng(42);
  for (const auto& f : {Field::cyclotomic(5), Field::cyclotomic(7), Field::cyclotomic(12), Field::sextic_s3()}) {
    GaloisGroup g(f);
    for (int i = 0; i < 50; ++i) {
      FieldElement a = random_element(f, rng);
      Matrix folded = fold_complete(Matrix::scalar(a), g);
      ASSERT_EQ(folded.rows(), 1U);
      EXPECT_EQ(folded.at(0, 0).as_rational(), norm_full(a));
    }
  }
}

TEST(Fold, Functoriality) {
  Rng rng(43);
  auto f = Field::cyclotomic(5);
  GaloisGroup g(f);
  for (int i = 0; i < 20; ++i) {
    Matrix a = random_matrix(f, 2, 2, rng), b = random_matrix(f, 2, 1, rng);
    EXPECT_EQ(fold_complete(compose(a, b), g), compose(fold_complete(a, g), fold_complete(b, g)));
  }
  EXPECT_EQ(fold_complete(Matrix::identity(f, 2), g), Matrix::identity(f, 16));
}

TEST(Fold, EquivarianceUnderEveryElement) {
  Rng rng(44);
  for (long n : {5L, 7L, 8L}) {
    auto f = Field::cyclotomic(n);
    GaloisGroup g(f);
    Matrix m = random_matrix(f, 2, 2, rng);
    for (const auto& x : g.elements()) EXPECT_TRUE(check_equivariance(m, g, x));
  }
}

TEST(Fold, TransversalRequiresFixedEntries) {
  auto f = Field::cyclotomic(5);
  Subgroup h = subgroup(f, "4");
  FieldElement z = FieldElement::generator(f);
  try {
    fold_transversal(Matrix::scalar(z), FoldingData(h));
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotEquivariant);
  }
  // z + z^4 is fixed by <4>; the two-factor fold is the norm to Q.
  FieldElement a = z + z.pow(4);
  Matrix folded = fold_transversal(Matrix::scalar(a), FoldingData(h));
  EXPECT_EQ(folded.at(0, 0), FieldElement::rational(f, Rational(-1)));
}

TEST(Fold, FactorPermutationMovesDigits) {
  // Digit i moves to position target[i].
  Permutation p = factor_permutation({2, 0, 1}, 2);
  IndexCodec c = IndexCodec::uniform(2, 3);
  EXPECT_EQ(p[c.encode({1, 0, 0})], c.encode({0, 0, 1}));
  EXPECT_EQ(p[c.encode({0, 1, 0})], c.encode({1, 0, 0}));
  EXPECT_EQ(p[c.encode({0, 0, 1})], c.encode({0, 1, 0}));
}

TEST(Factorization, EverySubgroupOfSmallGroups) {
  Rng rng(45);
  for (long n : {5L, 7L, 8L}) {
    auto f = Field::cyclotomic(n);
    for (const auto& h : subgroups_of(f)) {
      for (int i = 0; i < 3; ++i) {
        Matrix m = random_matrix(f, 2, n == 7 ? 1 : 2, rng);
        auto check = check_factorization_detail(m, h);
        EXPECT_TRUE(check.h_folded_equivariant);
        EXPECT_TRUE(check.transversal_form);
        ASSERT_TRUE(check.quotient_form.has_value());
        EXPECT_TRUE(*check.quotient_form);
      }
    }
  }
}

TEST(Factorization, NonNormalSubgroupHasNoQuotientForm) {
  auto f = Field::sextic_s3();
  Rng rng(46);
  Subgroup s = GaloisGroup(f).generated_by({f->s3_element(0, 1)});
  auto check = check_factorization_detail(random_matrix(f, 1, 2, rng), s);
  EXPECT_TRUE(check.ok());
  EXPECT_FALSE(check.quotient_form.has_value());
}

TEST(FoldingData, CosetMajorOrderCoversTheGroup) {
  auto f = Field::cyclotomic(7);
  FoldingData d(subgroup(f, "2"));
  std::vector<std::size_t> seen;
  for (const auto& g : d.coset_major_order()) seen.push_back(g.index);
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(seen, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
  FoldedObject obj(3, d);
  EXPECT_EQ(obj.total_dim, 9U);
  EXPECT_THROW(FoldingData(subgroup(f, "2"), left_transversal(subgroup(f, "6"))), AlgebraError);
}

}  // namespace
}  // namespace galois_cpm
