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

#include "galois_cpm/cpm.hpp"
#include "galois_cpm/errors.hpp"
#include "galois_cpm/field_ops.hpp"
#include "test_util.hpp"

namespace galois_cpm {
namespace {

using testing::subgroup;
using testing::subgroups_of;

TEST(CosetConstant, Predicate) {
  auto f = Field::cyclotomic(5);  // units 1, 2, 3, 4
  Subgroup h = subgroup(f, "4");  // cosets {1,4}, {2,3}
  EXPECT_TRUE(coset_constant({0, 1, 1, 0}, h));
  EXPECT_FALSE(coset_constant({0, 1, 0, 1}, h));
  EXPECT_THROW(coset_constant({0, 1}, h), AlgebraError);
}

TEST(Decoherence, RankCountsCosetConstantTuples) {
  for (long n : {5L, 7L}) {
    auto f = Field::cyclotomic(n);
    GaloisGroup g(f);
    for (const auto& h : subgroups_of(f)) {
      for (std::size_t d : {1U, 2U, 3U}) {
        if (checked_power(d, g.order(), 1U << 20) > 1000) continue;
        DecoheredObject obj(d, h);
        EXPECT_EQ(obj.tuple_indices().size(), checked_power(d, g.order() / h.order(), 1U << 20));
        EXPECT_EQ(discard_map(d, g, h).support().size(), obj.tuple_indices().size());
      }
    }
  }
}

TEST(Decoherence, IdempotentCausalAndJoin) {
  auto f = Field::cyclotomic(7);
  GaloisGroup g(f);
  const auto subs = subgroups_of(f);
  for (const auto& h : subs) {
    Matrix dec = decohere_map(2, g, h);
    EXPECT_EQ(compose(dec, dec), dec);
    EXPECT_EQ(compose(discard_map(2, g, h).realized(), dec), discard_map(2, g, h).realized());
    for (const auto& k : subs) {
      EXPECT_EQ(compose(dec, decohere_map(2, g, k)), decohere_map(2, g, join(h, k)));
    }
  }
  EXPECT_EQ(decohere_map(2, g, g.trivial()), Matrix::identity(f, 64));
}

TEST(EnvEffect, EmptyEnvironmentIsTheUnit) {
  auto f = Field::cyclotomic(5);
  EnvEffect e(f, {});
  EXPECT_EQ(e.realized(), Matrix::scalar(FieldElement::one(f)));
  EXPECT_EQ(e.support(), std::vector<std::size_t>{0});
}

TEST(CpmMorphism, ScalarEqualsNestedNorm) {
  auto f = Field::cyclotomic(5);
  FieldElement z = FieldElement::generator(f);
  Subgroup lambda = subgroup(f, "4");
  Matrix v = Matrix::from_elements(f, 2, 1, {FieldElement::one(f) - z, FieldElement::one(f)});
  CpmMorphism b = cpm_morphism(v, 1, {EnvBlock{2, lambda}});
  // N_{Q(sqrt5)/Q}(N(1-z) + 1) with N(1-z) = (1-z)(1-z^4) = 2 - z - z^4.
  FieldElement inner = FieldElement::rational(f, Rational(3)) - z - z.pow(4);
  EXPECT_EQ(b.realized.at(0, 0), inner * inner.apply(GaloisGroup(f).parse("2")));
  EXPECT_EQ(b.realized.at(0, 0), FieldElement::rational(f, Rational(11)));
  EXPECT_EQ(b.realized.at(0, 0), nested_norm_formula({v.at(0, 0), v.at(1, 0)}, lambda));
  EXPECT_EQ(cpm_realize_by_matrices(v, 1, b.env), b.realized);
}

TEST(CpmMorphism, SupportContractionMatchesExplicitMatrices) {
  Rng rng(51);
  for (long n : {5L, 7L}) {
    auto f = Field::cyclotomic(n);
    for (const auto& lambda : subgroups_of(f)) {
      Matrix a = random_matrix(f, 4, 1, rng, SampleOptions{3});
      CpmMorphism b = cpm_morphism(a, 2, {EnvBlock{2, lambda}});
      EXPECT_EQ(b.realized, cpm_realize_by_matrices(a, 2, b.env));
    }
  }
  auto f = Field::cyclotomic(5);
  EXPECT_THROW(cpm_morphism(Matrix(f, 3, 1), 2, {EnvBlock{2, GaloisGroup(f).full()}}), AlgebraError);
}

TEST(CpmMorphism, DaggerNormalForm) {
  Rng rng(52);
  auto f = Field::cyclotomic(5);
  GroupElement conj = complex_conjugation(f);
  for (const auto& lambda : subgroups_of(f)) {
    Matrix a = random_matrix(f, 4, 2, rng, SampleOptions{3});
    CpmMorphism b = cpm_morphism(a, 2, {EnvBlock{2, lambda}});
    EXPECT_EQ(dagger_normal_form(b, conj).realized, dagger(b.realized, conj));
  }
}

TEST(Compress, RejectsNonDecoheredAndIsFunctorial) {
  Rng rng(53);
  auto f = Field::cyclotomic(5);
  GaloisGroup g(f);
  Subgroup h = subgroup(f, "4");
  DecoheredObject obj(2, h);
  Matrix m = random_matrix(f, 16, 16, rng, SampleOptions{2, true, true});
  try {
    compress_decohered(m, obj, obj);
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotDecohered);
  }
  Matrix x = compose(obj.idempotent, compose(m, obj.idempotent));
  Matrix y = compose(obj.idempotent, compose(random_matrix(f, 16, 16, rng), obj.idempotent));
  EXPECT_EQ(compress_decohered(compose(x, y), obj, obj),
            compose(compress_decohered(x, obj, obj), compress_decohered(y, obj, obj)));
  EXPECT_EQ(compress_decohered(obj.idempotent, obj, obj), Matrix::identity(f, 4));
}

TEST(Semiring, ClaimsFollowFormalReality) {
  auto f7 = Field::cyclotomic(7);
  EXPECT_EQ(SemiringClaim::totally_positive(subgroup(f7, "6")).tag(), "totally_positive");
  EXPECT_EQ(SemiringClaim::totally_positive(subgroup(f7, "2")).tag(), "whole_field");
  EXPECT_EQ(SemiringClaim::totally_positive(GaloisGroup(f7).trivial()).tag(), "whole_field");
  EXPECT_EQ(SemiringClaim::totally_positive(GaloisGroup(Field::finite(2, 4)).full()).tag(), "whole_field");

  auto f5 = Field::cyclotomic(5);
  FieldElement z = FieldElement::generator(f5);
  SemiringClaim real = SemiringClaim::totally_positive(subgroup(f5, "4"));
  EXPECT_TRUE(semiring_membership(FieldElement::rational(f5, Rational(2)) + z + z.pow(4), real));
  EXPECT_FALSE(semiring_membership(z + z.pow(4), real));  // (sqrt5 - 1)/2 has a negative conjugate
  EXPECT_FALSE(semiring_membership(z, real));             // not fixed
  EXPECT_TRUE(semiring_membership(z, SemiringClaim::whole_field(GaloisGroup(f5).trivial())));
}

TEST(SumOfNorms, WitnessesInTheCmTheory) {
  auto f = Field::cyclotomic(5);
  Subgroup full = GaloisGroup(f).full();
  for (const char* t : {"1", "2", "1/2", "5"}) {
    FieldElement target = FieldElement::rational(f, Rational::parse(t));
    auto w = sum_of_norms_search(target, full);
    ASSERT_TRUE(w.has_value()) << t;
    FieldElement sum = FieldElement::zero(f);
    for (std::size_t i = 0; i < w->terms.size(); ++i) {
      EXPECT_EQ(w->norms[i].as_rational(), norm_full(w->terms[i]));
      sum += w->norms[i];
    }
    EXPECT_EQ(sum, target);
  }
  auto empty = sum_of_norms_search(FieldElement::zero(f), full);
  ASSERT_TRUE(empty.has_value());
  EXPECT_TRUE(empty->terms.empty());
}

TEST(SumOfNorms, MinusOneNeedsTheRealSubfield) {
  auto f = Field::cyclotomic(5);
  Subgroup full = GaloisGroup(f).full();
  FieldElement minus_one = FieldElement::rational(f, Rational(-1));
  SumOfNormsOptions cm;
  cm.height_bound = 2;
  cm.term_bound = 3;
  EXPECT_FALSE(sum_of_norms_search(minus_one, full, cm).has_value());
  SumOfNormsOptions real;
  real.source = subgroup(f, "4");
  auto w = sum_of_norms_search(minus_one, full, real);
  ASSERT_TRUE(w.has_value());
  ASSERT_EQ(w->terms.size(), 1U);
  EXPECT_EQ(subfield_norm(w->terms[0], *real.source, full), minus_one);
}

TEST(Hilbert90, PhaseHasNormOne) {
  auto f = Field::cyclotomic(5);
  FieldElement z = FieldElement::generator(f);
  FieldElement theta = z + z.pow(4);
  GroupElement g = GaloisGroup(f).parse("2");
  FieldElement b = FieldElement::rational(f, Rational(2)) + FieldElement::rational(f, Rational(2)) * theta;
  FieldElement r = hilbert90_phase(b, g);
  EXPECT_EQ(r, FieldElement::rational(f, Rational(-1)) + theta);
  EXPECT_TRUE((r * r.apply(g)).is_one());
  EXPECT_THROW(hilbert90_phase(FieldElement::zero(f), g), AlgebraError);
  EXPECT_THROW(hilbert90_phase(z, g), AlgebraError);
}

}  // namespace
}  // namespace galois_cpm
