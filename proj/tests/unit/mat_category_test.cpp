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

#include <gtest/gtest.h>

#include "galois_cpm/errors.hpp"
#include "galois_cpm/matrix.hpp"
#include "galois_cpm/serialization.hpp"
#include "test_util.hpp"

namespace galois_cpm {
namespace {

// Oracle product by the textbook triple loop over FieldElement values.
Matrix naive_product(const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      FieldElement s = FieldElement::zero(a.field());
      for (std::size_t k = 0; k < a.cols(); ++k) s += a.at(i, k) * b.at(k, j);
      out.set(i, j, s);
    }
  }
  return out;
}

TEST(Matrix, CompositionMatchesNaiveProduct) {
  Rng rng(31);
  auto f = Field::cyclotomic(7);
  for (int i = 0; i < 30; ++i) {
    Matrix a = random_matrix(f, 3, 4, rng), b = random_matrix(f, 4, 2, rng);
    EXPECT_EQ(compose(a, b), naive_product(a, b));
  }
  EXPECT_THROW(compose(Matrix(f, 2, 3), Matrix(f, 2, 3)), AlgebraError);
}

TEST(Matrix, CategoryLaws) {
  Rng rng(32);
  for (const auto& f : {Field::cyclotomic(5), Field::finite(2, 4), Field::sextic_s3()}) {
    for (int i = 0; i < 20; ++i) {
      Matrix a = random_matrix(f, 2, 3, rng), b = random_matrix(f, 3, 2, rng), c = random_matrix(f, 2, 2, rng);
      EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
      EXPECT_EQ(compose(Matrix::identity(f, 2), a), a);
      EXPECT_EQ(compose(a, Matrix::identity(f, 3)), a);
    }
  }
}

TEST(Matrix, TensorInterchangeLaw) {
  Rng rng(33);
  auto f = Field::cyclotomic(5);
  for (int i = 0; i < 20; ++i) {
    Matrix a = random_matrix(f, 2, 2, rng), b = random_matrix(f, 2, 1, rng);
    Matrix c = random_matrix(f, 1, 2, rng), d = random_matrix(f, 2, 3, rng);
    EXPECT_EQ(compose(tensor(a, c), tensor(b, d)), tensor(compose(a, b), compose(c, d)));
    Matrix t = tensor(a, c);
    EXPECT_EQ(t.rows(), 2U);
    EXPECT_EQ(t.cols(), 4U);
    EXPECT_EQ(t.at(1, 3), a.at(1, 1) * c.at(0, 1));
  }
  Matrix one = Matrix::scalar(FieldElement::one(f));
  Matrix m = random_matrix(f, 2, 3, rng);
  EXPECT_EQ(tensor(one, m), m);
  EXPECT_EQ(tensor_all({m}), m);
}

TEST(Matrix, AutofunctorsAreStrictMonoidal) {
  Rng rng(34);
  auto f = Field::cyclotomic(12);
  GaloisGroup g(f);
  for (const auto& x : g.elements()) {
    for (const auto& y : g.elements()) {
      Matrix a = random_matrix(f, 2, 2, rng), b = random_matrix(f, 2, 2, rng);
      EXPECT_EQ(apply_aut_matrix(compose(a, b), x), compose(apply_aut_matrix(a, x), apply_aut_matrix(b, x)));
      EXPECT_EQ(apply_aut_matrix(tensor(a, b), x), tensor(apply_aut_matrix(a, x), apply_aut_matrix(b, x)));
      EXPECT_EQ(apply_aut_matrix(apply_aut_matrix(a, y), x), apply_aut_matrix(a, g.mul(x, y)));
    }
  }
}

TEST(Dagger, ConjugateTransposeLaws) {
  Rng rng(35);
  for (long n : {3L, 5L, 7L, 8L}) {
    auto f = Field::cyclotomic(n);
    GroupElement conj = complex_conjugation(f);
    EXPECT_EQ(f->unit_of(conj), n - 1);
    for (int i = 0; i < 10; ++i) {
      Matrix a = random_matrix(f, 2, 3, rng), b = random_matrix(f, 3, 2, rng);
      EXPECT_EQ(dagger(dagger(a, conj), conj), a);
      EXPECT_EQ(dagger(compose(a, b), conj), compose(dagger(b, conj), dagger(a, conj)));
      EXPECT_EQ(dagger(tensor(a, b), conj), tensor(dagger(a, conj), dagger(b, conj)));
      EXPECT_EQ(dagger(a, conj).at(2, 1), a.at(1, 2).apply(conj));
    }
  }
  auto f = Field::cyclotomic(7);
  EXPECT_THROW(dagger(Matrix::identity(f, 2), GaloisGroup(f).parse("2")), AlgebraError);
}

TEST(Permutations, RelabelIsConjugationByPermutationMatrices) {
  Rng rng(36);
  auto f = Field::cyclotomic(5);
  for (int i = 0; i < 20; ++i) {
    Permutation p(4), q(3);
    std::iota(p.begin(), p.end(), 0U);
    std::iota(q.begin(), q.end(), 0U);
    std::shuffle(p.begin(), p.end(), rng);
    std::shuffle(q.begin(), q.end(), rng);
    Matrix m = random_matrix(f, 4, 3, rng);
    Matrix expected = compose(compose(perm_matrix(f, p), m), perm_matrix(f, inverse_permutation(q)));
    EXPECT_EQ(relabel(m, p, q), expected);
    EXPECT_EQ(compose_permutations(p, inverse_permutation(p)), Permutation({0, 1, 2, 3}));
  }
  EXPECT_THROW(validate_permutation({0, 0, 1}), AlgebraError);
  EXPECT_THROW(relabel(Matrix(f, 2, 2), {0, 1, 2}, {0, 1}), AlgebraError);
}

TEST(Permutations, InterleaveGroupsPerFactorPairs) {
  // Block-major (x_1..x_k, y_1..y_k) to joint ((x_1,y_1), ..., (x_k,y_k)).
  const std::size_t n = 2, m = 3, k = 2;
  Permutation p = interleave_permutation(n, m, k);
  validate_permutation(p);
  IndexCodec block({n, n, m, m});
  IndexCodec joint({n * m, n * m});
  for (std::size_t flat = 0; flat < block.size(); ++flat) {
    auto d = block.decode(flat);
    EXPECT_EQ(p[flat], joint.encode({d[0] * m + d[2], d[1] * m + d[3]}));
  }
}

TEST(Permutations, CosetPermutationIsAHomomorphism) {
  for (const auto& f : {Field::cyclotomic(7), Field::sextic_s3()}) {
    GaloisGroup g(f);
    for (const auto& x : g.elements()) {
      for (const auto& y : g.elements()) {
        EXPECT_EQ(compose(coset_perm(g, x, 2), coset_perm(g, y, 2)), coset_perm(g, g.mul(x, y), 2));
      }
    }
    EXPECT_EQ(coset_perm(g, g.identity(), 2), Matrix::identity(f, checked_power(2, g.order(), 1 << 20)));
  }
}

TEST(IndexCodec, MixedRadixRoundTrip) {
  IndexCodec c({2, 3, 4});
  EXPECT_EQ(c.size(), 24U);
  EXPECT_EQ(c.encode({1, 2, 3}), 23U);
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(c.encode(c.decode(i)), i);
  EXPECT_THROW(checked_power(4, 7, 4096), AlgebraError);
  EXPECT_EQ(checked_power(4, 6, 4096), 4096U);
}

TEST(Serialization, MatrixRoundTrip) {
  Rng rng(37);
  for (const auto& f : {Field::cyclotomic(9), Field::finite(2, 4), Field::sextic_s3()}) {
    Matrix m = random_matrix(f, 3, 2, rng);
    EXPECT_EQ(matrix_from_json(matrix_to_json(m)), m);
  }
  EXPECT_THROW(matrix_from_json(R"({"rows":1,"cols":1,"field":{"kind":"cyclotomic","n":5},"entries":[]})"),
               AlgebraError);
}

}  // namespace
}  // namespace galois_cpm
