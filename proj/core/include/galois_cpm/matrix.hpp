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

#include <cstddef>
#include <vector>

#include "galois_cpm/field.hpp"
#include "galois_cpm/group.hpp"

namespace galois_cpm {

/// Dense row-major matrix over a field context; a morphism cols -> rows of Mat(K).
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldPtr& field, std::size_t n);
  /// Row-major element list; every element must live in `field`.
  static Matrix from_elements(const FieldPtr& field, std::size_t rows, std::size_t cols,
                              const std::vector<FieldElement>& entries);
  static Matrix scalar(const FieldElement& x);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement at(std::size_t r, std::size_t c) const;
  const Coords& coords(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const FieldElement& x);
  void set_coords(std::size_t r, std::size_t c, Coords x) { entries_[r * cols_ + c] = std::move(x); }
  bool entry_is_zero(std::size_t r, std::size_t c) const { return field_->is_zero(coords(r, c)); }

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Coords> entries_;
};

/// f . g; throws dimension-mismatch unless f.cols == g.rows.
Matrix compose(const Matrix& f, const Matrix& g);
/// Kronecker product, first factor most significant.
Matrix tensor(const Matrix& f, const Matrix& g);
Matrix tensor_all(const std::vector<Matrix>& factors);
Matrix transpose(const Matrix& m);
Matrix apply_aut_matrix(const Matrix& m, GroupElement g);
/// Transpose of the conjugate. conj must be an involution; on cyclotomic
/// contexts it must be zeta -> zeta^{-1}. Throws not-involution otherwise.
Matrix dagger(const Matrix& m, GroupElement conj);
/// zeta -> zeta^{-1} on cyclotomic contexts.
GroupElement complex_conjugation(const FieldPtr& field);

/// Mixed-radix codec for tensor multi-indices, first factor most significant.
class IndexCodec {
 public:
  explicit IndexCodec(std::vector<std::size_t> dims);
  static IndexCodec uniform(std::size_t dim, std::size_t factors) {
    return IndexCodec(std::vector<std::size_t>(factors, dim));
  }

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t size() const { return size_; }
  std::size_t encode(const std::vector<std::size_t>& digits) const;
  std::vector<std::size_t> decode(std::size_t flat) const;

 private:
  std::vector<std::size_t> dims_;
  std::size_t size_;
};

/// A bijection on {0..d-1}; p[i] is the image of i.
using Permutation = std::vector<std::size_t>;

/// Throws invalid-permutation when p is not a bijection.
void validate_permutation(const Permutation& p);
Permutation inverse_permutation(const Permutation& p);
/// (p o q)(i) = p(q(i)).
Permutation compose_permutations(const Permutation& p, const Permutation& q);

/// 0/1 matrix with a 1 at (p(i), i).
Matrix perm_matrix(const FieldPtr& field, const Permutation& p);

/// Equals perm_matrix(row_perm) . m . perm_matrix(col_perm)^{-1}, computed as
/// out(row_perm(i), col_perm(j)) = m(i, j).
Matrix relabel(const Matrix& m, const Permutation& row_perm, const Permutation& col_perm);

/// Sends the multi-index ((a1_t)_t, (a2_t)_t, ...) over k factors per block
/// to ((a1_t, a2_t, ...))_t.
Permutation interleave_permutation(const std::vector<std::size_t>& dims, std::size_t k);
inline Permutation interleave_permutation(std::size_t n, std::size_t m, std::size_t k) {
  return interleave_permutation(std::vector<std::size_t>{n, m}, k);
}
Matrix interleave_perm(const FieldPtr& field, std::size_t n, std::size_t m, std::size_t k);

/// On n^{|G|} indices: the factor at position t moves to position g t.
Permutation coset_permutation(const GaloisGroup& g, GroupElement elem, std::size_t n);
Matrix coset_perm(const GaloisGroup& g, GroupElement elem, std::size_t n);

/// Integer power with overflow check against a cap; throws bound-exceeded.
std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t cap);

}  // namespace galois_cpm
