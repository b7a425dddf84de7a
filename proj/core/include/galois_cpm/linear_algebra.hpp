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
#include <vector>

#include "galois_cpm/rational.hpp"

namespace galois_cpm {

/// Small dense matrix over Q used for coordinate-level linear algebra
/// (multiplication maps, dependency searches). Not a morphism of Mat(K);
/// see matrix.hpp for that.
class DenseRationalMatrix {
 public:
  DenseRationalMatrix() = default;
  DenseRationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const DenseRationalMatrix&, const DenseRationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational determinant(DenseRationalMatrix m);

/// Solves m x = rhs for square invertible m; nullopt when singular.
std::optional<std::vector<Rational>> solve(DenseRationalMatrix m, std::vector<Rational> rhs);

/// Determinant over GF(p) of a matrix with entries already reduced mod p.
long determinant_mod(std::vector<std::vector<long>> m, long p);

/// Modular exponentiation / inverse helpers for residues mod a prime.
long pow_mod(long base, unsigned long exponent, long p);
long inverse_mod(long a, long p);

}  // namespace galois_cpm
