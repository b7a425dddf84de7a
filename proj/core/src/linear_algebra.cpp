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

#include "galois_cpm/linear_algebra.hpp"

#include <utility>

#include "galois_cpm/errors.hpp"

namespace galois_cpm {

namespace {
__extension__ using Wide = __int128;
}  // namespace

Rational determinant(DenseRationalMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw AlgebraError(ErrorCode::kDimensionMismatch, "determinant of a non-square matrix");
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      Rational f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

std::optional<std::vector<Rational>> solve(DenseRationalMatrix m, std::vector<Rational> rhs) {
  const std::size_t n = m.rows();
  if (n != m.cols() || rhs.size() != n) {
    throw AlgebraError(ErrorCode::kDimensionMismatch, "solve expects a square system");
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      std::swap(rhs[pivot], rhs[col]);
    }
    Rational inv = m(col, col).inverse();
    for (std::size_t c = col; c < n; ++c) m(col, c) *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

long pow_mod(long base, unsigned long exponent, long p) {
  long result = 1 % p;
  long b = ((base % p) + p) % p;
  while (exponent > 0) {
    if (exponent & 1UL) result = static_cast<long>((static_cast<Wide>(result) * b) % p);
    b = static_cast<long>((static_cast<Wide>(b) * b) % p);
    exponent >>= 1;
  }
  return result;
}

long inverse_mod(long a, long p) {
  a = ((a % p) + p) % p;
  if (a == 0) throw AlgebraError(ErrorCode::kDivisionByZero, "inverse of 0 mod p");
  return pow_mod(a, static_cast<unsigned long>(p - 2), p);
}

long determinant_mod(std::vector<std::vector<long>> m, long p) {
  const std::size_t n = m.size();
  long det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] % p == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = (p - det) % p;
    }
    det = det * m[col][col] % p;
    long inv = inverse_mod(m[col][col], p);
    for (std::size_t r = col + 1; r < n; ++r) {
      long f = m[r][col] * inv % p;
      if (f == 0) continue;
      for (std::size_t c = col; c < n; ++c) m[r][c] = ((m[r][c] - f * m[col][c]) % p + p) % p;
    }
  }
  return det;
}

}  // namespace galois_cpm
