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

#include "galois_cpm/field_ops.hpp"

#include "galois_cpm/errors.hpp"

namespace galois_cpm {

namespace {

// Solves sum_j x_j cols[j] = target for linearly independent cols;
// nullopt when target is outside their span.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<std::vector<Rational>>& cols,
                                                   const std::vector<Rational>& target) {
  const std::size_t rows = target.size();
  const std::size_t k = cols.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(k + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < k; ++c) m[r][c] = cols[c][r];
    m[r][k] = target[r];
  }
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < k && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[pivot_row]);
    Rational inv = m[pivot_row][c].inverse();
    for (auto& v : m[pivot_row]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m[r][c].is_zero()) continue;
      Rational f = m[r][c];
      for (std::size_t cc = c; cc <= k; ++cc) m[r][cc] -= f * m[pivot_row][cc];
    }
    pivot_cols.push_back(c);
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < rows; ++r) {
    if (!m[r][k].is_zero()) return std::nullopt;
  }
  std::vector<Rational> x(k);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = m[i][k];
  return x;
}

}  // namespace

DenseRationalMatrix mult_matrix(const FieldElement& a) { return a.field()->multiplication_matrix(a.coords()); }

Rational norm_full(const FieldElement& a) {
  DenseRationalMatrix m = mult_matrix(a);
  if (a.field()->kind() != FieldKind::kFinite) return determinant(m);
  const long p = a.field()->characteristic();
  std::vector<std::vector<long>> residues(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) residues[r][c] = m(r, c).numerator().get_si();
  }
  return Rational(determinant_mod(residues, p));
}

FieldElement product_of_conjugates(const FieldElement& a, const std::vector<GroupElement>& elements) {
  FieldElement out = FieldElement::one(a.field());
  for (const auto& g : elements) out *= a.apply(g);
  return out;
}

RationalPolynomial min_poly(const FieldElement& a) {
  if (a.field()->kind() == FieldKind::kFinite) {
    throw AlgebraError(ErrorCode::kUnsupportedField, "min_poly needs a characteristic-0 field");
  }
  std::vector<std::vector<Rational>> powers;
  FieldElement cur = FieldElement::one(a.field());
  for (std::size_t k = 0; k <= a.field()->degree(); ++k) {
    auto coords = cur.rational_coordinates();
    if (auto x = solve_in_span(powers, coords)) {
      // a^k = sum x_j a^j  =>  x^k - sum x_j x^j
      std::vector<Rational> coeffs(k + 1);
      for (std::size_t j = 0; j < k; ++j) coeffs[j] = -(*x)[j];
      coeffs[k] = Rational(1);
      return RationalPolynomial(std::move(coeffs));
    }
    powers.push_back(std::move(coords));
    cur *= a;
  }
  throw AlgebraError(ErrorCode::kSearchExhausted, "no dependency among powers");
}

bool is_totally_positive(const FieldElement& a) {
  if (a.is_zero()) return true;
  return sturm_root_count(min_poly(a), RealInterval::non_positive()) == 0;
}

bool generates_formally_real_field(const FieldElement& a) {
  return sturm_root_count(min_poly(a), RealInterval::whole_line()) > 0;
}

FieldElement power(const FieldElement& a, long exponent) {
  if (exponent >= 0) return a.pow(static_cast<unsigned long>(exponent));
  return a.inverse().pow(static_cast<unsigned long>(-exponent));
}

}  // namespace galois_cpm
