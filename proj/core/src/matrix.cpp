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

#include "galois_cpm/matrix.hpp"

#include <limits>

#include "galois_cpm/errors.hpp"

namespace galois_cpm {

namespace {

void check_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a->same_as(*b)) throw AlgebraError(ErrorCode::kContextMismatch, "matrices over different fields");
}

std::string dims(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, field_->zero()) {}

Matrix Matrix::identity(const FieldPtr& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = field->one();
  return m;
}

Matrix Matrix::from_elements(const FieldPtr& field, std::size_t rows, std::size_t cols,
                             const std::vector<FieldElement>& entries) {
  if (entries.size() != rows * cols) {
    throw AlgebraError(ErrorCode::kDimensionMismatch, "entry count does not match dimensions");
  }
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    check_field(field, entries[i].field());
    m.entries_[i] = entries[i].coords();
  }
  return m;
}

Matrix Matrix::scalar(const FieldElement& x) { return from_elements(x.field(), 1, 1, {x}); }

FieldElement Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw AlgebraError(ErrorCode::kDimensionMismatch, "index out of range");
  return FieldElement(field_, entries_[r * cols_ + c]);
}

void Matrix::set(std::size_t r, std::size_t c, const FieldElement& x) {
  if (r >= rows_ || c >= cols_) throw AlgebraError(ErrorCode::kDimensionMismatch, "index out of range");
  check_field(field_, x.field());
  entries_[r * cols_ + c] = x.coords();
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_->same_as(*b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_field(a.field_, b.field_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw AlgebraError(ErrorCode::kDimensionMismatch, dims(a) + " + " + dims(b));
  }
  Matrix out(a.field_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = a.field_->add(a.entries_[i], b.entries_[i]);
  return out;
}

Matrix compose(const Matrix& f, const Matrix& g) {
  check_field(f.field(), g.field());
  if (f.cols() != g.rows()) throw AlgebraError(ErrorCode::kDimensionMismatch, dims(f) + " . " + dims(g));
  const auto& fld = f.field();
  Matrix out(fld, f.rows(), g.cols());
  for (std::size_t r = 0; r < f.rows(); ++r) {
    for (std::size_t k = 0; k < f.cols(); ++k) {
      if (f.entry_is_zero(r, k)) continue;
      const Coords& a = f.coords(r, k);
      for (std::size_t c = 0; c < g.cols(); ++c) {
        if (g.entry_is_zero(k, c)) continue;
        out.set_coords(r, c, fld->add(out.coords(r, c), fld->mul(a, g.coords(k, c))));
      }
    }
  }
  return out;
}

Matrix tensor(const Matrix& f, const Matrix& g) {
  check_field(f.field(), g.field());
  const auto& fld = f.field();
  Matrix out(fld, f.rows() * g.rows(), f.cols() * g.cols());
  for (std::size_t r1 = 0; r1 < f.rows(); ++r1) {
    for (std::size_t c1 = 0; c1 < f.cols(); ++c1) {
      if (f.entry_is_zero(r1, c1)) continue;
      const Coords& a = f.coords(r1, c1);
      for (std::size_t r2 = 0; r2 < g.rows(); ++r2) {
        for (std::size_t c2 = 0; c2 < g.cols(); ++c2) {
          if (g.entry_is_zero(r2, c2)) continue;
          out.set_coords(r1 * g.rows() + r2, c1 * g.cols() + c2, fld->mul(a, g.coords(r2, c2)));
        }
      }
    }
  }
  return out;
}

Matrix tensor_all(const std::vector<Matrix>& factors) {
  if (factors.empty()) throw AlgebraError(ErrorCode::kDimensionMismatch, "empty tensor product");
  Matrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = tensor(out, factors[i]);
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.set_coords(c, r, m.coords(r, c));
  }
  return out;
}

Matrix apply_aut_matrix(const Matrix& m, GroupElement g) {
  const auto& fld = m.field();
  Matrix out(fld, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m.entry_is_zero(r, c)) out.set_coords(r, c, fld->apply(m.coords(r, c), g));
    }
  }
  return out;
}

GroupElement complex_conjugation(const FieldPtr& field) {
  if (field->kind() != FieldKind::kCyclotomic) {
    throw AlgebraError(ErrorCode::kUnsupportedField, "complex conjugation is defined here for cyclotomic fields");
  }
  return field->element_for_unit(field->spec().conductor - 1);
}

Matrix dagger(const Matrix& m, GroupElement conj) {
  const auto& fld = m.field();
  if (conj.index >= fld->automorphism_count()) throw AlgebraError(ErrorCode::kNotInGroup, "conjugation not in the group");
  if (fld->compose(conj, conj).index != 0) {
    throw AlgebraError(ErrorCode::kNotInvolution, fld->automorphism_label(conj) + " is not an involution");
  }
  if (fld->kind() == FieldKind::kCyclotomic && fld->unit_of(conj) != fld->spec().conductor - 1) {
    throw AlgebraError(ErrorCode::kNotInvolution, "dagger needs zeta -> zeta^-1, got unit " + fld->automorphism_label(conj));
  }
  return transpose(apply_aut_matrix(m, conj));
}

// --- Index bookkeeping -----------------------------------------------------

IndexCodec::IndexCodec(std::vector<std::size_t> dims) : dims_(std::move(dims)), size_(1) {
  for (auto d : dims_) {
    if (d == 0) throw AlgebraError(ErrorCode::kDimensionMismatch, "zero factor dimension");
    size_ *= d;
  }
}

std::size_t IndexCodec::encode(const std::vector<std::size_t>& digits) const {
  if (digits.size() != dims_.size()) throw AlgebraError(ErrorCode::kDimensionMismatch, "digit count mismatch");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (digits[i] >= dims_[i]) throw AlgebraError(ErrorCode::kDimensionMismatch, "digit out of range");
    flat = flat * dims_[i] + digits[i];
  }
  return flat;
}

std::vector<std::size_t> IndexCodec::decode(std::size_t flat) const {
  if (flat >= size_) throw AlgebraError(ErrorCode::kDimensionMismatch, "flat index out of range");
  std::vector<std::size_t> digits(dims_.size());
  for (std::size_t i = dims_.size(); i-- > 0;) {
    digits[i] = flat % dims_[i];
    flat /= dims_[i];
  }
  return digits;
}

void validate_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) throw AlgebraError(ErrorCode::kInvalidPermutation, "not a bijection");
    seen[v] = true;
  }
}

Permutation inverse_permutation(const Permutation& p) {
  validate_permutation(p);
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

Permutation compose_permutations(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw AlgebraError(ErrorCode::kDimensionMismatch, "permutation sizes differ");
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[q[i]];
  return out;
}

Matrix perm_matrix(const FieldPtr& field, const Permutation& p) {
  validate_permutation(p);
  Matrix m(field, p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m.set_coords(p[i], i, field->one());
  return m;
}

Matrix relabel(const Matrix& m, const Permutation& row_perm, const Permutation& col_perm) {
  if (row_perm.size() != m.rows() || col_perm.size() != m.cols()) {
    throw AlgebraError(ErrorCode::kDimensionMismatch, "permutation size does not match " + dims(m));
  }
  validate_permutation(row_perm);
  validate_permutation(col_perm);
  Matrix out(m.field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m.entry_is_zero(r, c)) out.set_coords(row_perm[r], col_perm[c], m.coords(r, c));
    }
  }
  return out;
}

Permutation interleave_permutation(const std::vector<std::size_t>& dims, std::size_t k) {
  std::vector<std::size_t> in_dims;
  for (auto d : dims) in_dims.insert(in_dims.end(), k, d);
  std::vector<std::size_t> out_dims;
  for (std::size_t t = 0; t < k; ++t) out_dims.insert(out_dims.end(), dims.begin(), dims.end());
  IndexCodec in(in_dims), out(out_dims);
  Permutation p(in.size());
  const std::size_t blocks = dims.size();
  for (std::size_t flat = 0; flat < in.size(); ++flat) {
    auto digits = in.decode(flat);
    std::vector<std::size_t> moved(digits.size());
    for (std::size_t b = 0; b < blocks; ++b) {
      for (std::size_t t = 0; t < k; ++t) moved[t * blocks + b] = digits[b * k + t];
    }
    p[flat] = out.encode(moved);
  }
  return p;
}

Matrix interleave_perm(const FieldPtr& field, std::size_t n, std::size_t m, std::size_t k) {
  return perm_matrix(field, interleave_permutation(n, m, k));
}

Permutation coset_permutation(const GaloisGroup& g, GroupElement elem, std::size_t n) {
  const std::size_t order = g.order();
  IndexCodec codec = IndexCodec::uniform(n, order);
  std::vector<std::size_t> target(order);
  for (std::size_t t = 0; t < order; ++t) target[t] = g.mul(elem, GroupElement{t}).index;
  Permutation p(codec.size());
  std::vector<std::size_t> y(order);
  for (std::size_t flat = 0; flat < codec.size(); ++flat) {
    auto x = codec.decode(flat);
    for (std::size_t t = 0; t < order; ++t) y[target[t]] = x[t];
    p[flat] = codec.encode(y);
  }
  return p;
}

Matrix coset_perm(const GaloisGroup& g, GroupElement elem, std::size_t n) {
  return perm_matrix(g.field(), coset_permutation(g, elem, n));
}

std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && out > cap / base) {
      throw AlgebraError(ErrorCode::kBoundExceeded, std::to_string(base) + "^" + std::to_string(exponent) +
                                                        " exceeds the dimension cap " + std::to_string(cap));
    }
    out *= base;
  }
  if (out > cap) throw AlgebraError(ErrorCode::kBoundExceeded, "dimension exceeds the cap " + std::to_string(cap));
  return out;
}

}  // namespace galois_cpm
