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

#include "galois_cpm/folding.hpp"

#include <algorithm>

#include "galois_cpm/errors.hpp"

namespace galois_cpm {

namespace {

Matrix fold_over(const Matrix& m, const std::vector<GroupElement>& elems) {
  std::vector<Matrix> factors;
  factors.reserve(elems.size());
  for (const auto& g : elems) factors.push_back(apply_aut_matrix(m, g));
  return tensor_all(factors);
}

// fld over `reps` of the H-folded matrix y, relabelled into canonical order.
Matrix refold_through(const Matrix& folded_h, const Subgroup& h, const std::vector<GroupElement>& reps,
                      std::size_t rows, std::size_t cols) {
  const auto& f = h.field();
  const auto members = h.members();
  std::vector<std::size_t> target;
  for (const auto& t : reps) {
    for (const auto& x : members) target.push_back(f->compose(t, x).index);
  }
  Matrix y = fold_over(folded_h, reps);
  return relabel(y, factor_permutation(target, rows), factor_permutation(target, cols));
}

}  // namespace

FoldingData::FoldingData(const Subgroup& h) : FoldingData(h, left_transversal(h)) {}

FoldingData::FoldingData(const Subgroup& h, Transversal t) : subgroup_(h), transversal_(std::move(t)) {
  if (!(transversal_.subgroup == h)) throw AlgebraError(ErrorCode::kInvalidTransversal, "transversal of another subgroup");
  transversal_ = make_transversal(h, transversal_.reps);
  const auto& f = h.field();
  for (const auto& t : transversal_.reps) {
    for (const auto& x : h.members()) coset_major_.push_back(f->compose(t, x));
  }
}

FoldedObject::FoldedObject(std::size_t n, FoldingData f)
    : base_dim(n),
      folding(std::move(f)),
      total_dim(0),
      codec(IndexCodec::uniform(n, folding.transversal().reps.size())) {
  total_dim = codec.size();
}

Permutation factor_permutation(const std::vector<std::size_t>& target, std::size_t n) {
  const std::size_t k = target.size();
  IndexCodec codec = IndexCodec::uniform(n, k);
  Permutation p(codec.size());
  std::vector<std::size_t> y(k);
  for (std::size_t flat = 0; flat < codec.size(); ++flat) {
    auto x = codec.decode(flat);
    for (std::size_t i = 0; i < k; ++i) y[target[i]] = x[i];
    p[flat] = codec.encode(y);
  }
  return p;
}

Permutation regrouping_permutation(const FoldingData& f, std::size_t n) {
  std::vector<std::size_t> target;
  for (const auto& g : f.coset_major_order()) target.push_back(g.index);
  return factor_permutation(target, n);
}

Matrix fold_complete(const Matrix& m, const GaloisGroup& g) {
  if (!m.field()->same_as(*g.field())) throw AlgebraError(ErrorCode::kContextMismatch, "matrix and group differ in field");
  return fold_over(m, g.elements());
}

Matrix fold_transversal(const Matrix& m, const FoldingData& f) {
  const auto& h = f.subgroup();
  if (!m.field()->same_as(*h.field())) throw AlgebraError(ErrorCode::kContextMismatch, "matrix and group differ in field");
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!is_fixed_by(m.at(r, c), h)) {
        throw AlgebraError(ErrorCode::kNotEquivariant, "entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " +
                                                           m.at(r, c).to_string() + " is not fixed by " + h.label());
      }
    }
  }
  return fold_over(m, f.transversal().reps);
}

bool check_equivariance(const Matrix& m, const GaloisGroup& g, GroupElement elem) {
  Matrix folded = fold_complete(m, g);
  Matrix lhs = apply_aut_matrix(folded, elem);
  // P^{-1} F P has entries F(p(x), p(x')), i.e. relabel by p^{-1}.
  Permutation pr = inverse_permutation(coset_permutation(g, elem, m.rows()));
  Permutation pc = inverse_permutation(coset_permutation(g, elem, m.cols()));
  return lhs == relabel(folded, pr, pc);
}

FactorizationCheck check_factorization_detail(const Matrix& m, const Subgroup& h) {
  FactorizationCheck out;
  const auto& f = h.field();
  const GaloisGroup g = h.parent();
  const auto members = h.members();
  Matrix full = fold_complete(m, g);
  Matrix folded_h = fold_over(m, members);

  // H-equivariance of fold_H(M): phi_x(fold_H M) = P_x^{-1} fold_H M P_x,
  // with P_x permuting H-factors by left multiplication inside H.
  out.h_folded_equivariant = true;
  for (const auto& x : members) {
    std::vector<std::size_t> target;
    for (const auto& y : members) {
      auto pos = std::find(members.begin(), members.end(), f->compose(x, y)) - members.begin();
      target.push_back(static_cast<std::size_t>(pos));
    }
    Matrix lhs = apply_aut_matrix(folded_h, x);
    Matrix rhs = relabel(folded_h, inverse_permutation(factor_permutation(target, m.rows())),
                         inverse_permutation(factor_permutation(target, m.cols())));
    if (!(lhs == rhs)) {
      out.h_folded_equivariant = false;
      break;
    }
  }

  FoldingData data(h);
  out.transversal_form = refold_through(folded_h, h, data.transversal().reps, m.rows(), m.cols()) == full;

  if (is_normal(h)) {
    QuotientGroup q(h);
    // Canonical reps and the largest element of every coset.
    std::vector<GroupElement> alt;
    for (std::size_t c = 0; c < q.order(); ++c) {
      GroupElement best = q.representatives()[c];
      for (const auto& x : members) best = std::max(best, f->compose(q.representatives()[c], x));
      alt.push_back(best);
    }
    bool ok = true;
    for (const auto& reps : {q.representatives(), alt}) {
      ok = ok && refold_through(folded_h, h, reps, m.rows(), m.cols()) == full;
    }
    out.quotient_form = ok;
  }
  return out;
}

}  // namespace galois_cpm
