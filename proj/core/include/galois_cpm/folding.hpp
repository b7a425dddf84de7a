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

#include "galois_cpm/group.hpp"
#include "galois_cpm/matrix.hpp"

namespace galois_cpm {

/// (G, H, eta, T) with eta the identity family.
class FoldingData {
 public:
  /// Canonical transversal of H.
  explicit FoldingData(const Subgroup& h);
  FoldingData(const Subgroup& h, Transversal t);

  GaloisGroup group() const { return subgroup_.parent(); }
  const Subgroup& subgroup() const { return subgroup_; }
  const Transversal& transversal() const { return transversal_; }
  /// Group elements t h in coset-major order (t over reps, h over H).
  const std::vector<GroupElement>& coset_major_order() const { return coset_major_; }

 private:
  Subgroup subgroup_;
  Transversal transversal_;
  std::vector<GroupElement> coset_major_;
};

/// fld A for an object of dimension base_dim: base_dim^{|reps|} flat indices.
struct FoldedObject {
  std::size_t base_dim;
  FoldingData folding;
  std::size_t total_dim;
  IndexCodec codec;

  FoldedObject(std::size_t n, FoldingData f);
};

/// Factor permutation on n^{k} indices: the digit at position i moves to
/// position target[i].
Permutation factor_permutation(const std::vector<std::size_t>& target, std::size_t n);

/// (x)_{t h} in coset-major order -> canonical order, on n^{|G|} indices.
Permutation regrouping_permutation(const FoldingData& f, std::size_t n);

/// Tensor over the canonical group order of phi_g(M).
Matrix fold_complete(const Matrix& m, const GaloisGroup& g);

/// Tensor over the transversal of phi_t(M). Entries must be H-fixed;
/// throws not-in-equivariant-subcategory otherwise.
Matrix fold_transversal(const Matrix& m, const FoldingData& f);

/// phi_g(fld M) == P_g^{-1} fld M P_g with P_g = coset_perm(g).
bool check_equivariance(const Matrix& m, const GaloisGroup& g, GroupElement elem);

struct FactorizationCheck {
  bool h_folded_equivariant = false;   // fold_H(M) is H-equivariant
  bool transversal_form = false;       // fold_G = P . fold_T(fold_H) . P^{-1}
  std::optional<bool> quotient_form;   // normal H only, every rep choice
  bool ok() const { return h_folded_equivariant && transversal_form && quotient_form.value_or(true); }
};

FactorizationCheck check_factorization_detail(const Matrix& m, const Subgroup& h);
inline bool check_factorization(const Matrix& m, const GaloisGroup&, const Subgroup& h) {
  return check_factorization_detail(m, h).ok();
}

}  // namespace galois_cpm
