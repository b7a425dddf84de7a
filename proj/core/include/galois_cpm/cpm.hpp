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

#include "galois_cpm/folding.hpp"
#include "galois_cpm/group.hpp"
#include "galois_cpm/matrix.hpp"

namespace galois_cpm {

/// True iff the multi-index over the canonical group order is constant on
/// every left coset gH.
bool coset_constant(const std::vector<std::size_t>& digits, const Subgroup& h);

struct EnvBlock {
  std::size_t dim;
  Subgroup subgroup;
};

/// A discarding effect on fld E_1 (x) ... (x) fld E_r (blocks side by side,
/// each block n_i^{|G|} indices in canonical order). No blocks gives the
/// unit effect [1].
class EnvEffect {
 public:
  EnvEffect(const FieldPtr& field, std::vector<EnvBlock> blocks);

  const std::vector<EnvBlock>& blocks() const { return blocks_; }
  /// 1 x prod n_i^{|G|} row of 0/1 entries.
  const Matrix& realized() const { return realized_; }
  /// Flat block-major indices where the effect is 1, ascending.
  const std::vector<std::size_t>& support() const { return support_; }
  /// The same effect read on fld(E_1 (x) ... (x) E_r) through the
  /// interleaving wiring.
  Matrix realized_on_joint() const;

 private:
  std::vector<EnvBlock> blocks_;
  Matrix realized_;
  std::vector<std::size_t> support_;
};

/// The H-discarding effect on fld_G n.
EnvEffect discard_map(std::size_t n, const GaloisGroup& g, const Subgroup& h);

/// Diagonal projector onto the coset-constant indices of fld_G n.
Matrix decohere_map(std::size_t n, const GaloisGroup& g, const Subgroup& h);

/// b = (id_{fld B} (x) xi) . W . fld(a) for a : A -> B (x) E_1 (x) ... (x) E_r,
/// W the de-interleaving wiring.
struct CpmMorphism {
  Matrix pure_part;
  std::size_t out_dim;
  EnvEffect env;
  Matrix realized;
};

/// Realized by contracting only over the support of the effect. Throws
/// dimension-mismatch unless a.rows == out_dim * prod env dims.
CpmMorphism cpm_morphism(const Matrix& a, std::size_t out_dim, const std::vector<EnvBlock>& env);

/// The same morphism assembled from explicit matrices: tensor, wiring
/// permutation and composition. Used to cross-check cpm_morphism.
Matrix cpm_realize_by_matrices(const Matrix& a, std::size_t out_dim, const EnvEffect& env);

/// Normal form of b^dagger: a' : B -> A (x) E with a'[(x,e), b] = conj(a[(b,e), x])
/// under the same effect.
CpmMorphism dagger_normal_form(const CpmMorphism& b, GroupElement conj);

/// prod_{t in T} phi_t(sum_i norm_rel(v_i, L)) over the canonical transversal of L.
FieldElement nested_norm_formula(const std::vector<FieldElement>& v, const Subgroup& lambda);

/// (fld_G n, dec_H).
struct DecoheredObject {
  std::size_t base_dim;
  Subgroup subgroup;
  Transversal transversal;
  Matrix idempotent;

  DecoheredObject(std::size_t n, const Subgroup& h);
  DecoheredObject(std::size_t n, const Transversal& t);
  /// Full-size flat indices of the coset-constant tuples, tuples over the
  /// transversal enumerated in mixed radix with the first rep most significant.
  std::vector<std::size_t> tuple_indices() const;
};

/// Rows and columns of M at coset-constant tuples. Throws not-decohered
/// unless dec_dst . M . dec_src = M.
Matrix compress_decohered(const Matrix& m, const DecoheredObject& src, const DecoheredObject& dst);

/// Claimed scalar semiring of a decoherence level.
class SemiringClaim {
 public:
  enum class Kind { kWholeField, kTotallyPositive };

  static SemiringClaim whole_field(const Subgroup& h) { return SemiringClaim(Kind::kWholeField, h, false); }
  /// Reduces to whole_field when Fix(H) is not formally real.
  static SemiringClaim totally_positive(const Subgroup& h);

  Kind kind() const { return kind_; }
  const Subgroup& subgroup() const { return subgroup_; }
  /// Whether positivity is actually imposed (Fix(H) formally real).
  bool imposes_positivity() const { return positivity_; }
  std::string tag() const;

 private:
  SemiringClaim(Kind k, Subgroup h, bool positivity) : kind_(k), subgroup_(std::move(h)), positivity_(positivity) {}
  Kind kind_;
  Subgroup subgroup_;
  bool positivity_;
};

bool semiring_membership(const FieldElement& a, const SemiringClaim& claim);

struct SumOfNormsWitness {
  std::vector<FieldElement> terms;
  std::vector<FieldElement> norms;  // norms[i] = N(terms[i])
};

struct SumOfNormsOptions {
  int height_bound = 3;
  int term_bound = 8;
  /// Terms are drawn from Fix(source); trivial source means all of K.
  std::optional<Subgroup> source;
  /// Cap on stored partial sums for the signed search.
  std::size_t max_states = 2'000'000;
};

/// Bounded search for target = sum_i N_{Fix(S)/Fix(H)}(a_i) with a_i of
/// coordinate height <= height_bound over the power basis of a primitive
/// element of Fix(S). Fewest terms first; target 0 gives the empty sum.
std::optional<SumOfNormsWitness> sum_of_norms_search(const FieldElement& target, const Subgroup& h,
                                                     const SumOfNormsOptions& options = {});

/// g(b)/b for b != 0 with g(g(b)) = b; the result r satisfies r g(r) = 1.
/// Throws division-by-zero or not-involution.
FieldElement hilbert90_phase(const FieldElement& b, GroupElement g);

}  // namespace galois_cpm
