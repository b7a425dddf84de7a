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

#include "galois_cpm/cpm.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "galois_cpm/errors.hpp"
#include "galois_cpm/field_ops.hpp"

namespace galois_cpm {

namespace {

std::size_t group_order(const FieldPtr& f) { return f->automorphism_count(); }

// Ascending flat indices over n^{|G|} of the coset-constant multi-indices.
std::vector<std::size_t> coset_constant_indices(std::size_t n, const Transversal& t) {
  const auto& f = t.subgroup.field();
  const std::size_t k = group_order(f);
  const std::size_t cosets = t.reps.size();
  std::vector<std::size_t> position(k);
  for (std::size_t g = 0; g < k; ++g) position[g] = coset_position(t, GroupElement{g});
  IndexCodec tuples = IndexCodec::uniform(n, cosets);
  IndexCodec full = IndexCodec::uniform(n, k);
  std::vector<std::size_t> out;
  out.reserve(tuples.size());
  std::vector<std::size_t> x(k);
  for (std::size_t flat = 0; flat < tuples.size(); ++flat) {
    auto d = tuples.decode(flat);
    for (std::size_t g = 0; g < k; ++g) x[g] = d[position[g]];
    out.push_back(full.encode(x));
  }
  return out;
}

std::size_t product_of(const std::vector<std::size_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::size_t{1}, std::multiplies<>());
}

}  // namespace

bool coset_constant(const std::vector<std::size_t>& digits, const Subgroup& h) {
  const auto& f = h.field();
  if (digits.size() != group_order(f)) throw AlgebraError(ErrorCode::kDimensionMismatch, "one digit per group element expected");
  const auto members = h.members();
  for (std::size_t g = 0; g < digits.size(); ++g) {
    for (const auto& x : members) {
      if (digits[f->compose(GroupElement{g}, x).index] != digits[g]) return false;
    }
  }
  return true;
}

// --- Effects ---------------------------------------------------------------

EnvEffect::EnvEffect(const FieldPtr& field, std::vector<EnvBlock> blocks)
    : blocks_(std::move(blocks)), realized_(field, 1, 1) {
  const auto& f = field;
  const std::size_t k = group_order(f);
  std::vector<std::vector<std::size_t>> per_block;
  std::vector<std::size_t> sizes;
  for (const auto& b : blocks_) {
    if (!b.subgroup.field()->same_as(*f)) throw AlgebraError(ErrorCode::kParentMismatch, "effect blocks over different groups");
    per_block.push_back(coset_constant_indices(b.dim, left_transversal(b.subgroup)));
    sizes.push_back(IndexCodec::uniform(b.dim, k).size());
  }
  // Block-major combination; ascending because each list is ascending.
  support_ = {0};
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    std::vector<std::size_t> next;
    next.reserve(support_.size() * per_block[i].size());
    for (auto s : support_) {
      for (auto t : per_block[i]) next.push_back(s * sizes[i] + t);
    }
    support_ = std::move(next);
  }
  realized_ = Matrix(f, 1, product_of(sizes));
  for (auto s : support_) realized_.set_coords(0, s, f->one());
}

Matrix EnvEffect::realized_on_joint() const {
  if (blocks_.empty()) return realized_;
  std::vector<std::size_t> dims;
  for (const auto& b : blocks_) dims.push_back(b.dim);
  const std::size_t k = group_order(realized_.field());
  return relabel(realized_, Permutation{0}, interleave_permutation(dims, k));
}

EnvEffect discard_map(std::size_t n, const GaloisGroup& g, const Subgroup& h) {
  if (!(g == h.parent())) throw AlgebraError(ErrorCode::kParentMismatch, "subgroup of another group");
  return EnvEffect(g.field(), {EnvBlock{n, h}});
}

Matrix decohere_map(std::size_t n, const GaloisGroup& g, const Subgroup& h) {
  if (!(g == h.parent())) throw AlgebraError(ErrorCode::kParentMismatch, "subgroup of another group");
  const std::size_t size = IndexCodec::uniform(n, g.order()).size();
  Matrix m(g.field(), size, size);
  for (auto i : coset_constant_indices(n, left_transversal(h))) m.set_coords(i, i, g.field()->one());
  return m;
}

// --- CPM morphisms ---------------------------------------------------------

CpmMorphism cpm_morphism(const Matrix& a, std::size_t out_dim, const std::vector<EnvBlock>& env) {
  const auto& f = a.field();
  const std::size_t k = group_order(f);
  EnvEffect effect(f, env);
  std::size_t env_dim = 1;
  std::vector<std::size_t> env_dims;
  for (const auto& b : env) {
    if (!b.subgroup.field()->same_as(*f)) throw AlgebraError(ErrorCode::kContextMismatch, "effect over another field");
    env_dim *= b.dim;
    env_dims.push_back(b.dim);
  }
  if (a.rows() != out_dim * env_dim) {
    throw AlgebraError(ErrorCode::kDimensionMismatch, "pure part has " + std::to_string(a.rows()) + " rows, expected " +
                                                          std::to_string(out_dim) + " * " + std::to_string(env_dim));
  }

  std::vector<Matrix> conjugates;
  for (std::size_t g = 0; g < k; ++g) conjugates.push_back(apply_aut_matrix(a, GroupElement{g}));

  // For each support element: the environment row offset per factor g.
  std::vector<std::size_t> block_sizes;
  for (auto d : env_dims) block_sizes.push_back(IndexCodec::uniform(d, k).size());
  IndexCodec blocks(block_sizes);
  std::vector<std::vector<std::size_t>> env_offsets;
  env_offsets.reserve(effect.support().size());
  for (auto s : effect.support()) {
    auto per_block = blocks.decode(s);
    std::vector<std::size_t> offs(k, 0);
    for (std::size_t i = 0; i < env_dims.size(); ++i) {
      auto digits = IndexCodec::uniform(env_dims[i], k).decode(per_block[i]);
      for (std::size_t g = 0; g < k; ++g) offs[g] = offs[g] * env_dims[i] + digits[g];
    }
    env_offsets.push_back(std::move(offs));
  }

  IndexCodec out_codec = IndexCodec::uniform(out_dim, k);
  IndexCodec in_codec = IndexCodec::uniform(a.cols(), k);
  Matrix realized(f, out_codec.size(), in_codec.size());
  for (std::size_t r = 0; r < out_codec.size(); ++r) {
    auto b = out_codec.decode(r);
    for (std::size_t c = 0; c < in_codec.size(); ++c) {
      auto x = in_codec.decode(c);
      Coords sum = f->zero();
      for (const auto& offs : env_offsets) {
        Coords term = f->one();
        bool zero = false;
        for (std::size_t g = 0; g < k && !zero; ++g) {
          const std::size_t row = b[g] * env_dim + offs[g];
          if (conjugates[g].entry_is_zero(row, x[g])) {
            zero = true;
          } else {
            term = f->mul(term, conjugates[g].coords(row, x[g]));
          }
        }
        if (!zero) sum = f->add(sum, term);
      }
      realized.set_coords(r, c, std::move(sum));
    }
  }
  return CpmMorphism{a, out_dim, std::move(effect), std::move(realized)};
}

Matrix cpm_realize_by_matrices(const Matrix& a, std::size_t out_dim, const EnvEffect& env) {
  const auto& f = a.field();
  const GaloisGroup g(f);
  std::vector<std::size_t> dims{out_dim};
  for (const auto& b : env.blocks()) dims.push_back(b.dim);
  Matrix folded = fold_complete(a, g);
  // W: fld(B (x) E) -> fld B (x) fld E is the inverse of the interleaving.
  Permutation w = inverse_permutation(interleave_permutation(dims, g.order()));
  Permutation id(folded.cols());
  std::iota(id.begin(), id.end(), std::size_t{0});
  Matrix wired = relabel(folded, w, id);
  Matrix id_b = Matrix::identity(f, IndexCodec::uniform(out_dim, g.order()).size());
  return compose(tensor(id_b, env.realized()), wired);
}

CpmMorphism dagger_normal_form(const CpmMorphism& b, GroupElement conj) {
  const auto& a = b.pure_part;
  const auto& f = a.field();
  if (f->compose(conj, conj).index != 0) throw AlgebraError(ErrorCode::kNotInvolution, "conjugation is not an involution");
  const std::size_t env_dim = a.rows() / b.out_dim;
  Matrix flipped(f, a.cols() * env_dim, b.out_dim);
  for (std::size_t x = 0; x < a.cols(); ++x) {
    for (std::size_t e = 0; e < env_dim; ++e) {
      for (std::size_t bb = 0; bb < b.out_dim; ++bb) {
        flipped.set_coords(x * env_dim + e, bb, f->apply(a.coords(bb * env_dim + e, x), conj));
      }
    }
  }
  return cpm_morphism(flipped, a.cols(), b.env.blocks());
}

FieldElement nested_norm_formula(const std::vector<FieldElement>& v, const Subgroup& lambda) {
  FieldElement inner = FieldElement::zero(lambda.field());
  for (const auto& x : v) inner += norm_rel(x, lambda);
  return product_of_conjugates(inner, left_transversal(lambda).reps);
}

// --- Decohered objects -----------------------------------------------------

DecoheredObject::DecoheredObject(std::size_t n, const Subgroup& h) : DecoheredObject(n, left_transversal(h)) {}

DecoheredObject::DecoheredObject(std::size_t n, const Transversal& t)
    : base_dim(n),
      subgroup(t.subgroup),
      transversal(make_transversal(t.subgroup, t.reps)),
      idempotent(decohere_map(n, t.subgroup.parent(), t.subgroup)) {}

std::vector<std::size_t> DecoheredObject::tuple_indices() const { return coset_constant_indices(base_dim, transversal); }

Matrix compress_decohered(const Matrix& m, const DecoheredObject& src, const DecoheredObject& dst) {
  if (m.rows() != dst.idempotent.rows() || m.cols() != src.idempotent.cols()) {
    throw AlgebraError(ErrorCode::kDimensionMismatch, "matrix does not fit the decohered objects");
  }
  const auto rows = dst.tuple_indices();
  const auto cols = src.tuple_indices();
  std::vector<bool> row_ok(m.rows(), false), col_ok(m.cols(), false);
  for (auto r : rows) row_ok[r] = true;
  for (auto c : cols) col_ok[c] = true;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if ((!row_ok[r] || !col_ok[c]) && !m.entry_is_zero(r, c)) {
        throw AlgebraError(ErrorCode::kNotDecohered, "nonzero entry outside the decohered block at (" +
                                                         std::to_string(r) + "," + std::to_string(c) + ")");
      }
    }
  }
  Matrix out(m.field(), rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out.set_coords(i, j, m.coords(rows[i], cols[j]));
  }
  return out;
}

// --- Semirings ---------------------------------------------------------------

SemiringClaim SemiringClaim::totally_positive(const Subgroup& h) {
  bool real = false;
  if (h.field()->kind() != FieldKind::kFinite) real = generates_formally_real_field(fixed_field(h).primitive);
  return SemiringClaim(Kind::kTotallyPositive, h, real);
}

std::string SemiringClaim::tag() const {
  return kind_ == Kind::kTotallyPositive && positivity_ ? "totally_positive" : "whole_field";
}

bool semiring_membership(const FieldElement& a, const SemiringClaim& claim) {
  if (!is_fixed_by(a, claim.subgroup())) return false;
  if (claim.kind() == SemiringClaim::Kind::kWholeField || !claim.imposes_positivity()) return true;
  return is_totally_positive(a);
}

// --- Sum-of-norms search -----------------------------------------------------

namespace {

std::vector<Rational> small_rationals(const FieldPtr& f, int height) {
  std::vector<Rational> out{Rational(0)};
  if (f->kind() == FieldKind::kFinite) {
    for (long v = 1; v <= height && v < f->characteristic(); ++v) out.emplace_back(v);
    return out;
  }
  for (long q = 1; q <= height; ++q) {
    for (long p = 1; p <= height; ++p) {
      if (std::gcd(p, q) != 1) continue;
      out.emplace_back(p, q);
      out.emplace_back(-p, q);
    }
  }
  std::stable_sort(out.begin() + 1, out.end(), [](const Rational& x, const Rational& y) {
    if (x.height() != y.height()) return x.height() < y.height();
    if (x.abs() != y.abs()) return x.abs() < y.abs();
    return x.sign() > y.sign();
  });
  return out;
}

Integer element_height(const FieldElement& a) {
  Integer h = 0;
  for (const auto& c : a.rational_coordinates()) h = std::max(h, c.height());
  return h;
}

// Smaller coordinate height first, then fewer nonzero coordinates.
bool simpler(const FieldElement& a, const FieldElement& b) {
  auto ha = element_height(a), hb = element_height(b);
  if (ha != hb) return ha < hb;
  auto support = [](const FieldElement& x) {
    return std::count_if(x.coords().num.begin(), x.coords().num.end(), [](const Integer& v) { return v != 0; });
  };
  return support(a) < support(b);
}

SumOfNormsWitness build_witness(const std::vector<std::size_t>& items, const std::vector<FieldElement>& values,
                                const std::map<FieldElement, FieldElement>& preimage) {
  SumOfNormsWitness w;
  for (auto i : items) {
    w.norms.push_back(values[i]);
    w.terms.push_back(preimage.at(values[i]));
  }
  return w;
}

}  // namespace

std::optional<SumOfNormsWitness> sum_of_norms_search(const FieldElement& target, const Subgroup& h,
                                                     const SumOfNormsOptions& options) {
  const auto& f = target.field();
  if (!f->same_as(*h.field())) throw AlgebraError(ErrorCode::kContextMismatch, "target and subgroup differ in field");
  const Subgroup source = options.source.value_or(h.parent().trivial());
  if (!source.is_subgroup_of(h)) throw AlgebraError(ErrorCode::kParentMismatch, "source subgroup must lie inside H");
  if (target.is_zero()) return SumOfNormsWitness{};
  if (!is_fixed_by(target, h)) return std::nullopt;

  std::vector<FieldElement> basis;
  if (source.order() == 1) {
    for (std::size_t i = 0; i < f->degree(); ++i) basis.push_back(FieldElement::basis(f, i));
  } else {
    FieldElement p = fixed_field(source).primitive;
    const std::size_t k = f->automorphism_count() / source.order();
    FieldElement cur = FieldElement::one(f);
    for (std::size_t i = 0; i < k; ++i) {
      basis.push_back(cur);
      cur *= p;
    }
  }

  // Norm value -> first element producing it.
  std::map<FieldElement, FieldElement> preimage;
  const auto coeffs = small_rationals(f, options.height_bound);
  std::vector<std::size_t> digit(basis.size(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == coeffs.size()) digit[i++] = 0;
    if (i == digit.size()) break;
    FieldElement a = FieldElement::zero(f);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (digit[j] != 0) a += FieldElement::rational(f, coeffs[digit[j]]) * basis[j];
    }
    FieldElement n = subfield_norm(a, source, h);
    auto it = preimage.find(n);
    if (it == preimage.end()) {
      preimage.emplace(std::move(n), std::move(a));
    } else if (simpler(a, it->second)) {
      it->second = std::move(a);
    }
  }

  std::vector<FieldElement> values;
  for (const auto& [v, _] : preimage) values.push_back(v);

  // Positive rational case: coin-change over a common denominator.
  const bool rational_target = f->kind() != FieldKind::kFinite && target.is_rational() && target.as_rational().sign() > 0;
  bool all_positive = rational_target;
  for (const auto& v : values) {
    if (!all_positive) break;
    all_positive = v.is_rational() && v.as_rational().sign() > 0;
  }
  if (all_positive) {
    const Rational t = target.as_rational();
    std::vector<std::size_t> usable;
    Integer lcm_den = t.denominator();
    for (std::size_t i = 0; i < values.size(); ++i) {
      Rational v = values[i].as_rational();
      if (v <= t) {
        usable.push_back(i);
        lcm_den = lcm(lcm_den, v.denominator());
      }
    }
    Integer scaled = t.numerator() * (lcm_den / t.denominator());
    constexpr long kMaxTable = 20'000'000;
    if (scaled <= kMaxTable) {
      const auto total = static_cast<std::size_t>(scaled.get_ui());
      std::vector<std::pair<std::size_t, std::size_t>> coins;  // (weight, value index)
      std::stable_sort(usable.begin(), usable.end(), [&](std::size_t x, std::size_t y) {
        return simpler(preimage.at(values[x]), preimage.at(values[y]));
      });
      for (auto i : usable) {
        Rational v = values[i].as_rational();
        Integer w = v.numerator() * (lcm_den / v.denominator());
        coins.emplace_back(static_cast<std::size_t>(w.get_ui()), i);
      }
      constexpr std::uint8_t kUnreached = std::numeric_limits<std::uint8_t>::max();
      std::vector<std::uint8_t> best(total + 1, kUnreached);
      std::vector<std::size_t> choice(total + 1, 0);
      best[0] = 0;
      for (std::size_t v = 1; v <= total; ++v) {
        for (std::size_t c = 0; c < coins.size(); ++c) {
          const auto w = coins[c].first;
          if (w > v || best[v - w] == kUnreached) continue;
          if (best[v - w] + 1 < best[v]) {
            best[v] = static_cast<std::uint8_t>(best[v - w] + 1);
            choice[v] = c;
          }
        }
      }
      if (best[total] == kUnreached || best[total] > options.term_bound) return std::nullopt;
      std::vector<std::size_t> items;
      for (std::size_t v = total; v > 0; v -= coins[choice[v]].first) items.push_back(coins[choice[v]].second);
      return build_witness(items, values, preimage);
    }
  }

  // General case: breadth-first over partial sums.
  std::map<FieldElement, std::vector<std::size_t>> layer{{FieldElement::zero(f), {}}};
  std::map<FieldElement, std::vector<std::size_t>> seen = layer;
  for (int terms = 1; terms <= options.term_bound; ++terms) {
    std::map<FieldElement, std::vector<std::size_t>> next;
    for (const auto& [sum, items] : layer) {
      for (std::size_t i = 0; i < values.size(); ++i) {
        FieldElement s = sum + values[i];
        if (seen.count(s) != 0 || next.count(s) != 0) continue;
        auto with = items;
        with.push_back(i);
        if (s == target) return build_witness(with, values, preimage);
        next.emplace(std::move(s), std::move(with));
        if (seen.size() + next.size() > options.max_states) return std::nullopt;
      }
    }
    for (const auto& e : next) seen.insert(e);
    layer = std::move(next);
  }
  return std::nullopt;
}

FieldElement hilbert90_phase(const FieldElement& b, GroupElement g) {
  if (b.is_zero()) throw AlgebraError(ErrorCode::kDivisionByZero, "phase of zero");
  const auto& f = b.field();
  const FieldElement gb = b.apply(g);
  if (!(gb.apply(g) == b)) {
    throw AlgebraError(ErrorCode::kNotInvolution, f->automorphism_label(g) + " does not act with order 2 on " + b.to_string());
  }
  FieldElement r = gb / b;
  if (!(r * r.apply(g)).is_one()) throw AlgebraError(ErrorCode::kNotInvolution, "phase does not have norm 1");
  return r;
}

}  // namespace galois_cpm
