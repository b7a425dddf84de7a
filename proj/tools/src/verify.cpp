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

#include "galois_cpm_cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "galois_cpm/cpm.hpp"
#include "galois_cpm/errors.hpp"
#include "galois_cpm/field_ops.hpp"
#include "galois_cpm/finite_field.hpp"
#include "galois_cpm/folding.hpp"
#include "galois_cpm/sampling.hpp"
#include "galois_cpm/serialization.hpp"

namespace galois_cpm::cli {

namespace {

using json = nlohmann::ordered_json;

json ej(const FieldElement& a) { return json::parse(element_to_json(a)); }
json mj(const Matrix& m) { return json::parse(matrix_to_json(m)); }

class Recorder {
 public:
  explicit Recorder(VerificationReport& report) : report_(report) {}

  // Runs one case; `body` returns an empty object on success or the
  // counterexample on failure.
  void run(const std::string& what, const std::function<json()>& body) {
    ++report_.cases;
    try {
      json ce = body();
      if (!ce.is_null()) {
        json f{{"case", what}};
        f["counterexample"] = std::move(ce);
        report_.failures.push_back(f.dump());
      }
    } catch (const std::exception& e) {
      report_.failures.push_back(json{{"case", what}, {"error", e.what()}}.dump());
    }
  }

 private:
  VerificationReport& report_;
};

std::vector<Subgroup> subgroups_of(const GaloisGroup& g) { return SubgroupLattice(g).subgroups(); }

Subgroup subgroup_of(const FieldPtr& f, const std::string& gens) {
  GaloisGroup g(f);
  return g.generated_by(g.parse_list(gens));
}

std::vector<FieldPtr> axiom_contexts() {
  return {Field::cyclotomic(5), Field::cyclotomic(7), Field::cyclotomic(8), Field::cyclotomic(12),
          Field::finite(2, 2),  Field::finite(3, 2),  Field::finite(2, 4),  Field::sextic_s3()};
}

GroupElement random_group_element(const FieldPtr& f, Rng& rng) {
  return GroupElement{static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(f->automorphism_count()) - 1))};
}

// --- field-axioms ------------------------------------------------------------

void field_axioms(Recorder& rec, Rng& rng) {
  for (const auto& f : axiom_contexts()) {
    for (int i = 0; i < 1000; ++i) {
      FieldElement a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
      GroupElement g = random_group_element(f, rng), h = random_group_element(f, rng);
      rec.run(f->description(), [&]() -> json {
        bool ok = a + b == b + a && a * b == b * a && (a * b) * c == a * (b * c) && (a + b) + c == a + (b + c) &&
                  a * (b + c) == a * b + a * c && (a + b) - b == a && a + (-a) == FieldElement::zero(f);
        if (!a.is_zero()) ok = ok && (a * a.inverse()).is_one() && (b / a) * a == b;
        ok = ok && (a + b).apply(g) == a.apply(g) + b.apply(g) && (a * b).apply(g) == a.apply(g) * b.apply(g);
        ok = ok && a.apply(h).apply(g) == a.apply(f->compose(g, h));
        if (ok) return nullptr;
        return json{{"a", ej(a)}, {"b", ej(b)}, {"c", ej(c)}, {"g", f->automorphism_label(g)},
                    {"h", f->automorphism_label(h)}};
      });
    }
  }
}

// --- norm-laws ---------------------------------------------------------------

void norm_laws(Recorder& rec, Rng& rng) {
  for (long n : {5L, 7L, 8L}) {
    auto f = Field::cyclotomic(n);
    GaloisGroup g(f);
    for (int i = 0; i < 200; ++i) {
      FieldElement a = random_element(f, rng), b = random_element(f, rng);
      rec.run("multiplicative " + f->description(), [&]() -> json {
        if (norm_full(a * b) == norm_full(a) * norm_full(b) && norm_rel(a, g.full()).as_rational() == norm_full(a))
          return nullptr;
        return json{{"a", ej(a)}, {"b", ej(b)}};
      });
    }
  }
  // Tower law and positivity of relative norms from CM fields.
  for (auto [n, h_gens] : {std::pair{5L, "4"}, std::pair{7L, "6"}, std::pair{5L, ""}}) {
    auto f = Field::cyclotomic(n);
    Subgroup h = subgroup_of(f, h_gens);
    Subgroup full = GaloisGroup(f).full();
    for (int i = 0; i < 200; ++i) {
      FieldElement a = random_element(f, rng);
      rec.run("tower " + f->description() + " " + h.label(), [&]() -> json {
        FieldElement rel = norm_rel(a, h);
        bool ok = subfield_norm(rel, h, full) == FieldElement::rational(f, norm_full(a)) && is_fixed_by(rel, h);
        if (h.order() == 2) ok = ok && is_totally_positive(rel);
        if (ok) return nullptr;
        return json{{"a", ej(a)}};
      });
    }
  }
  for (auto [p, m] : {std::pair{2L, 4}, std::pair{3L, 2}}) {
    auto f = Field::finite(p, m);
    for (int i = 0; i < 200; ++i) {
      FieldElement a = random_element(f, rng), b = random_element(f, rng);
      rec.run("finite " + f->description(), [&]() -> json {
        if (ff_norm(a * b, 1) == ff_norm(a, 1) * ff_norm(b, 1) &&
            ff_norm(a, 1) == FieldElement::rational(f, norm_full(a)))
          return nullptr;
        return json{{"a", ej(a)}, {"b", ej(b)}};
      });
    }
  }
}

// --- lattice-correspondence ----------------------------------------------------

void lattice_correspondence(Recorder& rec, Rng& rng) {
  const std::vector<std::pair<FieldPtr, std::size_t>> cases{{Field::cyclotomic(5), 3}, {Field::cyclotomic(7), 4},
                                                            {Field::cyclotomic(8), 5}, {Field::cyclotomic(12), 5},
                                                            {Field::sextic_s3(), 6}};
  for (const auto& [f, expected] : cases) {
    GaloisGroup g(f);
    SubgroupLattice lattice(g);
    rec.run("lattice size " + f->description(), [&]() -> json {
      if (lattice.size() == expected) return nullptr;
      return json{{"subgroups", lattice.size()}, {"expected", expected}};
    });
    std::vector<FixedField> fixed;
    for (const auto& h : lattice.subgroups()) fixed.push_back(fixed_field(h));
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      const auto& h = lattice.subgroups()[i];
      rec.run("degree " + h.label(), [&]() -> json {
        auto t = left_transversal(h);
        std::set<std::size_t> positions;
        for (const auto& r : t.reps) positions.insert(coset_position(t, r));
        bool ok = static_cast<std::size_t>(fixed[i].min_poly.degree()) * h.order() == g.order() &&
                  t.reps.size() * h.order() == g.order() && positions.size() == t.reps.size() &&
                  is_fixed_by(fixed[i].primitive, h);
        if (ok) return nullptr;
        return json{{"subgroup", h.label()}, {"min_poly", fixed[i].min_poly.to_string()}};
      });
      for (std::size_t j = 0; j < lattice.size(); ++j) {
        const auto& k = lattice.subgroups()[j];
        rec.run("order reversal " + h.label() + " " + k.label(), [&]() -> json {
          // H <= K iff Fix(K) is contained in Fix(H).
          bool inside = h.is_subgroup_of(k);
          bool contained = is_fixed_by(fixed[j].primitive, h);
          bool ok = inside == contained && lattice.join(i, j).mask() == join(h, k).mask() &&
                    lattice.meet(i, j).mask() == (h.mask() & k.mask());
          if (ok) return nullptr;
          return json{{"h", h.label()}, {"k", k.label()}};
        });
      }
      bool normal = is_normal(h);
      rec.run("quotient " + h.label(), [&]() -> json {
        bool threw = false;
        try {
          QuotientGroup q(h);
          for (int s = 0; s < 10; ++s) {
            FieldElement a = random_element(f, rng);
            FieldElement x = FieldElement::zero(f);
            for (const auto& y : h.members()) x += a.apply(y);
            for (std::size_t c = 0; c < q.order(); ++c) {
              for (const auto& y : h.members()) {
                if (!(x.apply(f->compose(q.representatives()[c], y)) == q.apply(x, c))) {
                  return json{{"subgroup", h.label()}, {"x", ej(x)}, {"coset", c}};
                }
              }
            }
          }
        } catch (const AlgebraError& e) {
          if (e.code() != ErrorCode::kNotNormal) throw;
          threw = true;
        }
        if (threw != normal) return nullptr;
        return json{{"subgroup", h.label()}, {"normal", normal}, {"threw", threw}};
      });
    }
  }
  auto s3 = Field::sextic_s3();
  rec.run("s3 non-normal subgroups", [&]() -> json {
    std::size_t non_normal = 0, order_two = 0;
    for (const auto& h : subgroups_of(GaloisGroup(s3))) {
      if (!is_normal(h)) {
        ++non_normal;
        if (h.order() == 2) ++order_two;
      }
    }
    if (non_normal == 3 && order_two == 3) return nullptr;
    return json{{"non_normal", non_normal}};
  });
}

// --- folding-functoriality / equivariance / factorization -----------------------

std::vector<FieldPtr> folding_contexts() { return {Field::cyclotomic(3), Field::cyclotomic(5), Field::cyclotomic(7)}; }

void folding_functoriality(Recorder& rec, Rng& rng) {
  for (const auto& f : folding_contexts()) {
    GaloisGroup g(f);
    const bool big = g.order() > 4;
    for (int i = 0; i < 200; ++i) {
      std::size_t r = static_cast<std::size_t>(uniform_int(rng, 1, 2));
      std::size_t k = static_cast<std::size_t>(uniform_int(rng, 1, 2));
      std::size_t c = big ? 1 : static_cast<std::size_t>(uniform_int(rng, 1, 2));
      Matrix m = random_matrix(f, r, k, rng), n = random_matrix(f, k, c, rng);
      rec.run("composition " + f->description(), [&]() -> json {
        if (fold_complete(compose(m, n), g) == compose(fold_complete(m, g), fold_complete(n, g))) return nullptr;
        return json{{"m", mj(m)}, {"n", mj(n)}};
      });
      Matrix p = random_matrix(f, r, 1, rng), q = random_matrix(f, 1, c, rng);
      rec.run("tensor " + f->description(), [&]() -> json {
        // fld(P (x) Q) = pi (fld P (x) fld Q) pi^{-1}
        Matrix lhs = fold_complete(tensor(p, q), g);
        Matrix rhs = relabel(tensor(fold_complete(p, g), fold_complete(q, g)), interleave_permutation(r, 1, g.order()),
                             interleave_permutation(1, c, g.order()));
        if (lhs == rhs) return nullptr;
        return json{{"p", mj(p)}, {"q", mj(q)}};
      });
    }
    rec.run("identity " + f->description(), [&]() -> json {
      if (fold_complete(Matrix::identity(f, 2), g) == Matrix::identity(f, checked_power(2, g.order(), 1 << 20)))
        return nullptr;
      return json{{"field", f->description()}};
    });
    for (int i = 0; i < 500; ++i) {
      FieldElement a = random_element(f, rng);
      rec.run("scalar law " + f->description(), [&]() -> json {
        Matrix folded = fold_complete(Matrix::scalar(a), g);
        if (folded.rows() == 1 && folded.at(0, 0) == FieldElement::rational(f, norm_full(a))) return nullptr;
        return json{{"a", ej(a)}};
      });
    }
  }
}

void equivariance(Recorder& rec, Rng& rng) {
  for (const auto& f : folding_contexts()) {
    GaloisGroup g(f);
    for (int i = 0; i < 100; ++i) {
      Matrix m = random_matrix(f, 2, 2, rng);
      GroupElement x = random_group_element(f, rng);
      rec.run("equivariance " + f->description(), [&]() -> json {
        if (check_equivariance(m, g, x)) return nullptr;
        return json{{"m", mj(m)}, {"g", g.label(x)}};
      });
    }
    for (const auto& x : g.elements()) {
      for (const auto& y : g.elements()) {
        rec.run("coset_perm homomorphism " + f->description(), [&]() -> json {
          Matrix lhs = compose(coset_perm(g, x, 2), coset_perm(g, y, 2));
          if (lhs == coset_perm(g, g.mul(x, y), 2)) return nullptr;
          return json{{"g", g.label(x)}, {"h", g.label(y)}};
        });
      }
    }
  }
}

void factorization(Recorder& rec, Rng& rng) {
  for (long n : {5L, 7L}) {
    auto f = Field::cyclotomic(n);
    GaloisGroup g(f);
    for (const auto& h : subgroups_of(g)) {
      for (int i = 0; i < 50; ++i) {
        Matrix m = random_matrix(f, 2, 2, rng);
        rec.run("factorization " + f->description() + " " + h.label(), [&]() -> json {
          auto check = check_factorization_detail(m, h);
          if (check.ok() && check.quotient_form.has_value()) return nullptr;
          return json{{"m", mj(m)}, {"subgroup", h.label()}};
        });
      }
    }
  }
}

// --- env-closure ---------------------------------------------------------------

// Spider-built H-discard and H-decoherence on fld_G n, assembled in
// coset-major order and regrouped.
Matrix spider_copy(const FieldPtr& f, std::size_t n, std::size_t legs) {
  IndexCodec codec = IndexCodec::uniform(n, legs);
  Matrix m(f, codec.size(), n);
  for (std::size_t i = 0; i < n; ++i) m.set_coords(codec.encode(std::vector<std::size_t>(legs, i)), i, f->one());
  return m;
}

Matrix spider_decoherence(std::size_t n, const Subgroup& h) {
  const auto& f = h.field();
  FoldingData data(h);
  Matrix copy = spider_copy(f, n, h.order());
  Matrix block = compose(copy, transpose(copy));
  std::vector<Matrix> blocks(data.transversal().reps.size(), block);
  Permutation p = regrouping_permutation(data, n);
  return relabel(tensor_all(blocks), p, p);
}

Matrix spider_discard(std::size_t n, const Subgroup& h) {
  const auto& f = h.field();
  FoldingData data(h);
  Matrix ones(f, 1, n);
  for (std::size_t i = 0; i < n; ++i) ones.set_coords(0, i, f->one());
  Matrix block = compose(ones, transpose(spider_copy(f, n, h.order())));
  std::vector<Matrix> blocks(data.transversal().reps.size(), block);
  return relabel(tensor_all(blocks), Permutation{0}, regrouping_permutation(data, n));
}

void env_closure(Recorder& rec, Rng& rng) {
  for (long n : {5L, 7L}) {
    auto f = Field::cyclotomic(n);
    GaloisGroup g(f);
    const auto subgroups = subgroups_of(g);
    for (const auto& h1 : subgroups) {
      for (const auto& h2 : subgroups) {
        std::size_t d1 = 2, d2 = n == 7 ? 1 : 2;
        rec.run("joint effect " + f->description() + " " + h1.label() + " " + h2.label(), [&]() -> json {
          EnvEffect e(f, {EnvBlock{d1, h1}, EnvBlock{d2, h2}});
          Matrix joint = e.realized_on_joint();
          IndexCodec codec = IndexCodec::uniform(d1 * d2, g.order());
          bool ok = e.realized() == tensor(discard_map(d1, g, h1).realized(), discard_map(d2, g, h2).realized());
          for (std::size_t flat = 0; ok && flat < codec.size(); ++flat) {
            auto digits = codec.decode(flat);
            std::vector<std::size_t> x, y;
            for (auto d : digits) {
              x.push_back(d / d2);
              y.push_back(d % d2);
            }
            bool expect = coset_constant(x, h1) && coset_constant(y, h2);
            ok = ok && joint.entry_is_zero(0, flat) != expect;
          }
          if (h1 == h2) ok = ok && joint == discard_map(d1 * d2, g, h1).realized();
          if (ok) return nullptr;
          return json{{"h1", h1.label()}, {"h2", h2.label()}};
        });
      }
      for (const auto& x : g.elements()) {
        rec.run("autofunctor invariance " + h1.label(), [&]() -> json {
          Matrix xi = discard_map(2, g, h1).realized();
          if (compose(apply_aut_matrix(xi, x), coset_perm(g, x, 2)) == xi) return nullptr;
          return json{{"h", h1.label()}, {"g", g.label(x)}};
        });
      }
    }
    // Dagger closure and the two realizations of a CPM morphism.
    GroupElement conj = complex_conjugation(f);
    for (int i = 0; i < 10; ++i) {
      const auto& lambda = subgroups[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(subgroups.size()) - 1))];
      std::size_t in = n == 7 ? 1 : 2, out = 2, env = 2;
      Matrix a = random_matrix(f, out * env, in, rng, SampleOptions{3});
      rec.run("dagger closure " + f->description() + " " + lambda.label(), [&]() -> json {
        CpmMorphism b = cpm_morphism(a, out, {EnvBlock{env, lambda}});
        bool ok = b.realized == cpm_realize_by_matrices(a, out, b.env);
        ok = ok && dagger(b.realized, conj) == dagger_normal_form(b, conj).realized;
        if (ok) return nullptr;
        return json{{"a", mj(a)}, {"lambda", lambda.label()}};
      });
    }
  }
}

// --- dec-idempotence / join-law ---------------------------------------------------

void dec_idempotence(Recorder& rec, Rng&) {
  for (const auto& f : {Field::cyclotomic(5), Field::cyclotomic(7), Field::sextic_s3()}) {
    GaloisGroup g(f);
    for (const auto& h : subgroups_of(g)) {
      for (std::size_t n : {1U, 2U}) {
        rec.run("idempotent " + f->description() + " " + h.label() + " n=" + std::to_string(n), [&]() -> json {
          Matrix dec = decohere_map(n, g, h);
          Matrix discard = discard_map(n, g, h).realized();
          bool ok = compose(dec, dec) == dec && compose(discard, dec) == discard;
          ok = ok && spider_decoherence(n, h) == dec && spider_discard(n, h) == discard;
          if (ok) return nullptr;
          return json{{"subgroup", h.label()}, {"n", n}};
        });
      }
    }
  }
}

void join_law(Recorder& rec, Rng&) {
  for (long c : {5L, 7L}) {
    auto f = Field::cyclotomic(c);
    GaloisGroup g(f);
    const auto subgroups = subgroups_of(g);
    for (std::size_t n : {1U, 2U}) {
      std::vector<Matrix> decs;
      for (const auto& h : subgroups) decs.push_back(decohere_map(n, g, h));
      for (std::size_t i = 0; i < subgroups.size(); ++i) {
        for (std::size_t j = 0; j < subgroups.size(); ++j) {
          rec.run("join " + subgroups[i].label() + " " + subgroups[j].label(), [&]() -> json {
            Matrix joined = decohere_map(n, g, join(subgroups[i], subgroups[j]));
            if (compose(decs[i], decs[j]) == joined && compose(decs[j], decs[i]) == joined) return nullptr;
            return json{{"h", subgroups[i].label()}, {"k", subgroups[j].label()}, {"n", n}};
          });
        }
      }
    }
  }
}

// --- scalar-formula -----------------------------------------------------------------

void scalar_formula(Recorder& rec, Rng& rng) {
  auto f = Field::cyclotomic(5);
  GaloisGroup g(f);
  for (const auto& lambda : subgroups_of(g)) {
    for (std::size_t n : {2U, 3U}) {
      for (int i = 0; i < 100; ++i) {
        Matrix v = random_matrix(f, n, 1, rng);
        rec.run("scalar " + lambda.label() + " n=" + std::to_string(n), [&, i]() -> json {
          std::vector<FieldElement> entries;
          for (std::size_t r = 0; r < n; ++r) entries.push_back(v.at(r, 0));
          CpmMorphism b = cpm_morphism(v, 1, {EnvBlock{n, lambda}});
          bool ok = b.realized.rows() == 1 && b.realized.cols() == 1 &&
                    b.realized.at(0, 0) == nested_norm_formula(entries, lambda);
          if (i < 5) ok = ok && cpm_realize_by_matrices(v, 1, b.env) == b.realized;
          if (ok) return nullptr;
          return json{{"v", mj(v)}, {"lambda", lambda.label()}};
        });
      }
    }
  }
}

// --- soundness ------------------------------------------------------------------------

json check_compressed(const Matrix& realized, std::size_t out_dim, const Subgroup& level, const SemiringClaim& claim) {
  const auto& f = realized.field();
  GaloisGroup g(f);
  Matrix decohered = compose(decohere_map(out_dim, g, level), realized);
  Matrix c = compress_decohered(decohered, DecoheredObject(1, level), DecoheredObject(out_dim, level));
  for (std::size_t r = 0; r < c.rows(); ++r) {
    if (!semiring_membership(c.at(r, 0), claim)) return json{{"level", level.label()}, {"entry", ej(c.at(r, 0))}};
  }
  return nullptr;
}

void cyclo5_soundness(Recorder& rec, Rng& rng) {
  auto f = Field::cyclotomic(5);
  GaloisGroup g(f);
  const auto subgroups = subgroups_of(g);
  Subgroup mid = subgroup_of(f, "4");
  for (int i = 0; i < 100; ++i) {
    const auto& lambda = subgroups[static_cast<std::size_t>(i) % subgroups.size()];
    Matrix a = random_matrix(f, 4, 1, rng);
    rec.run("cyclo5 state " + lambda.label(), [&]() -> json {
      CpmMorphism b = cpm_morphism(a, 2, {EnvBlock{2, lambda}});
      for (const auto& level : {g.full(), mid}) {
        json ce = check_compressed(b.realized, 2, level, SemiringClaim::totally_positive(level));
        if (!ce.is_null()) {
          ce["a"] = mj(a);
          ce["lambda"] = lambda.label();
          return ce;
        }
      }
      return nullptr;
    });
  }
}

void cyclo7_soundness(Recorder& rec, Rng& rng) {
  auto f = Field::cyclotomic(7);
  GaloisGroup g(f);
  Subgroup l1 = subgroup_of(f, "6"), l2 = subgroup_of(f, "2");
  rec.run("cyclo7 semiring tags", [&]() -> json {
    if (SemiringClaim::totally_positive(l1).imposes_positivity() &&
        !SemiringClaim::totally_positive(l2).imposes_positivity())
      return nullptr;
    return json{{"l1", SemiringClaim::totally_positive(l1).tag()}, {"l2", SemiringClaim::totally_positive(l2).tag()}};
  });
  for (int i = 0; i < 100; ++i) {
    Matrix a = random_matrix(f, 8, 1, rng, SampleOptions{3});
    rec.run("cyclo7 mixed state", [&]() -> json {
      CpmMorphism b = cpm_morphism(a, 2, {EnvBlock{2, l1}, EnvBlock{2, l2}});
      const std::vector<std::pair<Subgroup, SemiringClaim>> levels{
          {g.full(), SemiringClaim::totally_positive(g.full())},
          {l2, SemiringClaim::totally_positive(l2)},
          {l1, SemiringClaim::whole_field(l1)}};
      for (const auto& [level, claim] : levels) {
        json ce = check_compressed(b.realized, 2, level, claim);
        if (!ce.is_null()) {
          ce["a"] = mj(a);
          return ce;
        }
      }
      return nullptr;
    });
  }
  // Single Lambda_1 discards keep the real-subfield positivity.
  for (int i = 0; i < 20; ++i) {
    Matrix a = random_matrix(f, 4, 1, rng, SampleOptions{3});
    rec.run("cyclo7 real state", [&]() -> json {
      CpmMorphism b = cpm_morphism(a, 2, {EnvBlock{2, l1}});
      json ce = check_compressed(b.realized, 2, l1, SemiringClaim::totally_positive(l1));
      if (!ce.is_null()) ce["a"] = mj(a);
      return ce;
    });
  }
}

// --- completeness-search ----------------------------------------------------------------

json check_witness(const FieldElement& target, const Subgroup& h, const SumOfNormsOptions& opts,
                   const std::optional<SumOfNormsWitness>& w) {
  if (!w) return json{{"target", ej(target)}, {"found", false}};
  const Subgroup source = opts.source.value_or(h.parent().trivial());
  FieldElement sum = FieldElement::zero(target.field());
  for (std::size_t i = 0; i < w->terms.size(); ++i) {
    if (!(subfield_norm(w->terms[i], source, h) == w->norms[i]) || !is_fixed_by(w->terms[i], source)) {
      return json{{"target", ej(target)}, {"term", ej(w->terms[i])}};
    }
    sum += w->norms[i];
  }
  if (!(sum == target) || w->terms.size() > static_cast<std::size_t>(opts.term_bound)) {
    return json{{"target", ej(target)}, {"terms", w->terms.size()}};
  }
  return nullptr;
}

void completeness_search(Recorder& rec, Rng&) {
  auto f = Field::cyclotomic(5);
  GaloisGroup g(f);
  SumOfNormsOptions opts;
  opts.height_bound = 3;
  opts.term_bound = 8;
  for (const char* t : {"1", "2", "3", "1/2", "7/3", "5"}) {
    FieldElement target = FieldElement::rational(f, Rational::parse(t));
    rec.run(std::string("witness ") + t, [&]() -> json {
      return check_witness(target, g.full(), opts, sum_of_norms_search(target, g.full(), opts));
    });
  }
  SumOfNormsOptions real = opts;
  real.source = subgroup_of(f, "4");
  FieldElement minus_one = FieldElement::rational(f, Rational(-1));
  rec.run("witness -1 from the real quadratic subfield", [&]() -> json {
    return check_witness(minus_one, g.full(), real, sum_of_norms_search(minus_one, g.full(), real));
  });
  rec.run("no witness for -1 in the CM theory", [&]() -> json {
    SumOfNormsOptions small = opts;
    small.term_bound = 3;
    small.height_bound = 2;
    if (!sum_of_norms_search(minus_one, g.full(), small)) return nullptr;
    return json{{"target", "-1"}, {"found", true}};
  });
}

// --- finite-field-exhaustive ---------------------------------------------------------------

void finite_field_exhaustive(Recorder& rec, Rng& rng) {
  for (auto [p, m] : {std::pair{2L, 2}, std::pair{3L, 2}, std::pair{2L, 4}}) {
    auto f = Field::finite(p, m);
    GaloisGroup g(f);
    const auto elements = ff_elements(f);
    rec.run("norm image " + f->description(), [&]() -> json {
      auto image = ff_norm_image(f, 1);
      bool ok = image.size() == static_cast<std::size_t>(p);
      for (const auto& x : image) ok = ok && x.is_rational();
      if (ok) return nullptr;
      return json{{"image_size", image.size()}};
    });
    for (const auto& lambda : subgroups_of(g)) {
      const long q = ff_order(p, m / static_cast<int>(lambda.order()));
      rec.run("hom-set bijection " + f->description() + " " + lambda.label(), [&]() -> json {
        std::vector<FieldElement> fixed;
        for (const auto& x : elements) {
          if (is_fixed_by(x, lambda)) fixed.push_back(x);
        }
        DecoheredObject dst(2, lambda);
        std::vector<FieldElement> seen;
        for (const auto& x : elements) {
          Matrix state = Matrix::from_elements(f, 2, 1, {x, FieldElement::one(f)});
          Matrix folded = compose(dst.idempotent, fold_complete(state, g));
          Matrix c = compress_decohered(folded, DecoheredObject(1, lambda), dst);
          for (std::size_t r = 0; r < c.rows(); ++r) {
            if (!is_fixed_by(c.at(r, 0), lambda)) return json{{"x", ej(x)}, {"entry", ej(c.at(r, 0))}};
          }
          // Tuple (0, 1, ..., 1) sits at flat index 2^{l-1} - 1.
          FieldElement e0 = c.at(c.rows() / 2 - 1, 0);
          if (!(e0 == norm_rel(x, lambda))) return json{{"x", ej(x)}, {"entry", ej(e0)}};
          seen.push_back(e0);
        }
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        if (seen == fixed && static_cast<long>(fixed.size()) == q) return nullptr;
        return json{{"subgroup", lambda.label()}, {"image", seen.size()}, {"fixed", fixed.size()}, {"expected", q}};
      });
    }
    const auto subgroups = subgroups_of(g);
    for (int i = 0; i < 20; ++i) {
      const auto& lambda = subgroups[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(subgroups.size()) - 1))];
      const auto& env = subgroups[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(subgroups.size()) - 1))];
      Matrix x = random_matrix(f, 4, 2, rng), y = random_matrix(f, 4, 2, rng);
      rec.run("compress functoriality " + f->description() + " " + lambda.label(), [&]() -> json {
        DecoheredObject obj(2, lambda);
        auto decohere = [&](const Matrix& a) {
          Matrix b = cpm_morphism(a, 2, {EnvBlock{2, env}}).realized;
          return compose(obj.idempotent, compose(b, obj.idempotent));
        };
        Matrix bx = decohere(x), by = decohere(y);
        Matrix cx = compress_decohered(bx, obj, obj), cy = compress_decohered(by, obj, obj);
        bool ok = compress_decohered(compose(bx, by), obj, obj) == compose(cx, cy);
        ok = ok && compress_decohered(obj.idempotent, obj, obj) ==
                       Matrix::identity(f, checked_power(2, g.order() / lambda.order(), 1 << 20));
        for (std::size_t r = 0; ok && r < cx.rows(); ++r) {
          for (std::size_t c = 0; ok && c < cx.cols(); ++c) ok = is_fixed_by(cx.at(r, c), lambda);
        }
        if (ok) return nullptr;
        return json{{"x", mj(x)}, {"y", mj(y)}, {"lambda", lambda.label()}, {"env", env.label()}};
      });
    }
  }
}

// --- s3-transversal -------------------------------------------------------------------------

void s3_transversal(Recorder& rec, Rng& rng) {
  auto f = Field::sextic_s3();
  GaloisGroup g(f);
  const GroupElement id = g.identity(), s = f->s3_element(0, 1), t = f->s3_element(1, 0);
  rec.run("relations", [&]() -> json {
    bool ok = g.mul(s, s) == id && g.mul(t, g.mul(t, t)) == id && g.mul(s, g.mul(t, s)) == g.inverse(t) &&
              !(g.mul(s, t) == g.mul(t, s));
    if (ok) return nullptr;
    return json{{"relations", false}};
  });
  Subgroup h = g.generated_by({s});
  const std::vector<GroupElement> tau_reps{id, t, g.inverse(t)};
  FoldingData data(h, make_transversal(h, tau_reps));
  FoldingData alt(h, make_transversal(h, {id, g.mul(t, s), g.mul(g.inverse(t), s)}));
  for (int i = 0; i < 50; ++i) {
    // Fix<s> = Q(alpha), spanned by 1, alpha, alpha^2.
    std::vector<Rational> coords(6, Rational(0));
    for (std::size_t k : {0U, 2U, 4U}) coords[k] = random_rational(rng);
    FieldElement a = FieldElement::from_rationals(f, coords);
    rec.run("transversal fold", [&]() -> json {
      Matrix folded = fold_transversal(Matrix::scalar(a), data);
      FieldElement product = a * a.apply(t) * a.apply(g.inverse(t));
      bool ok = folded.rows() == 1 && folded.at(0, 0) == product && product.is_rational() &&
                product.as_rational() * product.as_rational() == norm_full(a) &&
                fold_transversal(Matrix::scalar(a), alt).at(0, 0) == product;
      if (ok) return nullptr;
      return json{{"a", ej(a)}};
    });
  }
  rec.run("non-fixed input rejected", [&]() -> json {
    try {
      fold_transversal(Matrix::scalar(FieldElement::basis(f, 1)), data);
    } catch (const AlgebraError& e) {
      if (e.code() == ErrorCode::kNotEquivariant) return nullptr;
    }
    return json{{"input", "w"}};
  });
  rec.run("decoherence over the transversal", [&]() -> json {
    DecoheredObject obj(2, data.transversal());
    Matrix dec = decohere_map(2, g, h);
    Matrix discard = discard_map(2, g, h).realized();
    bool ok = obj.tuple_indices().size() == 8 && compose(dec, dec) == dec && compose(discard, dec) == discard &&
              discard.cols() == 64;
    if (ok) return nullptr;
    return json{{"tuples", obj.tuple_indices().size()}};
  });
}

using SuiteFn = void (*)(Recorder&, Rng&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"field-axioms", field_axioms},
      {"norm-laws", norm_laws},
      {"lattice-correspondence", lattice_correspondence},
      {"folding-functoriality", folding_functoriality},
      {"equivariance", equivariance},
      {"factorization", factorization},
      {"env-closure", env_closure},
      {"dec-idempotence", dec_idempotence},
      {"join-law", join_law},
      {"scalar-formula", scalar_formula},
      {"cyclo5-soundness", cyclo5_soundness},
      {"cyclo7-soundness", cyclo7_soundness},
      {"completeness-search", completeness_search},
      {"finite-field-exhaustive", finite_field_exhaustive},
      {"s3-transversal", s3_transversal},
  };
  return suites;
}

}  // namespace

std::string VerificationReport::to_json() const {
  json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["cases"] = cases;
  j["passed"] = passed();
  j["failures"] = json::array();
  for (const auto& f : failures) j["failures"].push_back(json::parse(f));
  return j.dump();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

VerificationReport run_suite(const std::string& name, std::uint64_t seed) {
  const auto& suites = registry();
  auto it = std::find_if(suites.begin(), suites.end(), [&](const auto& s) { return s.first == name; });
  if (it == suites.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  VerificationReport report;
  report.suite = name;
  report.seed = seed;
  std::seed_seq sequence{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(it - suites.begin())};
  Rng rng(sequence);
  Recorder rec(report);
  const auto start = std::chrono::steady_clock::now();
  it->second(rec, rng);
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<VerificationReport> verify_all(std::uint64_t seed, const std::string& filter) {
  std::vector<VerificationReport> out;
  for (const auto& name : suite_names()) {
    if (filter.empty() || filter == name) out.push_back(run_suite(name, seed));
  }
  if (!filter.empty() && out.empty()) throw std::invalid_argument("unknown suite '" + filter + "'");
  return out;
}

}  // namespace galois_cpm::cli
