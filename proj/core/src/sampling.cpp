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

#include "galois_cpm/sampling.hpp"

namespace galois_cpm {

long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational random_rational(Rng& rng, const SampleOptions& opts) {
  long num = uniform_int(rng, -opts.height, opts.height);
  long den = opts.integral ? 1 : uniform_int(rng, 1, opts.height);
  return Rational(num, den);
}

FieldElement random_element(const FieldPtr& f, Rng& rng, const SampleOptions& opts) {
  while (true) {
    std::vector<Rational> coords;
    for (std::size_t i = 0; i < f->degree(); ++i) {
      // Finite fields: uniform residues.
      coords.push_back(f->kind() == FieldKind::kFinite ? Rational(uniform_int(rng, 0, f->characteristic() - 1))
                                                       : random_rational(rng, opts));
    }
    FieldElement a = FieldElement::from_rationals(f, coords);
    if (!opts.nonzero || !a.is_zero()) return a;
  }
}

Matrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, Rng& rng, const SampleOptions& opts) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, random_element(f, rng, opts));
  }
  return m;
}

}  // namespace galois_cpm
