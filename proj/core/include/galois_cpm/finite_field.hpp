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

#include <vector>

#include "galois_cpm/field.hpp"

namespace galois_cpm {

/// GF(p^m) with the lexicographically least monic irreducible modulus.
inline FieldPtr ff_context(long p, int m) { return Field::finite(p, m); }

/// Every element of a finite context, in lexicographic coordinate order.
std::vector<FieldElement> ff_elements(const FieldPtr& ctx);

/// p^k as a machine integer.
long ff_order(long p, int k);

/// N(a) = a^{(q^m' - 1)/(q - 1)} from GF(p^m) down to GF(q), q = p^base_degree.
FieldElement ff_norm(const FieldElement& a, int base_degree);

/// Image of ff_norm over all of GF(p^m), sorted and deduplicated. Throws
/// invalid-degree when base_degree does not divide m.
std::vector<FieldElement> ff_norm_image(const FieldPtr& ctx, int base_degree);

}  // namespace galois_cpm
