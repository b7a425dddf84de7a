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
#include "galois_cpm/linear_algebra.hpp"
#include "galois_cpm/polynomial.hpp"

namespace galois_cpm {

/// Matrix of x -> a x in the context basis.
DenseRationalMatrix mult_matrix(const FieldElement& a);

/// det(mult_matrix(a)); a residue in [0, p) for finite fields.
Rational norm_full(const FieldElement& a);

/// Product of the images of a under the listed automorphisms.
FieldElement product_of_conjugates(const FieldElement& a, const std::vector<GroupElement>& elements);

/// Minimal polynomial over Q from the first linear dependency among the
/// powers of a. Characteristic 0 only.
RationalPolynomial min_poly(const FieldElement& a);

/// True iff a = 0 or a is positive under every real embedding of Q(a), i.e.
/// min_poly(a) has no root in (-inf, 0]. Vacuously true when min_poly(a)
/// has no real roots.
bool is_totally_positive(const FieldElement& a);

/// Q(a) admits a real embedding (min_poly(a) has a real root).
bool generates_formally_real_field(const FieldElement& a);

/// a^e for a signed exponent; negative exponents invert.
FieldElement power(const FieldElement& a, long exponent);

}  // namespace galois_cpm
