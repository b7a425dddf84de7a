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

#include <random>

#include "galois_cpm/field.hpp"
#include "galois_cpm/matrix.hpp"

namespace galois_cpm {

using Rng = std::mt19937_64;

struct SampleOptions {
  int height = 5;          // |numerator|, denominator <= height
  bool integral = false;   // denominators fixed to 1
  bool nonzero = false;
};

/// Uniform integer in [lo, hi].
long uniform_int(Rng& rng, long lo, long hi);

Rational random_rational(Rng& rng, const SampleOptions& opts = {});
FieldElement random_element(const FieldPtr& f, Rng& rng, const SampleOptions& opts = {});
Matrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, Rng& rng, const SampleOptions& opts = {});

}  // namespace galois_cpm
