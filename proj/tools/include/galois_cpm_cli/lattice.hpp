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
#include <string>
#include <vector>

#include "galois_cpm/group.hpp"

namespace galois_cpm::cli {

enum class LatticeFormat { kDot, kJson };

/// One subgroup H of the lattice together with its fixed field.
struct LatticeNode {
  Subgroup subgroup;
  std::size_t fixed_degree;               // [G : H]
  std::string fixed_field;                // "GF(q)" or a min poly in x
  std::optional<Rational> discriminant;   // number fields only
  std::string signature;                  // totally_real, totally_imaginary, mixed, finite
  std::string semiring;                   // totally_positive or whole_field
};

struct LatticeSummary {
  std::string field;
  std::size_t group_order;
  std::vector<LatticeNode> nodes;                           // lattice order
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (smaller, larger)
};

LatticeSummary summarize_lattice(const FieldPtr& field);
std::string emit_lattice(const FieldPtr& field, LatticeFormat format);

}  // namespace galois_cpm::cli
