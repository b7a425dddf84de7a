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

#include <string>

#include "galois_cpm/field.hpp"
#include "galois_cpm/matrix.hpp"

namespace galois_cpm {

// JSON text forms. Rationals are exact "p/q" strings; parse errors throw
// AlgebraError(kParse).

std::string field_spec_to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const std::string& text);

/// {"field": {...}, "coords": ["p/q", ...]}
std::string element_to_json(const FieldElement& a);
FieldElement element_from_json(const std::string& text);

/// {"rows": r, "cols": c, "field": {...}, "entries": [[elem, ...], ...]}
std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);

}  // namespace galois_cpm
