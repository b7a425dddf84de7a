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

#include <string_view>

#include "galois_cpm/field.hpp"

namespace galois_cpm::cli {

/// Parses polynomial expressions such as "1-z", "1/2+3z^2" or "a^2*w - 1".
/// Variables: z (the generator of a cyclotomic or finite context) or a, w
/// (alpha and omega of the sextic field). Supports + - * / ^, parentheses
/// and implicit multiplication. Throws AlgebraError(kParse).
FieldElement parse_expression(std::string_view text, const FieldPtr& field);

}  // namespace galois_cpm::cli
