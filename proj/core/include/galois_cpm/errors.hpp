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

#include <stdexcept>
#include <string>

namespace galois_cpm {

enum class ErrorCode {
  kInvalidConductor,
  kInvalidPrime,
  kInvalidDegree,
  kContextMismatch,
  kDivisionByZero,
  kNotInGroup,
  kParentMismatch,
  kBoundExceeded,
  kNotNormal,
  kSearchExhausted,
  kDimensionMismatch,
  kNotInvolution,
  kNotEquivariant,
  kNotDecohered,
  kInvalidTransversal,
  kInvalidPermutation,
  kUnsupportedField,
  kZeroPolynomial,
  kParse,
};

const char* error_code_name(ErrorCode code);

/// Every failure raised by the algebra layer. The code identifies the
/// contract that was violated; the message carries the offending values.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace galois_cpm
