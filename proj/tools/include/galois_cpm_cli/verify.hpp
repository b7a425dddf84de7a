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

#include <cstdint>
#include <string>
#include <vector>

namespace galois_cpm::cli {

struct VerificationReport {
  std::string suite;
  std::size_t cases = 0;
  /// Serialized counterexamples, one JSON object per failure.
  std::vector<std::string> failures;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;

  bool passed() const { return failures.empty(); }
  /// Deterministic JSON (elapsed time excluded).
  std::string to_json() const;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Throws std::invalid_argument for an unknown suite.
VerificationReport run_suite(const std::string& name, std::uint64_t seed);

/// Every suite in fixed order, or only `filter` when non-empty.
std::vector<VerificationReport> verify_all(std::uint64_t seed, const std::string& filter = {});

}  // namespace galois_cpm::cli
