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

// Polynomials over GF(p) as residue vectors, lowest degree first. Internal
// to the library.

#pragma once

#include <utility>
#include <vector>

#include "galois_cpm/linear_algebra.hpp"

namespace galois_cpm::gfp {

using Poly = std::vector<long>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline long mod(long v, long p) { return ((v % p) + p) % p; }

inline Poly mul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

inline Poly sub(const Poly& a, const Poly& b, long p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    long x = i < a.size() ? a[i] : 0;
    long y = i < b.size() ? b[i] : 0;
    out[i] = mod(x - y, p);
  }
  trim(out);
  return out;
}

/// (quotient, remainder); divisor must be non-zero.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, long p) {
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  long inv = inverse_mod(b.back(), p);
  for (std::size_t k = a.size() - 1;; --k) {
    long c = a[k] * inv % p;
    q[k - (b.size() - 1)] = c;
    if (c != 0) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::size_t idx = k - (b.size() - 1) + j;
        a[idx] = mod(a[idx] - c * b[j], p);
      }
    }
    if (k == b.size() - 1) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

/// s with s*a = 1 mod m, assuming gcd(a, m) = 1.
inline Poly inverse(const Poly& a, const Poly& m, long p) {
  Poly r0 = m, r1 = a, t0{}, t1{1};
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::exchange(r1, r);
    t0 = std::exchange(t1, sub(t0, mul(q, t1, p), p));
  }
  // r0 is a non-zero constant when gcd is 1.
  long c = inverse_mod(r0.at(0), p);
  for (auto& v : t0) v = v * c % p;
  trim(t0);
  return t0;
}

}  // namespace galois_cpm::gfp
