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

#include "galois_cpm/finite_field.hpp"

#include <algorithm>

#include "galois_cpm/errors.hpp"
#include "gfp_poly.hpp"

namespace galois_cpm {

namespace {

// All monic polynomials of the given degree, in lexicographic order of
// (c_{d-1}, ..., c_0).
std::vector<gfp::Poly> monic_polynomials(long p, int degree) {
  std::vector<gfp::Poly> out;
  const long count = ff_order(p, degree);
  for (long code = 0; code < count; ++code) {
    gfp::Poly f(static_cast<std::size_t>(degree) + 1, 0);
    f[static_cast<std::size_t>(degree)] = 1;
    long rest = code;
    // the last digit of the code is c_0, the most significant is c_{d-1}
    for (int i = 0; i < degree; ++i) {
      f[static_cast<std::size_t>(i)] = rest % p;
      rest /= p;
    }
    out.push_back(std::move(f));
  }
  return out;
}

bool irreducible(const gfp::Poly& f, long p) {
  const int m = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= m / 2; ++d) {
    for (const auto& g : monic_polynomials(p, d)) {
      if (gfp::divmod(f, g, p).second.empty()) return false;
    }
  }
  return true;
}

}  // namespace

long ff_order(long p, int k) {
  long q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  return q;
}

std::vector<long> least_monic_irreducible(long p, int m) {
  if (!is_prime(p)) throw AlgebraError(ErrorCode::kInvalidPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw AlgebraError(ErrorCode::kInvalidDegree, "extension degree must be >= 1");
  for (const auto& f : monic_polynomials(p, m)) {
    if (irreducible(f, p)) return f;
  }
  throw AlgebraError(ErrorCode::kSearchExhausted, "no irreducible polynomial found");
}

std::vector<FieldElement> ff_elements(const FieldPtr& ctx) {
  if (ctx->kind() != FieldKind::kFinite) throw AlgebraError(ErrorCode::kUnsupportedField, "finite field expected");
  const long p = ctx->characteristic();
  const std::size_t m = ctx->degree();
  const long q = ff_order(p, static_cast<int>(m));
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(q));
  for (long code = 0; code < q; ++code) {
    Coords c;
    c.num.assign(m, 0);
    long rest = code;
    for (std::size_t i = m; i-- > 0;) {
      c.num[i] = rest % p;
      rest /= p;
    }
    out.emplace_back(ctx, std::move(c));
  }
  return out;
}

FieldElement ff_norm(const FieldElement& a, int base_degree) {
  const auto& f = a.field();
  const int m = static_cast<int>(f->degree());
  if (base_degree < 1 || m % base_degree != 0) {
    throw AlgebraError(ErrorCode::kInvalidDegree, std::to_string(base_degree) + " does not divide " + std::to_string(m));
  }
  const long p = f->characteristic();
  const long q = ff_order(p, base_degree);
  const long top = ff_order(p, m);
  return a.pow(static_cast<unsigned long>((top - 1) / (q - 1)));
}

std::vector<FieldElement> ff_norm_image(const FieldPtr& ctx, int base_degree) {
  std::vector<FieldElement> image;
  for (const auto& a : ff_elements(ctx)) image.push_back(ff_norm(a, base_degree));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image;
}

}  // namespace galois_cpm
