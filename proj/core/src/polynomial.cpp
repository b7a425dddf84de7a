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

#include "galois_cpm/polynomial.hpp"

#include <algorithm>

#include "galois_cpm/errors.hpp"
#include "galois_cpm/linear_algebra.hpp"

namespace galois_cpm {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial(std::vector<Rational>{c});
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::linear_root(const Rational& root) {
  return RationalPolynomial({-root, Rational(1)});
}

Rational RationalPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return *this;
  Rational lc = leading();
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c /= lc;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  }
  return RationalPolynomial(std::move(v));
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::operator-() const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c = -c;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) + b.coefficient(i);
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  return a + (-b);
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p) {
  return RationalPolynomial::constant(c) * p;
}

std::pair<RationalPolynomial, RationalPolynomial> RationalPolynomial::divmod(
    const RationalPolynomial& divisor) const {
  if (divisor.is_zero()) {
    throw AlgebraError(ErrorCode::kDivisionByZero, "polynomial division by zero");
  }
  std::vector<Rational> rem = coeffs_;
  int dd = divisor.degree();
  if (degree() < dd) return {RationalPolynomial(), *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
  const Rational& lc = divisor.leading();
  for (int k = degree(); k >= dd; --k) {
    Rational c = rem[static_cast<std::size_t>(k)] / lc;
    quot[static_cast<std::size_t>(k - dd)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

std::string RationalPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    bool negative = c.sign() < 0;
    Rational mag = c.abs();
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    bool unit = mag == Rational(1);
    if (!unit || k == 0) {
      out += mag.is_integer() ? mag.numerator().get_str() : mag.numerator().get_str() + "/" + mag.denominator().get_str();
      if (k > 0) out += "*";
    }
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalPolynomial squarefree_part(const RationalPolynomial& f) {
  if (f.degree() <= 0) return f.monic();
  auto g = gcd(f, f.derivative());
  return f.divmod(g).first.monic();
}

ExtendedGcd extended_gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial r0 = a, r1 = b;
  RationalPolynomial s0 = RationalPolynomial::constant(1), s1;
  RationalPolynomial t0, t1 = RationalPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational lc = r0.leading().inverse();
  return {lc * r0, lc * s0, lc * t0};
}

std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& f) {
  std::vector<RationalPolynomial> seq{f, f.derivative()};
  while (!seq.back().is_zero()) {
    auto r = seq[seq.size() - 2].divmod(seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

namespace {

// Sign of p at -inf (at_plus=false) or +inf.
int sign_at_infinity(const RationalPolynomial& p, bool at_plus) {
  if (p.is_zero()) return 0;
  int s = p.leading().sign();
  if (!at_plus && p.degree() % 2 == 1) s = -s;
  return s;
}

int variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at(const std::vector<RationalPolynomial>& seq, const std::optional<Rational>& x,
                  bool plus_infinity) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& p : seq) {
    signs.push_back(x ? p.evaluate(*x).sign() : sign_at_infinity(p, plus_infinity));
  }
  return variations(signs);
}

}  // namespace

int sturm_root_count(const RationalPolynomial& f, const RealInterval& interval) {
  if (f.is_zero()) throw AlgebraError(ErrorCode::kZeroPolynomial, "Sturm count of the zero polynomial");
  if (f.degree() == 0) return 0;
  if (interval.lo && interval.hi && *interval.hi <= *interval.lo) return 0;
  auto seq = sturm_sequence(squarefree_part(f));
  return variations_at(seq, interval.lo, false) - variations_at(seq, interval.hi, true);
}

Rational resultant(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  const int m = a.degree(), n = b.degree();
  if (m == 0 && n == 0) return Rational(1);
  if (m == 0) return a.leading().pow(static_cast<unsigned long>(n));
  if (n == 0) return b.leading().pow(static_cast<unsigned long>(m));
  const auto size = static_cast<std::size_t>(m + n);
  DenseRationalMatrix s(size, size);
  // Rows 0..n-1 carry shifted copies of a, rows n..n+m-1 copies of b, highest
  // coefficient first.
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) {
      s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + k)) = a.coefficient(static_cast<std::size_t>(m - k));
    }
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) {
      s(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r + k)) = b.coefficient(static_cast<std::size_t>(n - k));
    }
  }
  return determinant(s);
}

Rational discriminant(const RationalPolynomial& f) {
  const int n = f.degree();
  if (n < 1) throw AlgebraError(ErrorCode::kZeroPolynomial, "discriminant of a constant");
  if (n == 1) return Rational(1);
  Rational r = resultant(f, f.derivative()) / f.leading();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

}  // namespace galois_cpm
