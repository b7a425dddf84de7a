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

#include "galois_cpm/field.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "galois_cpm/errors.hpp"
#include "gfp_poly.hpp"

namespace galois_cpm {

RationalPolynomial cyclotomic_polynomial(long n) {
  if (n < 1) throw AlgebraError(ErrorCode::kInvalidConductor, "conductor " + std::to_string(n));
  // x^n - 1
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c[0] = Rational(-1);
  c[static_cast<std::size_t>(n)] = Rational(1);
  RationalPolynomial num(std::move(c));
  RationalPolynomial den = RationalPolynomial::constant(1);
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) den = den * cyclotomic_polynomial(d);
  }
  auto [q, r] = num.divmod(den);
  if (!r.is_zero()) throw AlgebraError(ErrorCode::kInvalidConductor, "inexact cyclotomic division");
  return q;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

// x^e reduced modulo a monic integer polynomial, as dense integer vectors
// for e = 0..count-1.
std::vector<std::vector<Integer>> reduced_powers(const std::vector<Integer>& monic, std::size_t count) {
  const std::size_t d = monic.size() - 1;
  std::vector<std::vector<Integer>> out;
  std::vector<Integer> cur(d, 0);
  if (d > 0) cur[0] = 1;
  for (std::size_t e = 0; e < count; ++e) {
    out.push_back(cur);
    // multiply by x
    Integer top = d > 0 ? cur[d - 1] : Integer(0);
    for (std::size_t i = d; i-- > 1;) cur[i] = cur[i - 1];
    if (d > 0) cur[0] = 0;
    if (top != 0) {
      for (std::size_t i = 0; i < d; ++i) cur[i] -= top * monic[i];
    }
  }
  return out;
}

std::vector<Integer> integer_coefficients(const RationalPolynomial& p) {
  std::vector<Integer> out;
  for (const auto& c : p.coefficients()) {
    if (!c.is_integer()) throw AlgebraError(ErrorCode::kUnsupportedField, "non-integral defining polynomial");
    out.push_back(c.numerator());
  }
  return out;
}

}  // namespace

Coords Field::dense_from_sparse(const SparseVector& v) const {
  Coords c;
  c.num.assign(degree_, 0);
  for (const auto& t : v) c.num[t.index] += t.coefficient;
  return c;
}

FieldPtr Field::cyclotomic(long n) {
  if (n < 2) throw AlgebraError(ErrorCode::kInvalidConductor, "conductor must be >= 2, got " + std::to_string(n));
  std::shared_ptr<Field> f(new Field());
  f->spec_ = FieldSpec{FieldKind::kCyclotomic, n, 0, 0};
  f->defining_ = cyclotomic_polynomial(n);
  const auto d = static_cast<std::size_t>(f->defining_.degree());
  f->degree_ = d;
  auto monic = integer_coefficients(f->defining_);
  auto powers = reduced_powers(monic, std::max<std::size_t>(static_cast<std::size_t>(n), 2 * d - 1));
  auto sparse = [](const std::vector<Integer>& v) {
    SparseVector s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) s.push_back({i, v[i]});
    }
    return s;
  };
  f->raw_size_ = 2 * d - 1;
  f->raw_index_.resize(d * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t s = 0; s < d; ++s) f->raw_index_[r * d + s] = r + s;
  }
  for (std::size_t k = 0; k < f->raw_size_; ++k) f->reduce_.push_back(sparse(powers[k]));

  for (long k = 1; k < n; ++k) {
    if (std::gcd(k, n) == 1) f->units_.push_back(k);
  }
  for (long k : f->units_) {
    f->aut_labels_.push_back(std::to_string(k));
    std::vector<SparseVector> images;
    for (std::size_t i = 0; i < d; ++i) {
      images.push_back(sparse(powers[static_cast<std::size_t>((k * static_cast<long>(i)) % n)]));
    }
    f->aut_images_.push_back(std::move(images));
  }
  f->build_group_tables();
  return f;
}

FieldPtr Field::finite(long p, int m) {
  if (!is_prime(p)) throw AlgebraError(ErrorCode::kInvalidPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw AlgebraError(ErrorCode::kInvalidDegree, "extension degree must be >= 1");
  std::shared_ptr<Field> f(new Field());
  f->spec_ = FieldSpec{FieldKind::kFinite, 0, p, m};
  f->modulus_ = least_monic_irreducible(p, m);
  std::vector<Rational> lifted;
  std::vector<Integer> monic;
  for (long c : f->modulus_) {
    lifted.emplace_back(c);
    monic.emplace_back(c);
  }
  f->defining_ = RationalPolynomial(std::move(lifted));
  const auto d = static_cast<std::size_t>(m);
  f->degree_ = d;

  auto reduce_vec = [p](std::vector<Integer> v) {
    SparseVector s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      Integer r = v[i] % p;
      if (r < 0) r += p;
      if (r != 0) s.push_back({i, r});
    }
    return s;
  };
  auto powers = reduced_powers(monic, 2 * d - 1);
  f->raw_size_ = 2 * d - 1;
  f->raw_index_.resize(d * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t s = 0; s < d; ++s) f->raw_index_[r * d + s] = r + s;
  }
  for (std::size_t k = 0; k < f->raw_size_; ++k) f->reduce_.push_back(reduce_vec(powers[k]));

  // Frobenius powers: x^i -> x^{i p^j} mod the modulus.
  gfp::Poly mod_poly = f->modulus_;
  auto powmod = [&](gfp::Poly base, unsigned long e) {
    gfp::Poly result{1};
    while (e > 0) {
      if (e & 1UL) result = gfp::divmod(gfp::mul(result, base, p), mod_poly, p).second;
      base = gfp::divmod(gfp::mul(base, base, p), mod_poly, p).second;
      e >>= 1;
    }
    return result;
  };
  for (int j = 0; j < m; ++j) {
    f->aut_labels_.push_back("F^" + std::to_string(j));
    unsigned long pj = 1;
    for (int t = 0; t < j; ++t) pj *= static_cast<unsigned long>(p);
    std::vector<SparseVector> images;
    gfp::Poly x_image = powmod(gfp::Poly{0, 1}, pj);
    if (d == 1) x_image = gfp::divmod(gfp::Poly{0, 1}, mod_poly, p).second;
    for (std::size_t i = 0; i < d; ++i) {
      gfp::Poly img = powmod(x_image, i);
      std::vector<Integer> dense(d, 0);
      for (std::size_t k = 0; k < img.size() && k < d; ++k) dense[k] = img[k];
      images.push_back(reduce_vec(dense));
    }
    f->aut_images_.push_back(std::move(images));
  }
  f->build_group_tables();
  return f;
}

FieldPtr Field::sextic_s3() {
  std::shared_ptr<Field> f(new Field());
  f->spec_ = FieldSpec{FieldKind::kSexticS3, 0, 0, 0};
  f->degree_ = 6;
  // x^6 + 108, the minimal polynomial of alpha * (1 + 2 omega) = alpha*sqrt(-3);
  // informational only, arithmetic uses the two rewrite rules.
  f->defining_ = RationalPolynomial({Rational(108), 0, 0, 0, 0, 0, Rational(1)});
  auto index = [](std::size_t i, std::size_t j) { return i * 2 + j; };
  // omega^e for e = 0, 1, 2 as (j, coefficient) pairs.
  const std::vector<std::vector<std::pair<std::size_t, long>>> omega_pow = {
      {{0, 1}}, {{1, 1}}, {{0, -1}, {1, -1}}};
  f->raw_size_ = 5 * 3;
  f->raw_index_.resize(36);
  for (std::size_t i1 = 0; i1 < 3; ++i1) {
    for (std::size_t j1 = 0; j1 < 2; ++j1) {
      for (std::size_t i2 = 0; i2 < 3; ++i2) {
        for (std::size_t j2 = 0; j2 < 2; ++j2) {
          f->raw_index_[index(i1, j1) * 6 + index(i2, j2)] = (i1 + i2) * 3 + (j1 + j2);
        }
      }
    }
  }
  f->reduce_.resize(f->raw_size_);
  for (std::size_t I = 0; I < 5; ++I) {
    for (std::size_t J = 0; J < 3; ++J) {
      Integer scale = I >= 3 ? 2 : 1;
      for (auto [jj, c] : omega_pow[J]) {
        f->reduce_[I * 3 + J].push_back({index(I % 3, jj), scale * c});
      }
    }
  }
  // tau^a sigma^b : alpha -> alpha omega^a, omega -> omega^{1+b}.
  const char* labels[3][2] = {{"id", "s"}, {"t", "ts"}, {"t^2", "t^2s"}};
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      f->aut_labels_.emplace_back(labels[a][b]);
      std::vector<SparseVector> images;
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
          std::size_t e = (a * i + (1 + b) * j) % 3;
          SparseVector img;
          for (auto [jj, c] : omega_pow[e]) img.push_back({index(i, jj), Integer(c)});
          images.push_back(std::move(img));
        }
      }
      f->aut_images_.push_back(std::move(images));
    }
  }
  f->build_group_tables();
  return f;
}

FieldPtr Field::from_spec(const FieldSpec& spec) {
  switch (spec.kind) {
    case FieldKind::kCyclotomic: return cyclotomic(spec.conductor);
    case FieldKind::kFinite: return finite(spec.prime, spec.degree_over_prime);
    case FieldKind::kSexticS3: return sextic_s3();
  }
  throw AlgebraError(ErrorCode::kUnsupportedField, "unknown field kind");
}

void Field::build_group_tables() {
  // Compose automorphisms by acting on the basis and matching images.
  const std::size_t count = aut_images_.size();
  aut_table_.assign(count, std::vector<std::size_t>(count, 0));
  auto image_coords = [&](std::size_t g, std::size_t i) { return dense_from_sparse(aut_images_[g][i]); };
  for (std::size_t g = 0; g < count; ++g) {
    for (std::size_t h = 0; h < count; ++h) {
      std::vector<Coords> composed;
      for (std::size_t i = 0; i < degree_; ++i) composed.push_back(apply(image_coords(h, i), GroupElement{g}));
      std::size_t found = count;
      for (std::size_t k = 0; k < count && found == count; ++k) {
        bool match = true;
        for (std::size_t i = 0; i < degree_ && match; ++i) {
          Coords c = image_coords(k, i);
          normalize(c);
          match = c == composed[i];
        }
        if (match) found = k;
      }
      if (found == count) throw AlgebraError(ErrorCode::kNotInGroup, "automorphisms not closed");
      aut_table_[g][h] = found;
    }
  }
  aut_inverse_.assign(count, 0);
  for (std::size_t g = 0; g < count; ++g) {
    for (std::size_t h = 0; h < count; ++h) {
      if (aut_table_[g][h] == 0) aut_inverse_[g] = h;
    }
  }
}

std::string Field::description() const {
  switch (spec_.kind) {
    case FieldKind::kCyclotomic: return "Q(zeta_" + std::to_string(spec_.conductor) + ")";
    case FieldKind::kFinite: {
      long q = 1;
      for (int i = 0; i < spec_.degree_over_prime; ++i) q *= spec_.prime;
      return "GF(" + std::to_string(q) + ")";
    }
    case FieldKind::kSexticS3: return "Q(alpha, omega)";
  }
  return "?";
}

std::string Field::basis_label(std::size_t i) const {
  if (spec_.kind == FieldKind::kSexticS3) {
    std::size_t a = i / 2, w = i % 2;
    std::string s;
    if (a == 1) s += "a";
    if (a == 2) s += "a^2";
    if (w == 1) s += s.empty() ? "w" : "*w";
    return s.empty() ? "1" : s;
  }
  if (i == 0) return "1";
  if (i == 1) return "z";
  return "z^" + std::to_string(i);
}

const std::string& Field::automorphism_label(GroupElement g) const {
  if (g.index >= aut_labels_.size()) throw AlgebraError(ErrorCode::kNotInGroup, "element index out of range");
  return aut_labels_[g.index];
}

GroupElement Field::compose(GroupElement g, GroupElement h) const {
  if (g.index >= aut_table_.size() || h.index >= aut_table_.size()) {
    throw AlgebraError(ErrorCode::kNotInGroup, "element index out of range");
  }
  return GroupElement{aut_table_[g.index][h.index]};
}

GroupElement Field::inverse(GroupElement g) const {
  if (g.index >= aut_inverse_.size()) throw AlgebraError(ErrorCode::kNotInGroup, "element index out of range");
  return GroupElement{aut_inverse_[g.index]};
}

long Field::unit_of(GroupElement g) const {
  if (spec_.kind != FieldKind::kCyclotomic) throw AlgebraError(ErrorCode::kUnsupportedField, "units only label cyclotomic automorphisms");
  if (g.index >= units_.size()) throw AlgebraError(ErrorCode::kNotInGroup, "element index out of range");
  return units_[g.index];
}

GroupElement Field::element_for_unit(long k) const {
  if (spec_.kind != FieldKind::kCyclotomic) throw AlgebraError(ErrorCode::kUnsupportedField, "units only label cyclotomic automorphisms");
  long n = spec_.conductor;
  long r = ((k % n) + n) % n;
  auto it = std::find(units_.begin(), units_.end(), r);
  if (it == units_.end()) throw AlgebraError(ErrorCode::kNotInGroup, std::to_string(k) + " is not a unit mod " + std::to_string(n));
  return GroupElement{static_cast<std::size_t>(it - units_.begin())};
}

GroupElement Field::frobenius_power(long j) const {
  if (spec_.kind != FieldKind::kFinite) throw AlgebraError(ErrorCode::kUnsupportedField, "Frobenius only on finite fields");
  long m = spec_.degree_over_prime;
  return GroupElement{static_cast<std::size_t>(((j % m) + m) % m)};
}

GroupElement Field::s3_element(int tau_exp, int sigma_exp) const {
  if (spec_.kind != FieldKind::kSexticS3) throw AlgebraError(ErrorCode::kUnsupportedField, "S3 words only on the sextic field");
  int a = ((tau_exp % 3) + 3) % 3;
  int b = ((sigma_exp % 2) + 2) % 2;
  return GroupElement{static_cast<std::size_t>(a * 2 + b)};
}

GroupElement Field::parse_element(const std::string& label) const {
  for (std::size_t i = 0; i < aut_labels_.size(); ++i) {
    if (aut_labels_[i] == label) return GroupElement{i};
  }
  try {
    if (spec_.kind == FieldKind::kCyclotomic) return element_for_unit(std::stol(label));
    if (spec_.kind == FieldKind::kFinite) return frobenius_power(std::stol(label));
  } catch (const std::invalid_argument&) {
  } catch (const std::out_of_range&) {
  }
  if (spec_.kind == FieldKind::kSexticS3) {
    if (label == "t^-1") return s3_element(2, 0);
    if (label == "e" || label == "1") return GroupElement{0};
  }
  throw AlgebraError(ErrorCode::kNotInGroup, "unknown group element '" + label + "' for " + description());
}

Coords Field::zero() const {
  Coords c;
  c.num.assign(degree_, 0);
  return c;
}

Coords Field::one() const { return basis_vector(0); }

Coords Field::basis_vector(std::size_t i) const {
  Coords c = zero();
  c.num.at(i) = 1;
  return c;
}

Coords Field::from_rational(const Rational& q) const {
  std::vector<Rational> v(degree_);
  v[0] = q;
  return from_rationals(v);
}

Coords Field::from_rationals(const std::vector<Rational>& values) const {
  if (values.size() != degree_) {
    throw AlgebraError(ErrorCode::kDimensionMismatch, "expected " + std::to_string(degree_) + " coordinates");
  }
  Coords c;
  if (spec_.kind == FieldKind::kFinite) {
    const long p = spec_.prime;
    for (const auto& v : values) {
      Integer den_mod = v.denominator() % p;
      if (den_mod == 0) throw AlgebraError(ErrorCode::kDivisionByZero, "denominator divisible by p");
      long inv = inverse_mod(den_mod.get_si(), p);
      Integer r = (v.numerator() % p) * inv % p;
      if (r < 0) r += p;
      c.num.push_back(r);
    }
    c.den = 1;
    return c;
  }
  Integer den = 1;
  for (const auto& v : values) den = lcm(den, v.denominator());
  for (const auto& v : values) c.num.push_back(v.numerator() * (den / v.denominator()));
  c.den = den;
  normalize(c);
  return c;
}

void Field::reduce_mod_prime(Coords& c) const {
  const long p = spec_.prime;
  for (auto& v : c.num) {
    v %= p;
    if (v < 0) v += p;
  }
  c.den = 1;
}

void Field::normalize(Coords& c) const {
  if (spec_.kind == FieldKind::kFinite) {
    reduce_mod_prime(c);
    return;
  }
  if (c.den < 0) {
    c.den = -c.den;
    for (auto& v : c.num) v = -v;
  }
  if (c.den == 1) return;
  Integer g = c.den;
  for (const auto& v : c.num) {
    if (g == 1) break;
    if (v != 0) g = gcd(g, v);
  }
  if (g != 1) {
    c.den /= g;
    for (auto& v : c.num) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

bool Field::is_zero(const Coords& c) const {
  return std::all_of(c.num.begin(), c.num.end(), [](const Integer& v) { return v == 0; });
}

Coords Field::add(const Coords& a, const Coords& b) const {
  Coords c;
  c.num.resize(degree_);
  if (a.den == b.den) {
    for (std::size_t i = 0; i < degree_; ++i) c.num[i] = a.num[i] + b.num[i];
    c.den = a.den;
  } else {
    for (std::size_t i = 0; i < degree_; ++i) c.num[i] = a.num[i] * b.den + b.num[i] * a.den;
    c.den = a.den * b.den;
  }
  normalize(c);
  return c;
}

Coords Field::neg(const Coords& a) const {
  Coords c = a;
  for (auto& v : c.num) v = -v;
  normalize(c);
  return c;
}

Coords Field::sub(const Coords& a, const Coords& b) const { return add(a, neg(b)); }

Coords Field::mul(const Coords& a, const Coords& b) const {
  std::vector<Integer> raw(raw_size_);
  for (std::size_t r = 0; r < degree_; ++r) {
    if (a.num[r] == 0) continue;
    for (std::size_t s = 0; s < degree_; ++s) {
      if (b.num[s] == 0) continue;
      mpz_addmul(raw[raw_index_[r * degree_ + s]].get_mpz_t(), a.num[r].get_mpz_t(), b.num[s].get_mpz_t());
    }
  }
  Coords c;
  c.num.resize(degree_);
  for (std::size_t k = 0; k < raw_size_; ++k) {
    if (raw[k] == 0) continue;
    for (const auto& t : reduce_[k]) {
      mpz_addmul(c.num[t.index].get_mpz_t(), raw[k].get_mpz_t(), t.coefficient.get_mpz_t());
    }
  }
  c.den = a.den * b.den;
  normalize(c);
  return c;
}

Coords Field::apply(const Coords& a, GroupElement g) const {
  if (g.index >= aut_images_.size()) {
    throw AlgebraError(ErrorCode::kNotInGroup, "automorphism index " + std::to_string(g.index) + " not in the group of " + description());
  }
  if (g.index == 0) return a;
  Coords c;
  c.num.resize(degree_);
  const auto& images = aut_images_[g.index];
  for (std::size_t i = 0; i < degree_; ++i) {
    if (a.num[i] == 0) continue;
    for (const auto& t : images[i]) {
      mpz_addmul(c.num[t.index].get_mpz_t(), a.num[i].get_mpz_t(), t.coefficient.get_mpz_t());
    }
  }
  c.den = a.den;
  normalize(c);
  return c;
}

Rational Field::coordinate(const Coords& a, std::size_t i) const { return Rational(a.num.at(i), a.den); }

DenseRationalMatrix Field::multiplication_matrix(const Coords& a) const {
  DenseRationalMatrix m(degree_, degree_);
  for (std::size_t j = 0; j < degree_; ++j) {
    Coords col = mul(a, basis_vector(j));
    for (std::size_t i = 0; i < degree_; ++i) m(i, j) = coordinate(col, i);
  }
  return m;
}

Coords Field::inv(const Coords& a) const {
  if (is_zero(a)) throw AlgebraError(ErrorCode::kDivisionByZero, "inverse of zero in " + description());
  switch (spec_.kind) {
    case FieldKind::kCyclotomic: return inv_by_euclid(a);
    case FieldKind::kFinite: return inv_finite(a);
    case FieldKind::kSexticS3: return inv_by_solve(a);
  }
  throw AlgebraError(ErrorCode::kUnsupportedField, "unknown field kind");
}

Coords Field::inv_by_euclid(const Coords& a) const {
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < degree_; ++i) coeffs.push_back(coordinate(a, i));
  auto eg = extended_gcd(RationalPolynomial(std::move(coeffs)), defining_);
  // s*a + t*Phi = 1
  std::vector<Rational> out(degree_);
  for (std::size_t i = 0; i < degree_; ++i) out[i] = eg.s.coefficient(i);
  return from_rationals(out);
}

Coords Field::inv_finite(const Coords& a) const {
  const long p = spec_.prime;
  gfp::Poly pa;
  for (const auto& v : a.num) pa.push_back(v.get_si());
  gfp::trim(pa);
  gfp::Poly s = gfp::inverse(pa, modulus_, p);
  Coords c = zero();
  for (std::size_t i = 0; i < s.size() && i < degree_; ++i) c.num[i] = s[i];
  return c;
}

Coords Field::inv_by_solve(const Coords& a) const {
  std::vector<Rational> rhs(degree_);
  rhs[0] = Rational(1);
  auto x = solve(multiplication_matrix(a), rhs);
  if (!x) throw AlgebraError(ErrorCode::kDivisionByZero, "singular multiplication map");
  return from_rationals(*x);
}

// --- FieldElement ------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, Coords coords) : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw AlgebraError(ErrorCode::kContextMismatch, "element without a field");
  if (coords_.num.size() != field_->degree()) {
    throw AlgebraError(ErrorCode::kDimensionMismatch, "coordinate count does not match the field degree");
  }
  field_->normalize(coords_);
}

FieldElement FieldElement::generator(const FieldPtr& f) {
  if (f->kind() == FieldKind::kSexticS3) return basis(f, 2) + basis(f, 1);
  if (f->degree() == 1) {
    // zeta_2 = -1; x mod x for GF(p)
    return f->kind() == FieldKind::kCyclotomic ? rational(f, Rational(-1)) : FieldElement(f, f->from_rational(Rational(-f->modulus()[0])));
  }
  return basis(f, 1);
}

std::vector<Rational> FieldElement::rational_coordinates() const {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < field_->degree(); ++i) out.push_back(coordinate(i));
  return out;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coords_.num.size(); ++i) {
    if (coords_.num[i] != 0) return false;
  }
  return true;
}

Rational FieldElement::as_rational() const {
  if (!is_rational()) throw AlgebraError(ErrorCode::kContextMismatch, to_string() + " is not in the prime field");
  return coordinate(0);
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!field_ || !o.field_ || !field_->same_as(*o.field_)) {
    throw AlgebraError(ErrorCode::kContextMismatch, "operands live in different fields");
  }
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(coords_)}; }

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  coords_ = field_->add(coords_, o.coords_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  coords_ = field_->sub(coords_, o.coords_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  coords_ = field_->mul(coords_, o.coords_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same(o);
  coords_ = field_->mul(coords_, field_->inv(o.coords_));
  return *this;
}

FieldElement FieldElement::inverse() const { return {field_, field_->inv(coords_)}; }

FieldElement FieldElement::pow(unsigned long exponent) const {
  FieldElement result = one(field_);
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

FieldElement FieldElement::apply(GroupElement g) const { return {field_, field_->apply(coords_, g)}; }

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (!a.field_ || !b.field_) return a.field_ == b.field_;
  return a.field_->same_as(*b.field_) && a.coords_ == b.coords_;
}

bool operator<(const FieldElement& a, const FieldElement& b) {
  for (std::size_t i = 0; i < a.coords_.num.size(); ++i) {
    int c = cmp(a.coords_.num[i] * b.coords_.den, b.coords_.num[i] * a.coords_.den);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string FieldElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.num.size(); ++i) {
    Rational c = coordinate(i);
    if (c.is_zero()) continue;
    bool negative = c.sign() < 0;
    Rational mag = c.abs();
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mag_str = mag.is_integer() ? mag.numerator().get_str() : mag.to_string();
    if (i == 0) {
      out += mag_str;
    } else {
      if (mag != Rational(1)) out += mag_str + "*";
      out += field_->basis_label(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.to_string(); }

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return a + b;
    case ArithOp::kSub: return a - b;
    case ArithOp::kMul: return a * b;
    case ArithOp::kDiv: return a / b;
  }
  throw AlgebraError(ErrorCode::kParse, "unknown arithmetic op");
}

}  // namespace galois_cpm
