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

#include <cmath>
#include <numbers>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include "galois_cpm/errors.hpp"
#include "galois_cpm/field_ops.hpp"
#include "galois_cpm/finite_field.hpp"
#include "galois_cpm/serialization.hpp"
#include "test_util.hpp"

namespace galois_cpm {
namespace {

using testing::as_polynomial;
using testing::compose_power;
using testing::reduce_mod;

// --- Rational ----------------------------------------------------------------

TEST(Rational, CanonicalForm) {
  Rational a(6, -4);
  EXPECT_EQ(a.numerator(), -3);
  EXPECT_EQ(a.denominator(), 2);
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ(Rational(5).to_string(), "5/1");
  EXPECT_EQ(Rational::parse(" -10/4 "), Rational(-5, 2));
  EXPECT_EQ(Rational(-7, 3).height(), 7);
  EXPECT_THROW(Rational(1, 0), AlgebraError);
  EXPECT_THROW(Rational::parse("1/x"), AlgebraError);
}

TEST(Rational, FieldLawsOnSamples) {
  Rng rng(1);
  for (int i = 0; i < 500; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

// --- Polynomials -------------------------------------------------------------

RationalPolynomial poly(std::initializer_list<long> low_to_high) {
  std::vector<Rational> c;
  for (long v : low_to_high) c.emplace_back(v);
  return RationalPolynomial(c);
}

TEST(Polynomial, DivmodIdentity) {
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> a, b;
    for (int k = 0; k < 6; ++k) a.push_back(random_rational(rng));
    for (int k = 0; k < 3; ++k) b.push_back(random_rational(rng));
    b.push_back(Rational(1));
    RationalPolynomial pa(a), pb(b);
    auto [q, r] = pa.divmod(pb);
    EXPECT_EQ(q * pb + r, pa);
    EXPECT_LT(r.degree(), pb.degree());
  }
}

TEST(Polynomial, DiscriminantsOfKnownFields) {
  EXPECT_EQ(discriminant(poly({-1, 1, 1})), Rational(5));
  EXPECT_EQ(discriminant(poly({-1, -2, 1, 1})), Rational(49));
  EXPECT_EQ(discriminant(poly({2, 1, 1})), Rational(-7));
  EXPECT_EQ(discriminant(cyclotomic_polynomial(5)), Rational(125));
  EXPECT_EQ(discriminant(cyclotomic_polynomial(7)), Rational(-16807));
}

TEST(Polynomial, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(5), poly({1, 1, 1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(8), poly({1, 0, 0, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), poly({1, 0, -1, 0, 1}));
  // x^n - 1 is the product of Phi_d over d | n.
  for (long n : {6L, 9L, 10L, 12L, 15L}) {
    RationalPolynomial prod = poly({1});
    for (long d = 1; d <= n; ++d) {
      if (n % d == 0) prod = prod * cyclotomic_polynomial(d);
    }
    RationalPolynomial xn = RationalPolynomial::monomial(Rational(1), static_cast<std::size_t>(n)) - poly({1});
    EXPECT_EQ(prod, xn) << n;
  }
}

TEST(Polynomial, GcdAndExtendedGcd) {
  auto a = poly({-1, 0, 1}) * poly({2, 1});
  auto b = poly({-1, 0, 1}) * poly({3, 1});
  EXPECT_EQ(gcd(a, b), poly({-1, 0, 1}));
  auto e = extended_gcd(a, b);
  EXPECT_EQ(e.s * a + e.t * b, e.g);
}

// Durand-Kerner in 100-digit binary floating point as an independent root oracle.
using Real = boost::multiprecision::cpp_bin_float_100;
struct Complex {
  Real re, im;
};
Complex operator*(const Complex& a, const Complex& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

std::vector<Complex> numeric_roots(const RationalPolynomial& f) {
  const auto m = f.monic();
  const int n = m.degree();
  std::vector<Real> c;
  for (const auto& q : m.coefficients()) c.push_back(Real(q.numerator().get_str()) / Real(q.denominator().get_str()));
  std::vector<Complex> z(static_cast<std::size_t>(n));
  Complex seed{Real("0.4"), Real("0.9")}, power{Real(1), Real(0)};
  for (auto& r : z) {
    r = power;
    power = power * seed;
  }
  for (int iter = 0; iter < 2000; ++iter) {
    for (std::size_t i = 0; i < z.size(); ++i) {
      Complex value{c.back(), Real(0)};
      for (int k = n - 1; k >= 0; --k) value = value * z[i] - Complex{-c[static_cast<std::size_t>(k)], Real(0)};
      Complex denom{Real(1), Real(0)};
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != i) denom = denom * (z[i] - z[j]);
      }
      z[i] = z[i] - value / denom;
    }
  }
  return z;
}

TEST(Sturm, AgreesWithNumericRootsOnRandomCubicsAndQuartics) {
  Rng rng(3);
  int checked = 0;
  while (checked < 100) {
    const int degree = checked % 2 == 0 ? 3 : 4;
    std::vector<Rational> c;
    for (int k = 0; k < degree; ++k) c.emplace_back(uniform_int(rng, -9, 9));
    c.emplace_back(uniform_int(rng, 1, 3));
    RationalPolynomial f(c);
    if (c.front().is_zero() || discriminant(f).is_zero()) continue;
    ++checked;
    const Real eps("1e-40");
    int real = 0, positive = 0, in_window = 0;
    const Real lo(-1), hi(2);
    bool near_edge = false;
    for (const auto& r : numeric_roots(f)) {
      if (abs(r.im) > eps) continue;
      ++real;
      if (r.re > 0) ++positive;
      if (r.re > lo && r.re <= hi) ++in_window;
      if (abs(r.re - lo) < Real("1e-20") || abs(r.re - hi) < Real("1e-20")) near_edge = true;
    }
    EXPECT_EQ(sturm_root_count(f, RealInterval::whole_line()), real) << f.to_string();
    EXPECT_EQ(sturm_root_count(f, RealInterval::positive()), positive) << f.to_string();
    EXPECT_EQ(sturm_root_count(f, RealInterval::non_positive()), real - positive) << f.to_string();
    if (!near_edge) {
      EXPECT_EQ(sturm_root_count(f, RealInterval{Rational(-1), Rational(2)}), in_window) << f.to_string();
    }
  }
}

TEST(Sturm, RepeatedRootsCountedOnce) {
  auto f = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1});
  EXPECT_EQ(sturm_root_count(f, RealInterval::whole_line()), 2);
  EXPECT_EQ(sturm_root_count(f, RealInterval::positive()), 1);
}

// --- Cyclotomic fields ---------------------------------------------------------

class CyclotomicOracle : public ::testing::TestWithParam<long> {};

TEST_P(CyclotomicOracle, MultiplicationMatchesPolynomialReduction) {
  const long n = GetParam();
  auto f = Field::cyclotomic(n);
  const auto phi = cyclotomic_polynomial(n);
  ASSERT_EQ(static_cast<int>(f->degree()), phi.degree());
  Rng rng(static_cast<std::uint64_t>(n));
  for (int i = 0; i < 200; ++i) {
    FieldElement a = random_element(f, rng), b = random_element(f, rng);
    EXPECT_EQ((a * b).rational_coordinates(), reduce_mod(as_polynomial(a) * as_polynomial(b), phi));
  }
}

TEST_P(CyclotomicOracle, AutomorphismsSubstituteZetaPower) {
  const long n = GetParam();
  auto f = Field::cyclotomic(n);
  const auto phi = cyclotomic_polynomial(n);
  Rng rng(static_cast<std::uint64_t>(n) + 100);
  GaloisGroup g(f);
  long previous = 0;
  for (const auto& x : g.elements()) {
    const long k = f->unit_of(x);
    EXPECT_GT(k, previous);  // canonical order is ascending units
    previous = k;
    EXPECT_EQ(f->automorphism_label(x), std::to_string(k));
    for (int i = 0; i < 20; ++i) {
      FieldElement a = random_element(f, rng);
      EXPECT_EQ(a.apply(x).rational_coordinates(), reduce_mod(compose_power(as_polynomial(a), static_cast<std::size_t>(k)), phi));
    }
  }
}

TEST_P(CyclotomicOracle, ZetaIsAPrimitiveRoot) {
  const long n = GetParam();
  auto f = Field::cyclotomic(n);
  FieldElement z = FieldElement::generator(f);
  EXPECT_TRUE(z.pow(static_cast<unsigned long>(n)).is_one());
  for (long d = 1; d < n; ++d) EXPECT_FALSE(z.pow(static_cast<unsigned long>(d)).is_one());
}

TEST_P(CyclotomicOracle, InverseAndNorm) {
  const long n = GetParam();
  auto f = Field::cyclotomic(n);
  Rng rng(static_cast<std::uint64_t>(n) + 200);
  GaloisGroup g(f);
  for (int i = 0; i < 50; ++i) {
    FieldElement a = random_element(f, rng, SampleOptions{5, false, true});
    EXPECT_TRUE((a * a.inverse()).is_one());
    FieldElement conj = product_of_conjugates(a, g.elements());
    ASSERT_TRUE(conj.is_rational());
    EXPECT_EQ(conj.as_rational(), norm_full(a));
  }
}

INSTANTIATE_TEST_SUITE_P(Conductors, CyclotomicOracle, ::testing::Values(3L, 4L, 5L, 7L, 8L, 9L, 12L, 15L, 16L));

TEST(Cyclotomic, NormOfOneMinusZetaIsPrime) {
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    auto f = Field::cyclotomic(p);
    EXPECT_EQ(norm_full(FieldElement::one(f) - FieldElement::generator(f)), Rational(p));
  }
  auto f = Field::cyclotomic(5);
  EXPECT_EQ(norm_full(FieldElement::rational(f, Rational(2))), Rational(16));
  EXPECT_EQ(norm_full(FieldElement::zero(f)), Rational(0));
}

TEST(Cyclotomic, Errors) {
  EXPECT_THROW(Field::cyclotomic(1), AlgebraError);
  auto f = Field::cyclotomic(5);
  EXPECT_THROW(FieldElement::zero(f).inverse(), AlgebraError);
  EXPECT_THROW(FieldElement::one(f) + FieldElement::one(Field::cyclotomic(7)), AlgebraError);
  try {
    f->element_for_unit(5);
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotInGroup);
  }
}

TEST(Cyclotomic, MinimalPolynomials) {
  auto f = Field::cyclotomic(5);
  FieldElement z = FieldElement::generator(f);
  EXPECT_EQ(min_poly(z + z.pow(4)), poly({-1, 1, 1}));
  EXPECT_EQ(min_poly(z), cyclotomic_polynomial(5));
  EXPECT_EQ(min_poly(FieldElement::rational(f, Rational(3, 2))), RationalPolynomial::linear_root(Rational(3, 2)));
  auto f7 = Field::cyclotomic(7);
  FieldElement w = FieldElement::generator(f7);
  EXPECT_EQ(min_poly(w + w.pow(6)), poly({-1, -2, 1, 1}));
  EXPECT_EQ(min_poly(w + w.pow(2) + w.pow(4)), poly({2, 1, 1}));
}

TEST(Cyclotomic, MinimalPolynomialAnnihilates) {
  Rng rng(9);
  for (long n : {5L, 7L, 12L}) {
    auto f = Field::cyclotomic(n);
    for (int i = 0; i < 30; ++i) {
      FieldElement a = random_element(f, rng);
      auto p = min_poly(a);
      FieldElement value = FieldElement::zero(f);
      for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) {
        value = value * a + FieldElement::rational(f, *it);
      }
      EXPECT_TRUE(value.is_zero());
      EXPECT_EQ(static_cast<std::size_t>(f->degree()) % static_cast<std::size_t>(p.degree()), 0U);
    }
  }
}

// Conjugates of a = sum c_k (zeta^k + zeta^-k) are sum c_k 2 cos(2 pi j k / n).
TEST(TotalPositivity, MatchesNumericConjugatesOnRealSubfields) {
  Rng rng(10);
  for (long n : {5L, 7L, 9L, 11L}) {
    auto f = Field::cyclotomic(n);
    GaloisGroup g(f);
    FieldElement z = FieldElement::generator(f);
    for (int i = 0; i < 100; ++i) {
      FieldElement a = FieldElement::rational(f, random_rational(rng));
      std::vector<double> coeff(static_cast<std::size_t>(n / 2 + 1), 0.0);
      coeff[0] = a.as_rational().raw().get_d();
      for (long k = 1; k <= n / 2; ++k) {
        Rational c = random_rational(rng, SampleOptions{2});
        coeff[static_cast<std::size_t>(k)] = c.raw().get_d();
        a += FieldElement::rational(f, c) * (z.pow(static_cast<unsigned long>(k)) + z.pow(static_cast<unsigned long>(n - k)));
      }
      bool positive = true;
      double closest = 1e9;
      for (const auto& x : g.elements()) {
        const long j = f->unit_of(x);
        double v = coeff[0];
        for (long k = 1; k <= n / 2; ++k) v += coeff[static_cast<std::size_t>(k)] * 2 * std::cos(2 * std::numbers::pi * j * k / n);
        positive = positive && v > 0;
        closest = std::min(closest, std::abs(v));
      }
      if (closest < 1e-9) continue;
      EXPECT_EQ(is_totally_positive(a), positive) << a.to_string();
    }
  }
}

TEST(TotalPositivity, KnownValues) {
  auto f = Field::cyclotomic(5);
  FieldElement z = FieldElement::generator(f);
  FieldElement golden = z + z.pow(4);  // (sqrt5 - 1)/2, conjugate (-sqrt5 - 1)/2
  EXPECT_FALSE(is_totally_positive(golden));
  EXPECT_TRUE(is_totally_positive(golden + FieldElement::rational(f, Rational(2))));
  EXPECT_TRUE(is_totally_positive(FieldElement::rational(f, Rational(1, 3))));
  EXPECT_FALSE(is_totally_positive(FieldElement::rational(f, Rational(-1))));
  EXPECT_TRUE(generates_formally_real_field(golden));
  EXPECT_FALSE(generates_formally_real_field(z));
}

TEST(Power, NegativeExponents) {
  auto f = Field::cyclotomic(7);
  FieldElement z = FieldElement::generator(f);
  EXPECT_EQ(power(z, -1), z.pow(6));
  EXPECT_TRUE(power(z, 0).is_one());
}

// --- Finite fields ---------------------------------------------------------------

// Oracle multiplication in GF(p)[x]/(modulus) with plain long arithmetic.
std::vector<long> ff_mul(const std::vector<long>& a, const std::vector<long>& b, const std::vector<long>& mod, long p) {
  const std::size_t m = mod.size() - 1;
  std::vector<long> prod(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = 2 * m - 1; d >= m; --d) {
    long c = prod[d];
    if (c == 0) continue;
    for (std::size_t k = 0; k <= m; ++k) prod[d - m + k] = ((prod[d - m + k] - c * mod[k]) % p + p) % p;
  }
  prod.resize(m);
  return prod;
}

std::vector<long> residues(const FieldElement& a) {
  std::vector<long> out;
  for (const auto& c : a.rational_coordinates()) out.push_back(c.numerator().get_si());
  return out;
}

TEST(FiniteField, LeastMonicIrreducibleModuli) {
  EXPECT_EQ(Field::finite(2, 2)->modulus(), (std::vector<long>{1, 1, 1}));
  EXPECT_EQ(Field::finite(2, 3)->modulus(), (std::vector<long>{1, 1, 0, 1}));
  EXPECT_EQ(Field::finite(2, 4)->modulus(), (std::vector<long>{1, 1, 0, 0, 1}));
  EXPECT_EQ(Field::finite(3, 2)->modulus(), (std::vector<long>{1, 0, 1}));
  EXPECT_THROW(Field::finite(4, 2), AlgebraError);
  EXPECT_THROW(Field::finite(2, 0), AlgebraError);
}

TEST(FiniteField, ExhaustiveMultiplicationAndFrobenius) {
  for (auto [p, m] : {std::pair{2L, 2}, std::pair{3L, 2}, std::pair{2L, 4}, std::pair{5L, 2}}) {
    auto f = Field::finite(p, m);
    const auto elems = ff_elements(f);
    ASSERT_EQ(static_cast<long>(elems.size()), ff_order(p, m));
    GroupElement frob = f->frobenius_power(1);
    for (const auto& a : elems) {
      EXPECT_EQ(a.apply(frob), a.pow(static_cast<unsigned long>(p)));
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inverse()).is_one());
      }
      for (const auto& b : elems) EXPECT_EQ(residues(a * b), ff_mul(residues(a), residues(b), f->modulus(), p));
    }
  }
}

TEST(FiniteField, NormImagesAreSurjective) {
  for (auto [p, m, base] : {std::tuple{2L, 2, 1}, std::tuple{3L, 2, 1}, std::tuple{2L, 4, 1}, std::tuple{2L, 4, 2}}) {
    auto f = Field::finite(p, m);
    EXPECT_EQ(static_cast<long>(ff_norm_image(f, base).size()), ff_order(p, base));
    for (const auto& a : ff_elements(f)) {
      // N(a) = a^{(q^m - 1)/(q - 1)} for the base field of size q.
      const long q = ff_order(p, base);
      const long e = (ff_order(p, m) - 1) / (q - 1);
      EXPECT_EQ(ff_norm(a, base), a.pow(static_cast<unsigned long>(e)));
    }
  }
  EXPECT_THROW(ff_norm(FieldElement::one(Field::finite(2, 4)), 3), AlgebraError);
}

TEST(FiniteField, MinPolyUnsupported) {
  auto f = Field::finite(2, 2);
  EXPECT_THROW(min_poly(FieldElement::generator(f)), AlgebraError);
}

// --- Sextic S3 field --------------------------------------------------------------

TEST(Sextic, DefiningRelations) {
  auto f = Field::sextic_s3();
  FieldElement a = FieldElement::basis(f, 2), w = FieldElement::basis(f, 1);
  FieldElement one = FieldElement::one(f);
  EXPECT_EQ(a * a * a, FieldElement::rational(f, Rational(2)));
  EXPECT_TRUE((w * w + w + one).is_zero());
  EXPECT_EQ(min_poly(a), poly({-2, 0, 0, 1}));
  EXPECT_EQ(min_poly(w), poly({1, 1, 1}));
  EXPECT_EQ(min_poly(FieldElement::generator(f)).degree(), 6);
}

TEST(Sextic, AutomorphismsActOnGenerators) {
  auto f = Field::sextic_s3();
  FieldElement a = FieldElement::basis(f, 2), w = FieldElement::basis(f, 1);
  GroupElement s = f->s3_element(0, 1), t = f->s3_element(1, 0);
  EXPECT_EQ(a.apply(s), a);
  EXPECT_EQ(w.apply(s), w * w);
  EXPECT_EQ(a.apply(t), w * a);
  EXPECT_EQ(w.apply(t), w);
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    FieldElement x = random_element(f, rng, SampleOptions{5, false, true});
    EXPECT_TRUE((x * x.inverse()).is_one());
    EXPECT_EQ(norm_full(x), product_of_conjugates(x, GaloisGroup(f).elements()).as_rational());
  }
}

TEST(Serialization, ElementRoundTrip) {
  Rng rng(12);
  for (const auto& f : {Field::cyclotomic(12), Field::finite(3, 2), Field::sextic_s3()}) {
    for (int i = 0; i < 20; ++i) {
      FieldElement a = random_element(f, rng);
      EXPECT_EQ(element_from_json(element_to_json(a)), a);
    }
    EXPECT_EQ(field_spec_from_json(field_spec_to_json(f->spec())), f->spec());
  }
  EXPECT_THROW(element_from_json("{"), AlgebraError);
}

}  // namespace
}  // namespace galois_cpm
