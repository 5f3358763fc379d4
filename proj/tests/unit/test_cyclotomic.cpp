#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "charprod/cyclotomic.hpp"

using namespace charprod;

namespace {

// Evaluates the canonical coefficients directly, independent of approx().
std::complex<double> evaluate(const Cyclotomic& z) {
  std::complex<double> v = 0;
  const double e = z.order();
  for (std::size_t k = 0; k < z.dimension(); ++k) {
    v += z.coefficient(k).get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / e);
  }
  return v;
}

Cyclotomic random_value(std::mt19937_64& rng, std::uint32_t e, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> coeff(-bound, bound);
  std::vector<std::int64_t> c(e);
  for (auto& x : c) x = coeff(rng);
  return Cyclotomic::from_powers(e, std::span<const std::int64_t>(c));
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-6 * (1 + std::abs(a)); }

}  // namespace

TEST(Cyclotomic, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(9), (std::vector<std::int64_t>{1, 0, 0, 1, 0, 0, 1}));
  for (std::uint32_t n = 1; n <= 60; ++n) EXPECT_EQ(cyclotomic_polynomial(n).size(), euler_phi(n) + 1);
}

TEST(Cyclotomic, RationalValues) {
  Cyclotomic three(3);
  EXPECT_TRUE(three.is_rational());
  EXPECT_EQ(three.as_integer(), 3);
  EXPECT_EQ(three.to_string(), "3");
  Cyclotomic half(mpq_class(-1, 2));
  EXPECT_EQ(half.to_string(), "-1/2");
  EXPECT_FALSE(half.as_integer().has_value());
  EXPECT_TRUE(Cyclotomic().is_zero());
}

TEST(Cyclotomic, RootsOfUnitySumToMobius) {
  // The primitive n-th roots of unity sum to mu(n).
  const int mu[] = {0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0, -1, 1, 1, 0};
  for (std::uint32_t n = 1; n <= 16; ++n) {
    Cyclotomic sum;
    for (std::uint32_t k = 0; k < n; ++k) {
      if (std::gcd(k, n) == 1) sum += Cyclotomic::root_of_unity(n, k);
    }
    EXPECT_EQ(sum.as_integer(), mu[n]) << n;
  }
}

TEST(Cyclotomic, ValuesAreCanonicalAcrossOrders) {
  EXPECT_EQ(Cyclotomic::root_of_unity(4, 2), Cyclotomic(-1));
  EXPECT_EQ(Cyclotomic::root_of_unity(12, 4), Cyclotomic::root_of_unity(3, 1));
  Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  EXPECT_EQ(i * i, Cyclotomic(-1));
  Cyclotomic w = Cyclotomic::root_of_unity(3, 1);
  EXPECT_EQ(w.embed(12), Cyclotomic::root_of_unity(12, 4));
  auto lowered = w.embed(12).lower(3);
  ASSERT_TRUE(lowered.has_value());
  EXPECT_EQ(*lowered, w);
  EXPECT_FALSE(i.embed(12).lower(3).has_value());
}

TEST(Cyclotomic, ConjugationAndGalois) {
  Cyclotomic z = Cyclotomic::root_of_unity(8, 1);
  EXPECT_EQ(z.conj(), Cyclotomic::root_of_unity(8, 7));
  EXPECT_EQ(z * z.conj(), Cyclotomic(1));
  EXPECT_EQ(z.galois(3), Cyclotomic::root_of_unity(8, 3));
  // sqrt(2) = z + z^7 is fixed by conjugation but not by z -> z^3
  Cyclotomic r2 = z + z.conj();
  EXPECT_EQ(r2 * r2, Cyclotomic(2));
  EXPECT_EQ(r2.conj(), r2);
  EXPECT_EQ(r2.galois(3), -r2);
}

TEST(Cyclotomic, ParseRoundTrip) {
  std::mt19937_64 rng(7);
  for (std::uint32_t e : {1u, 3u, 4u, 5u, 8u, 9u, 12u, 25u}) {
    for (int t = 0; t < 10; ++t) {
      Cyclotomic z = random_value(rng, e, 5).scaled(mpq_class(1, 1 + t));
      EXPECT_EQ(Cyclotomic::parse(z.to_string()), z) << z.to_string();
    }
  }
  EXPECT_THROW(Cyclotomic::parse("z(4;1"), std::invalid_argument);
  EXPECT_THROW(Cyclotomic::parse("abc"), std::invalid_argument);
}

TEST(Cyclotomic, FieldAxiomsOnRandomValues) {
  std::mt19937_64 rng(42);
  for (std::uint32_t e : {3u, 4u, 5u, 7u, 8u, 9u, 12u, 15u, 16u, 27u}) {
    for (int t = 0; t < 20; ++t) {
      Cyclotomic a = random_value(rng, e, 9);
      Cyclotomic b = random_value(rng, e, 9);
      Cyclotomic c = random_value(rng, e, 9);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a - a, Cyclotomic());
      EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
      EXPECT_EQ((a * b).galois(e - 1), a.galois(e - 1) * b.galois(e - 1));
      EXPECT_TRUE(close(evaluate(a * b), evaluate(a) * evaluate(b)));
      EXPECT_TRUE(close(evaluate(a + b), evaluate(a) + evaluate(b)));
      EXPECT_TRUE(close(evaluate(a.conj()), std::conj(evaluate(a))));
      EXPECT_TRUE(close(a.approx(), evaluate(a)));
    }
  }
}

TEST(Cyclotomic, MixedOrdersUseTheLcmField) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    Cyclotomic a = random_value(rng, 4, 5);
    Cyclotomic b = random_value(rng, 9, 5);
    Cyclotomic s = a + b;
    Cyclotomic p = a * b;
    EXPECT_TRUE(close(evaluate(s), evaluate(a) + evaluate(b)));
    EXPECT_TRUE(close(evaluate(p), evaluate(a) * evaluate(b)));
    EXPECT_EQ(36 % s.order(), 0u);
  }
}

TEST(Cyclotomic, OverflowFallsBackToExactBigIntegers) {
  Cyclotomic big(std::int64_t{1} << 62);
  Cyclotomic sq = big * big;  // 2^124
  EXPECT_FALSE(sq.as_integer().has_value());
  EXPECT_EQ(sq.as_rational(), mpq_class(mpz_class(1) << 124));
  Cyclotomic back = sq.scaled(mpq_class(mpz_class(1), mpz_class(1) << 62));
  EXPECT_EQ(back, big);
  EXPECT_EQ(back.as_integer(), std::int64_t{1} << 62);

  Cyclotomic z = Cyclotomic::root_of_unity(5, 1).scaled(mpq_class(std::int64_t{1} << 40));
  Cyclotomic z4 = z * z * z * z;
  EXPECT_EQ(z4.scaled(mpq_class(mpz_class(1), mpz_class(1) << 160)), Cyclotomic::root_of_unity(5, 4));
}

TEST(Cyclotomic, TotalOrderIsConsistent) {
  std::mt19937_64 rng(11);
  std::vector<Cyclotomic> v;
  for (int t = 0; t < 30; ++t) v.push_back(random_value(rng, 6, 3));
  for (const auto& a : v) {
    EXPECT_EQ(Cyclotomic::compare(a, a), 0);
    for (const auto& b : v) {
      EXPECT_EQ(Cyclotomic::compare(a, b), -Cyclotomic::compare(b, a));
      EXPECT_EQ(Cyclotomic::compare(a, b) == 0, a == b);
    }
  }
}
