#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mgl/tropical.hpp"

using namespace mgl;

TEST(ParseRational, Forms) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(LogRationalTest, CanonicalFormFoldsPowersOfTwo) {
  // 1 - log2(4) = -1.
  EXPECT_EQ(LogRational::from_parts(1, 4), LogRational(-1));
  EXPECT_EQ(LogRational::neg_log2(Rational(1, 8)), LogRational(3));
  EXPECT_EQ(LogRational::neg_log2(Rational(-3)).modulus(), Rational(3));
  EXPECT_EQ(LogRational(Rational(1, 2)).modulus(), std::nullopt);
  EXPECT_THROW(LogRational::from_parts(0, 0), Error);
}

TEST(LogRationalTest, OrderMatchesFloatingPointOnRandomValues) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    auto draw = [&] {
      Rational v(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 4) + 1);
      Rational c(static_cast<long>(rng() % 30) + 1, static_cast<long>(rng() % 30) + 1);
      return std::pair{v, c};
    };
    auto [v1, c1] = draw();
    auto [v2, c2] = draw();
    double x = v1.get_d() - std::log2(c1.get_d());
    double y = v2.get_d() - std::log2(c2.get_d());
    auto a = LogRational::from_parts(v1, c1);
    auto b = LogRational::from_parts(v2, c2);
    if (std::abs(x - y) > 1e-9) {
      EXPECT_EQ(a < b, x < y) << a.str() << " vs " << b.str();
    }
  }
}

TEST(LogRationalTest, ExactTiesAreDetected) {
  // 2 - log2(3) == 1 - log2(3/2).
  EXPECT_EQ(LogRational::from_parts(2, 3), LogRational::from_parts(1, Rational(3, 2)));
  EXPECT_EQ(LogRational::from_parts(0, 9) <=> 2 * LogRational::from_parts(0, 3), std::strong_ordering::equal);
  // log2(3) vs 8/5: 3^5 = 243 < 2^8 = 256.
  EXPECT_LT(LogRational(Rational(-8, 5)), LogRational::from_parts(0, 3));
}

TEST(TropicalValueTest, InfinityAbsorbsAndIsMaximum) {
  TropicalValue inf;
  EXPECT_TRUE((inf + TropicalValue(3)).is_infinite());
  EXPECT_LT(TropicalValue(1000000), inf);
  EXPECT_EQ(TropicalValue(Rational(1, 2)) + TropicalValue(Rational(1, 2)), TropicalValue(1));
  EXPECT_EQ(inf.str(), "inf");
  EXPECT_EQ(TropicalValue(Rational(3, 2)).str(), "3/2");
}

TEST(SignedTropicalTest, RationalRoundTripAndProducts) {
  for (Rational r : {Rational(3), Rational(-7, 4), Rational(1, 6), Rational(-12)}) {
    EXPECT_EQ(SignedTropical::from_rational(r).to_rational(), r);
    for (Rational s : {Rational(5, 3), Rational(-2)}) {
      auto p = SignedTropical::from_rational(r) * SignedTropical::from_rational(s);
      EXPECT_EQ(p.to_rational(), r * s);
    }
  }
  EXPECT_TRUE(SignedTropical::from_rational(0).is_zero());
  EXPECT_THROW(SignedTropical(0, TropicalValue(1)), Error);
  EXPECT_THROW(SignedTropical(1, TropicalValue()), Error);
}

TEST(SignedTropicalTest, ModulusComparisonIsMultiplicative) {
  auto a = SignedTropical::from_rational(Rational(-3));
  auto b = SignedTropical::from_rational(Rational(5, 2));
  EXPECT_EQ(compare_modulus(a, b), std::strong_ordering::greater);
  EXPECT_EQ(compare_modulus(a.scaled(Rational(5, 6)), b), std::strong_ordering::equal);
}
