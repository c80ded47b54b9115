#include <gtest/gtest.h>

#include <gmpxx.h>

#include <climits>
#include <random>

#include "fqk/integer.hpp"

namespace {

using fqk::Integer;

TEST(Integer, SmallArithmetic) {
  Integer a = 7;
  Integer b = -3;
  EXPECT_EQ(a + b, Integer(4));
  EXPECT_EQ(a - b, Integer(10));
  EXPECT_EQ(a * b, Integer(-21));
  EXPECT_EQ(-b, Integer(3));
  EXPECT_TRUE(Integer(0).is_zero());
  EXPECT_TRUE(Integer(-1).is_unit());
  EXPECT_FALSE(Integer(2).is_unit());
}

TEST(Integer, OverflowPromotesAndDemotes) {
  Integer big = INT64_MAX;
  big += 1;
  EXPECT_FALSE(big.is_small());
  EXPECT_EQ(big.to_string(), "9223372036854775808");
  big -= 1;
  EXPECT_TRUE(big.is_small());
  EXPECT_EQ(big, Integer(INT64_MAX));

  Integer sq = Integer(INT64_MAX) * Integer(INT64_MAX);
  EXPECT_EQ(sq.to_mpz(), mpz_class("85070591730234615847396907784232501249"));
  EXPECT_EQ(Integer(INT64_MIN) * Integer(-1), Integer::from_string("9223372036854775808"));
}

TEST(Integer, ParseAndCompare) {
  EXPECT_EQ(Integer::from_string("-123456789012345678901234567890").to_string(),
            "-123456789012345678901234567890");
  EXPECT_LT(Integer(-5), Integer(2));
  EXPECT_LT(Integer(2), Integer::from_string("100000000000000000000"));
  EXPECT_THROW((void)Integer::from_string("12x"), std::exception);
}

TEST(Integer, DivisionAgreesWithGmp) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::int64_t> pick(-1000, 1000);
  for (int i = 0; i < 4000; ++i) {
    const std::int64_t x = pick(rng);
    std::int64_t y = pick(rng);
    if (y == 0) y = 7;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), mpz_class(static_cast<long>(x)).get_mpz_t(),
               mpz_class(static_cast<long>(y)).get_mpz_t());
    EXPECT_EQ(fqk::floor_div(x, y).to_mpz(), q);
    EXPECT_EQ(fqk::floor_mod(x, y).to_mpz(), mpz_class(static_cast<long>(x)) - q * y);

    // nearest_div leaves a remainder of at most half the divisor.
    const Integer n = fqk::nearest_div(x, y);
    const Integer r = Integer(x) - n * Integer(y);
    EXPECT_LE(fqk::abs(r + r), fqk::abs(Integer(y))) << x << " " << y;

    const mpz_class g = gcd(mpz_class(static_cast<long>(x)), mpz_class(static_cast<long>(y)));
    EXPECT_EQ(fqk::gcd(x, y).to_mpz(), g);
    EXPECT_EQ(fqk::divides(y, x), x % y == 0);
  }
}

TEST(Integer, ExactDivisionOfLargeValues) {
  const Integer a = Integer::from_string("340282366920938463463374607431768211456");
  const Integer b = Integer::from_string("18446744073709551616");
  EXPECT_EQ(fqk::exact_div(a, b), b);
  EXPECT_TRUE(fqk::divides(b, a));
}

}  // namespace
