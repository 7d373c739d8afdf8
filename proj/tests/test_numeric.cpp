#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permx/numeric.hpp"

using namespace permx;

TEST(Binomial, MatchesPascalRow) {
  for (unsigned n = 0; n <= 60; ++n)
    for (unsigned k = 0; k <= n + 1; ++k) ASSERT_EQ(binomial(n, k), oracle::binom(n, k)) << n << " " << k;
  EXPECT_EQ(binomial(100, 50).str(), "100891344545564193334812497256");
}

TEST(Rational, ParseExact) {
  EXPECT_EQ(parse_rational("3/5"), Rational(3, 5));
  EXPECT_EQ(parse_rational("0.6"), Rational(3, 5));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
  EXPECT_EQ(parse_rational("2.5E2"), Rational(250));
  EXPECT_THROW(parse_rational(""), Error);
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational("1e"), Error);
}

TEST(Rational, FloorCeil) {
  EXPECT_EQ(floor_of(Rational(7, 2)), 3);
  EXPECT_EQ(ceil_of(Rational(7, 2)), 4);
  EXPECT_EQ(floor_of(Rational(-7, 2)), -4);
  EXPECT_EQ(ceil_of(Rational(-7, 2)), -3);
  EXPECT_EQ(floor_of(Rational(6, 3)), 2);
  EXPECT_EQ(ceil_of(Rational(6, 3)), 2);
  EXPECT_EQ(to_string(Rational(10, 3)), "10/3");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
}

TEST(Log2, LargeValues) {
  EXPECT_DOUBLE_EQ(log2_of(BigInt(1024)), 10.0);
  EXPECT_NEAR(log2_of(ipow(BigInt(3), 2000)), 2000 * std::log2(3.0), 1e-9);
  EXPECT_TRUE(std::isinf(log2_of(BigInt(0))));
}
