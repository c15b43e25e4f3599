#include <bn2/exactnum.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace bn2;

TEST(Exactnum, FactorialSmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_THROW(factorial(-1), std::domain_error);
}

TEST(Exactnum, InverseFactorialOrZero) {
  EXPECT_EQ(inv_factorial_or_zero(3), make_rational(1, 6));
  EXPECT_EQ(inv_factorial_or_zero(0), 1);
  EXPECT_EQ(inv_factorial_or_zero(-1), 0);
  EXPECT_EQ(inv_factorial_or_zero(-7), 0);
  for (long n = 1; n <= 30; ++n) EXPECT_EQ(inv_factorial_or_zero(n) * BigRational(factorial(n)), 1) << n;
}

TEST(Exactnum, DoubleFactorialOdd) {
  EXPECT_EQ(double_factorial_odd(-1), 1);
  EXPECT_EQ(double_factorial_odd(1), 1);
  EXPECT_EQ(double_factorial_odd(5), 15);
  EXPECT_THROW(double_factorial_odd(4), std::domain_error);
  EXPECT_THROW(double_factorial_odd(-3), std::domain_error);
  for (long m = 0; m <= 25; ++m)
    EXPECT_EQ(double_factorial_odd(2 * m + 1) * pow2(m) * factorial(m), factorial(2 * m + 1)) << m;
}

TEST(Exactnum, RationalsAreCanonical) {
  const auto q = make_rational(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(to_string(q), "-3/2");
  EXPECT_EQ(to_string(make_rational(8, 4)), "2");
  EXPECT_EQ(parse_rational("10/-4"), make_rational(-5, 2));
  EXPECT_EQ(parse_rational("-41/144"), make_rational(-41, 144));
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
  EXPECT_THROW(parse_rational("1/0"), std::domain_error);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Exactnum, RationalArithmeticRoundTrips) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
  for (int t = 0; t < 500; ++t) {
    const auto a = make_rational(num(rng), den(rng));
    const auto c = make_rational(num(rng), den(rng));
    EXPECT_EQ((a + c) - c, a);
    if (c != 0) {
      EXPECT_EQ((a * c) / c, a);
    }
  }
}

TEST(Exactnum, PowersAndBinomials) {
  EXPECT_EQ(pow2_rational(-3), make_rational(1, 8));
  EXPECT_EQ(pow2_rational(4), 16);
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(4, -1), 0);
}
