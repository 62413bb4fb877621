#include <gtest/gtest.h>

#include <set>

#include "vconc/errors.hpp"
#include "vconc/exact.hpp"
#include "oracles.hpp"

using namespace vconc;

TEST(ParseRational, AcceptsIntegersFractionsAndUnicodeMinus) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("\xE2\x88\x92" "5/3"), Rational(-5, 3));
  EXPECT_THROW(parse_rational("1/0"), InvalidArgument);
  EXPECT_THROW(parse_rational("1.5"), InvalidArgument);
  EXPECT_THROW(parse_rational(""), InvalidArgument);
}

TEST(ParseRational, RoundTripsThroughStrings) {
  for (long n = -40; n <= 40; ++n)
    for (long d = 1; d <= 12; ++d) {
      Rational q(n, d);
      q.canonicalize();
      EXPECT_EQ(parse_rational(to_string(q)), q);
    }
}

TEST(Primes, FactorAndPrimality) {
  EXPECT_TRUE(is_prime(Integer(1447)));
  EXPECT_FALSE(is_prime(Integer(2891)));
  auto f = factor_integer(Integer(2891));
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f[Integer(7)], 2);
  EXPECT_EQ(f[Integer(59)], 1);
  Integer big("1000000007");
  big *= Integer("998244353");
  auto g = factor_integer(big);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g[Integer("1000000007")], 1);
}

TEST(Primes, TrialDivisionAgreement) {
  for (long n = 2; n < 3000; ++n) {
    bool trial = true;
    for (long d = 2; d * d <= n; ++d)
      if (n % d == 0) trial = false;
    EXPECT_EQ(is_prime(Integer(n)), trial) << n;
  }
}

TEST(Local, ValuationAndSquarefreePart) {
  EXPECT_EQ(padic_val(Rational(50, 3), Integer(5)), 2);
  EXPECT_EQ(padic_val(Rational(50, 3), Integer(3)), -1);
  EXPECT_EQ(squarefree_part(Rational(-12)).representative(), Integer(-3));
  EXPECT_EQ(squarefree_part(Rational(8, 9)).representative(), Integer(2));
  EXPECT_THROW(padic_val(Rational(0), Integer(3)), InvalidArgument);
}

TEST(Local, SquaresInCompletions) {
  EXPECT_TRUE(is_square_qp(Rational(-7), Place::prime(2)));   // -7 = 1 mod 8
  EXPECT_FALSE(is_square_qp(Rational(-3), Place::prime(2)));
  EXPECT_TRUE(is_square_qp(Rational(-1), Place::prime(5)));
  EXPECT_FALSE(is_square_qp(Rational(-1), Place::prime(3)));
  EXPECT_FALSE(is_square_qp(Rational(5), Place::prime(5)));
  EXPECT_FALSE(is_square_qp(Rational(-1), Place::infinity()));
  EXPECT_TRUE(is_square_qp(Rational(2, 9), Place::infinity()));
}

TEST(Hilbert, KnownValues) {
  EXPECT_EQ(hilbert_symbol(-1, -1, Place::prime(2)), -1);
  EXPECT_EQ(hilbert_symbol(-1, -1, Place::infinity()), -1);
  EXPECT_EQ(hilbert_symbol(-1, -1, Place::prime(3)), 1);
  EXPECT_EQ(hilbert_symbol(2, 5, Place::prime(5)), -1);
  EXPECT_EQ(hilbert_symbol(-2, 10, Place::prime(5)), -1);
}

TEST(Hilbert, BruteForceOracleUpTo23) {
  const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
  for (long p : primes) {
    for (long a = -12; a <= 12; ++a) {
      if (a == 0) continue;
      for (long b = -12; b <= 12; ++b) {
        if (b == 0) continue;
        ASSERT_EQ(hilbert_symbol(a, b, Place::prime(p)), oracle::hilbert(a, b, p)) << "(" << a << "," << b << ")_" << p;
      }
    }
  }
}

TEST(Hilbert, ProductFormula) {
  for (long a = -15; a <= 15; ++a)
    for (long b = -15; b <= 15; ++b) {
      if (a == 0 || b == 0) continue;
      int prod = hilbert_symbol(a, b, Place::infinity());
      std::set<Integer> ps{Integer(2)};
      for (auto& p : prime_divisors(Integer(a))) ps.insert(p);
      for (auto& p : prime_divisors(Integer(b))) ps.insert(p);
      for (const auto& p : ps) prod *= hilbert_symbol(a, b, Place::prime(p));
      EXPECT_EQ(prod, 1) << a << " " << b;
    }
}

TEST(Hilbert, BilinearAndSymmetric) {
  for (long p : {2L, 3L, 5L, 7L}) {
    Place pl = Place::prime(p);
    for (long a = -9; a <= 9; ++a)
      for (long b = -9; b <= 9; ++b)
        for (long c : {-6L, -1L, 2L, 3L, 10L}) {
          if (a == 0 || b == 0) continue;
          EXPECT_EQ(hilbert_symbol(a, b, pl), hilbert_symbol(b, a, pl));
          EXPECT_EQ(hilbert_symbol(a, b * c, pl), hilbert_symbol(a, b, pl) * hilbert_symbol(a, c, pl));
        }
  }
}

TEST(Hasse, PairProductOverIndexPairs) {
  std::vector<Rational> d{Rational(-1), Rational(-1), Rational(3)};
  Place two = Place::prime(2);
  int expected = hilbert_symbol(-1, -1, two) * hilbert_symbol(-1, 3, two) * hilbert_symbol(-1, 3, two);
  EXPECT_EQ(hasse_symbol(d, two), expected);
  EXPECT_EQ(hasse_symbol(std::vector<Rational>{Rational(5)}, two), 1);
}
