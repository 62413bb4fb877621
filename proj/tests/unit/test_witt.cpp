#include <gtest/gtest.h>

#include <random>

#include "vconc/errors.hpp"
#include "vconc/witt.hpp"

using namespace vconc;

namespace {

WittClassQ W(std::initializer_list<long> d) {
  std::vector<Rational> v;
  for (long x : d) v.emplace_back(x);
  return witt_class(v);
}

std::vector<Rational> random_diag(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-40, 40);
  std::vector<Rational> v;
  while (v.size() < n) {
    int x = d(rng);
    if (x != 0) v.emplace_back(x);
  }
  return v;
}

// The signed-discriminant invariant of an odd-p residue form, recomputed
// by counting squares among the residues.
bool residue_is_square(long u, long p) {
  u = ((u % p) + p) % p;
  for (long x = 1; x < p; ++x)
    if (x * x % p == u) return true;
  return false;
}

}  // namespace

TEST(WittQ, Knot685091ClassAndItsBoundaries) {
  auto w = witt_class(RatMatrix::diagonal({Rational(-2), Rational(10)}));
  EXPECT_EQ(w.to_string(), "<-2, 10>");
  EXPECT_EQ(boundary_infinity(w), 0);
  auto b5 = boundary_p(w, Integer(5));
  EXPECT_EQ(b5.e, 1);
  EXPECT_EQ(b5.d, 1);
  EXPECT_EQ(b5.order(), 2);
  EXPECT_TRUE(boundary_p(w, Integer(2)).is_trivial());
  EXPECT_TRUE(boundary_p(w, Integer(7)).is_trivial());
  EXPECT_FALSE(is_trivial_wittq(w));
  EXPECT_EQ(witt_order(w), std::optional<int>(2));
}

TEST(WittQ, SimpleClasses) {
  EXPECT_TRUE(is_trivial_wittq(witt_class(RatMatrix{{0, 1}, {1, 0}})));
  EXPECT_EQ(W({6, -14}).diag, (std::vector<Rational>{6, -14}));
  EXPECT_EQ(boundary_infinity(W({1, 1})), 2);
  EXPECT_EQ(boundary_infinity(WittClassQ{}), 0);
  EXPECT_TRUE(is_trivial_wittq(W({5, -5})));
  EXPECT_TRUE(is_trivial_wittq(W({6, -14, -6, 14})));
  EXPECT_EQ(witt_order(W({1, 1})), std::nullopt);
  EXPECT_THROW(witt_class(RatMatrix{{1, 1}, {1, 1}}), InvalidArgument);
  // Squares are reduced: <8, 9/4> = <2, 1>.
  EXPECT_EQ(W({8, 9}).diag, (std::vector<Rational>{2, 1}));
}

TEST(WittQ, ClassPlusNegativeIsTrivial) {
  std::mt19937 rng(51);
  for (int it = 0; it < 100; ++it) {
    auto w = witt_class(random_diag(rng, 1 + it % 5));
    EXPECT_TRUE(is_trivial_wittq(witt_sum(w, witt_negate(w))));
  }
}

TEST(WittFp, BoundariesAreAdditive) {
  std::mt19937 rng(52);
  for (int it = 0; it < 100; ++it) {
    auto a = witt_class(random_diag(rng, 1 + it % 4));
    auto b = witt_class(random_diag(rng, 1 + (it / 4) % 4));
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
      Integer P(p);
      EXPECT_EQ(boundary_p(witt_sum(a, b), P), boundary_p(a, P) + boundary_p(b, P));
    }
  }
}

TEST(WittFp, CongruentFormsHaveEqualBoundaries) {
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int it = 0; it < 60; ++it) {
    std::size_t n = 2 + it % 3;
    RatMatrix b = RatMatrix::diagonal(random_diag(rng, n));
    RatMatrix p(n, n);
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p(i, j) = d(rng);
    } while (det(p) == 0);
    auto w1 = witt_class(b), w2 = witt_class(p * b * p.transpose());
    for (long q : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) EXPECT_EQ(boundary_p(w1, Integer(q)), boundary_p(w2, Integer(q)));
    EXPECT_EQ(boundary_infinity(w1), boundary_infinity(w2));
  }
}

TEST(WittFp, OddRankAtThreeModFourHasOrderFour) {
  for (long p : {3L, 7L, 11L, 19L, 23L}) {
    for (long u = 1; u < p; ++u) {
      auto b = boundary_p(W({p * u}), Integer(p));
      EXPECT_EQ(b.e, 1);
      EXPECT_EQ(b.order(), 4);
      EXPECT_EQ(b.d, residue_is_square(u, p) ? 0 : 1) << u << " mod " << p;
    }
  }
}

TEST(WittFp, GroupStructure) {
  WittClassFp one{Integer(5), 1, 0}, two{Integer(5), 1, 1};
  EXPECT_EQ((one + one).order(), 1);  // <1,1> over F_5 is hyperbolic
  EXPECT_EQ(two.order(), 2);
  WittClassFp g{Integer(3), 1, 0};
  EXPECT_FALSE((g + g).is_trivial());
  EXPECT_TRUE((g + g + g + g).is_trivial());
  WittClassFp t{Integer(2), 1, 0};
  EXPECT_TRUE((t + t).is_trivial());
}
