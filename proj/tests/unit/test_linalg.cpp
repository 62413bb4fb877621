#include <gtest/gtest.h>

#include <random>

#include "vconc/errors.hpp"
#include "vconc/linalg.hpp"
#include "oracles.hpp"

using namespace vconc;

namespace {

RatMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -5, int hi = 5, bool fractions = false) {
  std::uniform_int_distribution<int> d(lo, hi), den(1, 4);
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = fractions ? Rational(d(rng), den(rng)) : Rational(d(rng));
      m(i, j).canonicalize();
    }
  return m;
}

RatMatrix random_symmetric(std::mt19937& rng, std::size_t n) {
  RatMatrix m = random_matrix(rng, n, n);
  return m + m.transpose();
}

}  // namespace

TEST(Determinant, CofactorOracle) {
  std::mt19937 rng(11);
  for (int it = 0; it < 200; ++it) {
    std::size_t n = 1 + it % 6;
    RatMatrix m = random_matrix(rng, n, n, -6, 6, it % 2 == 0);
    ASSERT_EQ(det(m), oracle::cofactor_det(m)) << m.to_string();
  }
}

TEST(Determinant, SingularAndEmpty) {
  EXPECT_EQ(det(RatMatrix(0, 0)), Rational(1));
  EXPECT_EQ(det(RatMatrix{{1, 2}, {2, 4}}), Rational(0));
  EXPECT_THROW(det(RatMatrix(2, 3)), InvalidArgument);
}

TEST(Inverse, ProductIsIdentity) {
  std::mt19937 rng(12);
  for (int it = 0; it < 100; ++it) {
    std::size_t n = 1 + it % 6;
    RatMatrix m = random_matrix(rng, n, n, -4, 4, true);
    if (det(m) == 0) {
      EXPECT_THROW(inverse(m), SingularMatrix);
      continue;
    }
    EXPECT_EQ(m * inverse(m), RatMatrix::identity(n));
  }
}

TEST(Rank, KernelDimensionComplements) {
  std::mt19937 rng(13);
  for (int it = 0; it < 60; ++it) {
    RatMatrix a = random_matrix(rng, 3, 2), b = random_matrix(rng, 2, 5);
    RatMatrix m = a * b;  // rank <= 2
    auto k = kernel_basis(m);
    EXPECT_EQ(rank(m) + k.dim(), 5u);
    EXPECT_LE(rank(m), 2u);
    EXPECT_TRUE((m * k.basis).is_zero());
  }
}

TEST(Diagonalize, CongruenceReproducesForm) {
  std::mt19937 rng(14);
  for (int it = 0; it < 100; ++it) {
    std::size_t n = 1 + it % 7;
    RatMatrix s = random_symmetric(rng, n);
    if (it % 5 == 0) {
      for (std::size_t i = 0; i < n; ++i) s(i, i) = 0;  // forces the off-diagonal branch
    }
    auto dz = congruent_diagonalize(s);
    RatMatrix d = RatMatrix::diagonal(dz.diag);
    EXPECT_EQ(dz.u * s * dz.u.transpose(), d);
    EXPECT_NE(det(dz.u), Rational(0));
  }
}

TEST(Diagonalize, HyperbolicPlaneHasSignatureZero) {
  RatMatrix h{{0, 1}, {1, 0}};
  EXPECT_EQ(signature(h), 0);
  EXPECT_EQ(signature(RatMatrix::diagonal({Rational(1), Rational(3), Rational(-2)})), 1);
}

TEST(CharPoly, MatchesPencilDeterminant) {
  std::mt19937 rng(15);
  for (int it = 0; it < 60; ++it) {
    std::size_t n = 1 + it % 6;
    RatMatrix s = random_matrix(rng, n, n, -3, 3, true);
    // det(S - tI) = det_pencil(S, -I)
    EXPECT_EQ(char_poly(s), det_pencil(s, RatMatrix::identity(n) * Rational(-1)));
    // Cayley-Hamilton
    EXPECT_TRUE(evaluate(char_poly(s), s).is_zero());
  }
}

TEST(CharPoly, PencilAtSamplePoints) {
  std::mt19937 rng(16);
  for (int it = 0; it < 30; ++it) {
    RatMatrix a = random_matrix(rng, 4, 4), b = random_matrix(rng, 4, 4);
    Poly p = det_pencil(a, b);
    for (int t = -3; t <= 3; ++t) EXPECT_EQ(p(Rational(t)), det(a + b * Rational(t)));
  }
}

TEST(Restrict, FormAndOperator) {
  RatMatrix s{{2, 0, 0}, {0, 3, 0}, {0, 0, 5}};
  SubspaceBasis w{RatMatrix{{1, 0}, {0, 0}, {0, 1}}};
  EXPECT_EQ(restrict_operator(s, w), (RatMatrix{{2, 0}, {0, 5}}));
  RatMatrix b = RatMatrix::diagonal({Rational(1), Rational(-1), Rational(7)});
  EXPECT_EQ(restrict_form(b, w), (RatMatrix{{1, 0}, {0, 7}}));
  RatMatrix rot{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  EXPECT_THROW(restrict_operator(rot, w), NotInvariant);
}

TEST(Limits, DimensionCapIsEnforced) {
  EXPECT_THROW(char_poly(RatMatrix::identity(kMaxDimension + 2)), ComputationLimit);
  EXPECT_NO_THROW(det(RatMatrix::identity(100)));
}
