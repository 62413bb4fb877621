#include <gtest/gtest.h>

#include <random>

#include "vconc/errors.hpp"
#include "vconc/families.hpp"
#include "vconc/isometric.hpp"

using namespace vconc;

namespace {

RatMatrix random_nonsingular_directed(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-4, 4), den(1, 3);
  while (true) {
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = Rational(d(rng), den(rng));
        a(i, j).canonicalize();
      }
    if (det(a) != 0 && det(a + a.transpose()) != 0) return a;
  }
}

}  // namespace

TEST(Structure, Knot685091FormAndIsometry) {
  auto s = from_directed(DirectedMatrix(fixture("6.85091").a_plus));
  EXPECT_EQ(s.b, (RatMatrix{{2, -2, 0, 0}, {-2, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 2}}));
  EXPECT_EQ(s.s.transpose() * s.b * s.s, s.b);
  EXPECT_EQ(det(s.s), Rational(1));
  EXPECT_EQ(to_directed(s).matrix(), fixture("6.85091").a_plus);
}

TEST(Structure, IdentityAndFamilyMember) {
  auto s = from_directed(DirectedMatrix(RatMatrix::identity(2)));
  EXPECT_EQ(s.b, RatMatrix::identity(2) * Rational(2));
  EXPECT_EQ(s.s, RatMatrix::identity(2));
  EXPECT_EQ(to_directed(s).matrix(), RatMatrix::identity(2));
  auto k = from_directed(DirectedMatrix(kmn_couple(3, 7, 0).a_minus));
  EXPECT_EQ(char_poly(k.s), Poly({Rational(1), Rational(-11, 5), Rational(1)}));
}

TEST(Structure, SingularAndInvalidInputs) {
  EXPECT_THROW(from_directed(DirectedMatrix(RatMatrix{{0, 1}, {0, 0}})), SingularMatrix);
  try {
    make_structure(RatMatrix::identity(2), RatMatrix{{2, 0}, {0, 1}});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.condition(), Condition::kIsometry);
  }
}

TEST(Structure, RoundTripOnRandomNonsingularMatrices) {
  std::mt19937 rng(41);
  for (int it = 0; it < 200; ++it) {
    std::size_t n = 2 * (1 + it % 3);
    RatMatrix a = random_nonsingular_directed(rng, n);
    auto s = from_directed(DirectedMatrix(a));
    ASSERT_EQ(to_directed(s).matrix(), a);
    // det(S + I) = det(A^{-1}) det(A + A^T)
    EXPECT_EQ(det(s.s + RatMatrix::identity(n)), det(a + a.transpose()) / det(a));
    Poly cp = char_poly(s.s);
    EXPECT_EQ(cp(0), Rational(1));
    EXPECT_NE(cp(-1), Rational(0));
    // from_directed(to_directed(s)) = s
    auto again = from_directed(to_directed(s));
    EXPECT_EQ(again.b, s.b);
    EXPECT_EQ(again.s, s.s);
  }
}

TEST(Primary, Knot685091Pieces) {
  auto pieces = primary_decompose(from_directed(DirectedMatrix(fixture("6.85091").a_plus)));
  ASSERT_EQ(pieces.size(), 2u);
  const auto& t1 = pieces[0];
  EXPECT_EQ(t1.factor, Poly({Rational(-1), Rational(1)}));
  EXPECT_EQ(t1.exponent, 2);
  EXPECT_EQ(t1.symmetry, Symmetry::kTMinusOne);
  EXPECT_EQ(t1.basis.basis, (RatMatrix{{1, -1}, {1, 0}, {0, 0}, {0, 2}}));
  EXPECT_EQ(t1.b, RatMatrix::diagonal({Rational(-2), Rational(10)}));
  const auto& q = pieces[1];
  EXPECT_EQ(q.factor, Poly({Rational(1), Rational(3), Rational(1)}));
  EXPECT_EQ(q.basis.basis, (RatMatrix{{1, 2}, {0, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(q.b, (RatMatrix{{2, 5}, {5, 10}}));
}

TEST(Primary, IdentityIsOnePiece) {
  auto pieces = primary_decompose(from_directed(DirectedMatrix(RatMatrix::identity(4))));
  ASSERT_EQ(pieces.size(), 1u);
  EXPECT_EQ(pieces[0].exponent, 4);
  EXPECT_EQ(pieces[0].basis.dim(), 4u);
}

TEST(Primary, NonSymmetricFactorsPairUp) {
  // S = diag(2, 1/2) preserves the hyperbolic form.
  RatMatrix b{{0, 1}, {1, 0}};
  RatMatrix s = RatMatrix::diagonal({Rational(2), Rational(1, 2)});
  auto pieces = primary_decompose(make_structure(b, s));
  ASSERT_EQ(pieces.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(pieces[i].symmetry, Symmetry::kNonSymmetric);
    EXPECT_EQ(pieces[pieces[i].partner].exponent, pieces[i].exponent);
    EXPECT_EQ(pieces[i].partner, 1 - i);
  }
}

TEST(Primary, DecompositionProperties) {
  std::mt19937 rng(42);
  for (int it = 0; it < 40; ++it) {
    std::size_t n = 2 * (1 + it % 3);
    auto st = from_directed(DirectedMatrix(random_nonsingular_directed(rng, n)));
    auto pieces = primary_decompose(st);
    std::size_t total = 0;
    for (const auto& p : pieces) {
      total += p.basis.dim();
      EXPECT_EQ(p.basis.dim(), static_cast<std::size_t>(p.exponent * p.factor.degree()));
      EXPECT_EQ(char_poly(p.s) * Rational(p.basis.dim() % 2 ? -1 : 1), p.factor.pow(p.exponent));
    }
    EXPECT_EQ(total, n);
    for (std::size_t i = 0; i < pieces.size(); ++i)
      for (std::size_t j = 0; j < pieces.size(); ++j) {
        if (i == j) continue;
        if (gcd(pieces[i].factor, bar(pieces[j].factor)).degree() > 0) continue;
        EXPECT_TRUE((pieces[i].basis.basis.transpose() * st.b * pieces[j].basis.basis).is_zero());
      }
  }
}
