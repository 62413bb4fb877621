#pragma once

// Concordance invariants of directed matrices.

#include <optional>

#include "vconc/isometric.hpp"
#include "vconc/witt.hpp"

namespace vconc {

/// 1, 2, 4 or infinite.
struct Order {
  int k = 1;
  bool infinite = false;

  static Order finite(int k) { return {k, false}; }
  static Order infinity() { return {0, true}; }
  std::string to_string() const { return infinite ? "inf" : std::to_string(k); }
  friend bool operator==(const Order&, const Order&) = default;
};

struct FactorInvariants {
  Poly factor;
  int exponent = 0;
  int epsilon = 0;
  SquareClass discriminant;
  int sigma = 0;
  std::vector<std::pair<Integer, int>> mu;  // candidate prime -> +-1
  /// Degree >= 4: the factor may split over some Q_p, where the rational
  /// restriction can hide an obstruction.
  bool needs_review = false;
};

struct ArcValue {
  CirclePoint sample;
  int value = 0;
};

struct InvariantReport {
  std::string descriptor;
  std::size_t input_dim = 0;
  std::size_t representative_dim = 0;
  FactoredPoly delta;
  std::vector<FactorInvariants> factors;
  std::vector<Poly> skipped;  // non-symmetric factors
  std::optional<WittClassQ> t_minus_one_class;
  std::vector<ArcValue> profile;
  bool metabolic = false;
  Order order;
};

/// Discriminant of f, via the Sylvester resultant with f'.
Rational discriminant(const Poly& f);

/// mu(B) = (-1,-1)^{r(r+3)/2} (det B, -1)^r S(B), with S the Hasse symbol
/// prod_{i<=j} (a_i, a_j) of a diagonalization; rank 2r.
int mu_symbol(const std::vector<Rational>& diag, const Place& p);

/// {2} u primes of the diagonal entries u primes of lambda(1)lambda(-1) and disc(lambda).
std::vector<Integer> candidate_primes(const PrimaryPiece& piece);

/// Throws InvalidArgument on a non-symmetric piece.
FactorInvariants factor_invariants(const PrimaryPiece& piece, const std::vector<Integer>& primes);

/// Signature of (1-w)A + (1-conj w)A^T at one rational sample per arc.
std::vector<ArcValue> signature_profile(const DirectedMatrix& a);
int hermitian_signature(const DirectedMatrix& a, const CirclePoint& w);

bool is_metabolic(const DirectedMatrix& a);
Order order(const DirectedMatrix& a);
bool concordant(const DirectedMatrix& a, const DirectedMatrix& b);

enum class AlexanderSide { kPlus, kMinus, kMixed };
/// det(A - t A^T) for one side; det(t A- - A+) for mixed.
Poly alexander(const SeifertCouple& c, AlexanderSide side);

/// Order read off the quadratic-factor criterion plus the Witt order of the
/// t-1 part; nullopt when some symmetric factor has degree > 2.
std::optional<Order> order_via_quadratic_criterion(const DirectedMatrix& a);

InvariantReport invariant_report(const DirectedMatrix& a, std::string descriptor);

}  // namespace vconc
