#pragma once

// Seifert couples, directed matrices and the matrix-level surface moves.

#include "vconc/linalg.hpp"

namespace vconc {

enum class Ring { kZ, kQ };
enum class Side { kPlus, kMinus };

std::string to_string(Ring r);
std::string to_string(Side s);

/// Square matrix of even dimension with A + A^T nonsingular.
class DirectedMatrix {
 public:
  DirectedMatrix() = default;
  /// Throws ValidationError (kNotSquare, kOddDimension, kSymmetrization).
  explicit DirectedMatrix(RatMatrix a);

  const RatMatrix& matrix() const noexcept { return a_; }
  std::size_t dim() const noexcept { return a_.rows(); }

  friend bool operator==(const DirectedMatrix&, const DirectedMatrix&) = default;

 private:
  RatMatrix a_;
};

struct SeifertCouple {
  RatMatrix a_plus;
  RatMatrix a_minus;
  Ring ring = Ring::kZ;
  bool admissible = true;

  std::size_t dim() const noexcept { return a_plus.rows(); }
  friend bool operator==(const SeifertCouple&, const SeifertCouple&) = default;
};

/// Checks shape, skew-symmetry of A- - A+, and det(A- - A+) (= 1 over Z,
/// nonzero over Q). Throws ValidationError naming the violated condition.
SeifertCouple validate_couple(const RatMatrix& a_plus, const RatMatrix& a_minus, Ring ring);

SeifertCouple block_sum(const SeifertCouple& x, const SeifertCouple& y);
DirectedMatrix block_sum(const DirectedMatrix& x, const DirectedMatrix& y);
SeifertCouple negate(const SeifertCouple& x);
DirectedMatrix negate(const DirectedMatrix& x);
/// k-fold block sum; k = 0 gives the 0x0 matrix.
DirectedMatrix multiple(const DirectedMatrix& x, unsigned k);

/// Throws ValidationError(kAdmissibility) for inadmissible couples.
DirectedMatrix project(const SeifertCouple& c, Side side);

/// (A, A + H^n).
SeifertCouple hyperbolic_completion(const DirectedMatrix& a);

/// Ambient shift by +-Sigma of genus h; p has shape 2h x 2g.
SeifertCouple ambient_shift(const SeifertCouple& c, int direction, std::size_t h, const RatMatrix& p);

/// Tube stabilization bordering with column gamma (2g x 1) and diagonal delta.
SeifertCouple tube_stabilize(const SeifertCouple& c, Side side, const RatMatrix& gamma, const Rational& delta);

/// A concordant nonsingular directed matrix, obtained by repeatedly
/// splitting off a metabolic 2x2 summand along a left null vector.
DirectedMatrix nonsingular_representative(const DirectedMatrix& a);

}  // namespace vconc
