#pragma once

// Directed isometric structures (B, S) and their primary decomposition.

#include "vconc/seifert.hpp"

namespace vconc {

/// Regular symmetric B with an isometry S, det S = 1 and det(S + I) != 0.
struct IsometricStructure {
  RatMatrix b;
  RatMatrix s;

  std::size_t dim() const noexcept { return b.rows(); }
};

/// Throws ValidationError(kIsometry) when the structure conditions fail.
IsometricStructure make_structure(RatMatrix b, RatMatrix s);

/// B = A + A^T, S = A^{-1} A^T. Throws SingularMatrix when det A = 0.
IsometricStructure from_directed(const DirectedMatrix& a);
/// A = B (I + S)^{-1}.
DirectedMatrix to_directed(const IsometricStructure& s);

enum class Symmetry { kTMinusOne, kSymmetric, kNonSymmetric };
std::string to_string(Symmetry s);

struct PrimaryPiece {
  Poly factor;
  int exponent = 0;
  SubspaceBasis basis;
  RatMatrix b;  // restricted form
  RatMatrix s;  // restricted isometry
  Symmetry symmetry = Symmetry::kSymmetric;
  /// Index of the partner piece for a non-symmetric factor.
  std::size_t partner = 0;
};

/// One piece per irreducible factor of det(S - tI), in factor order.
std::vector<PrimaryPiece> primary_decompose(const IsometricStructure& s);

}  // namespace vconc
