#include "vconc/isometric.hpp"

#include "vconc/errors.hpp"

namespace vconc {

std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::kTMinusOne:
      return "t-1";
    case Symmetry::kSymmetric:
      return "symmetric";
    case Symmetry::kNonSymmetric:
      return "non-symmetric";
  }
  return "?";
}

IsometricStructure make_structure(RatMatrix b, RatMatrix s) {
  if (!b.is_square() || !s.is_square() || b.rows() != s.rows()) {
    throw ValidationError(Condition::kDimensionMismatch, "B and S must be square of equal size");
  }
  if (b.rows() % 2 != 0) throw ValidationError(Condition::kOddDimension, "structure dimension must be even");
  if (!b.is_symmetric()) throw ValidationError(Condition::kIsometry, "B is not symmetric");
  if (det(b) == 0) throw ValidationError(Condition::kIsometry, "B is singular");
  if (s.transpose() * b * s != b) throw ValidationError(Condition::kIsometry, "S^T B S != B");
  if (det(s) != 1) throw ValidationError(Condition::kIsometry, "det S != 1");
  if (det(s + RatMatrix::identity(s.rows())) == 0) throw ValidationError(Condition::kIsometry, "-1 is an eigenvalue of S");
  return {std::move(b), std::move(s)};
}

IsometricStructure from_directed(const DirectedMatrix& a) {
  const RatMatrix& m = a.matrix();
  if (det(m) == 0) throw SingularMatrix("from_directed: A is singular");
  RatMatrix t = m.transpose();
  return make_structure(m + t, inverse(m) * t);
}

DirectedMatrix to_directed(const IsometricStructure& s) {
  return DirectedMatrix(s.b * inverse(RatMatrix::identity(s.dim()) + s.s));
}

std::vector<PrimaryPiece> primary_decompose(const IsometricStructure& st) {
  std::vector<PrimaryPiece> pieces;
  if (st.dim() == 0) return pieces;
  FactoredPoly f = factor_q(char_poly(st.s));
  const Poly t_minus_one = Poly::linear(1);
  for (const auto& [lambda, e] : f.factors) {
    PrimaryPiece piece;
    piece.factor = lambda;
    piece.exponent = e;
    piece.basis = kernel_basis(evaluate(lambda.pow(static_cast<unsigned>(e)), st.s));
    piece.b = restrict_form(st.b, piece.basis);
    piece.s = restrict_operator(st.s, piece.basis);
    if (lambda == t_minus_one) {
      piece.symmetry = Symmetry::kTMinusOne;
    } else if (is_symmetric_irreducible(lambda)) {
      piece.symmetry = Symmetry::kSymmetric;
    } else {
      piece.symmetry = Symmetry::kNonSymmetric;
    }
    pieces.push_back(std::move(piece));
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].symmetry != Symmetry::kNonSymmetric) {
      pieces[i].partner = i;
      continue;
    }
    Poly mate = bar(pieces[i].factor).monic();
    for (std::size_t j = 0; j < pieces.size(); ++j)
      if (pieces[j].factor == mate) pieces[i].partner = j;
  }
  return pieces;
}

}  // namespace vconc
