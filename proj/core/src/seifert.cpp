#include "vconc/seifert.hpp"

#include "vconc/errors.hpp"

namespace vconc {

std::string to_string(Ring r) { return r == Ring::kZ ? "Z" : "Q"; }
std::string to_string(Side s) { return s == Side::kPlus ? "plus" : "minus"; }

DirectedMatrix::DirectedMatrix(RatMatrix a) : a_(std::move(a)) {
  if (!a_.is_square()) throw ValidationError(Condition::kNotSquare, "directed matrix must be square");
  if (a_.rows() % 2 != 0) throw ValidationError(Condition::kOddDimension, "directed matrix must have even dimension");
  if (det(a_ + a_.transpose()) == 0) {
    throw ValidationError(Condition::kSymmetrization, "A + A^T is singular");
  }
}

SeifertCouple validate_couple(const RatMatrix& a_plus, const RatMatrix& a_minus, Ring ring) {
  if (!a_plus.is_square() || !a_minus.is_square()) {
    throw ValidationError(Condition::kNotSquare, "couple matrices must be square");
  }
  if (a_plus.rows() != a_minus.rows()) {
    throw ValidationError(Condition::kDimensionMismatch,
                          "A+ is " + std::to_string(a_plus.rows()) + "x" + std::to_string(a_plus.rows()) + " but A- is " +
                              std::to_string(a_minus.rows()) + "x" + std::to_string(a_minus.rows()));
  }
  if (a_plus.rows() % 2 != 0) throw ValidationError(Condition::kOddDimension, "couple dimension must be even");
  check_dimension(a_plus.rows());
  if (ring == Ring::kZ && (!a_plus.is_integral() || !a_minus.is_integral())) {
    throw ValidationError(Condition::kNonIntegral, "Z-couple has non-integral entries");
  }
  RatMatrix diff = a_minus - a_plus;
  if (!diff.is_skew_symmetric()) throw ValidationError(Condition::kSkewSymmetry, "A- - A+ is not skew-symmetric");
  Rational d = det(diff);
  if (ring == Ring::kZ && d != 1) {
    throw ValidationError(Condition::kDeterminant, "det(A- - A+) = " + to_string(d) + ", expected 1");
  }
  if (ring == Ring::kQ && d == 0) throw ValidationError(Condition::kDeterminant, "det(A- - A+) = 0");
  SeifertCouple c{a_plus, a_minus, ring, true};
  c.admissible = det(a_plus + a_plus.transpose()) != 0;
  return c;
}

SeifertCouple block_sum(const SeifertCouple& x, const SeifertCouple& y) {
  if (x.ring != y.ring) throw InvalidArgument("block_sum: ring mismatch");
  return {block_diag(x.a_plus, y.a_plus), block_diag(x.a_minus, y.a_minus), x.ring, x.admissible && y.admissible};
}

DirectedMatrix block_sum(const DirectedMatrix& x, const DirectedMatrix& y) {
  return DirectedMatrix(block_diag(x.matrix(), y.matrix()));
}

SeifertCouple negate(const SeifertCouple& x) { return {-x.a_plus, -x.a_minus, x.ring, x.admissible}; }

DirectedMatrix negate(const DirectedMatrix& x) { return DirectedMatrix(-x.matrix()); }

DirectedMatrix multiple(const DirectedMatrix& x, unsigned k) {
  RatMatrix m;
  for (unsigned i = 0; i < k; ++i) m = block_diag(m, x.matrix());
  return DirectedMatrix(std::move(m));
}

DirectedMatrix project(const SeifertCouple& c, Side side) {
  if (!c.admissible) throw ValidationError(Condition::kAdmissibility, "couple is not admissible");
  return DirectedMatrix(side == Side::kPlus ? c.a_plus : c.a_minus);
}

SeifertCouple hyperbolic_completion(const DirectedMatrix& a) {
  const RatMatrix& m = a.matrix();
  return {m, m + RatMatrix::hyperbolic(m.rows() / 2), m.is_integral() ? Ring::kZ : Ring::kQ, true};
}

SeifertCouple ambient_shift(const SeifertCouple& c, int direction, std::size_t h, const RatMatrix& p) {
  const std::size_t n = c.dim();
  if (direction != 1 && direction != -1) throw InvalidArgument("ambient_shift: direction must be +1 or -1");
  if (p.rows() != 2 * h || p.cols() != n) {
    throw InvalidArgument("ambient_shift: P must be " + std::to_string(2 * h) + "x" + std::to_string(n));
  }
  auto grow = [&](const RatMatrix& a, bool with_h) {
    RatMatrix r(n + 2 * h, n + 2 * h);
    r.set_block(0, 0, a);
    r.set_block(n, 0, p);
    if (with_h) r.set_block(n, n, RatMatrix::hyperbolic(h));
    return r;
  };
  RatMatrix plus = grow(c.a_plus, direction == -1);
  RatMatrix minus = grow(c.a_minus, direction == 1);
  Ring ring = c.ring == Ring::kZ && p.is_integral() ? Ring::kZ : Ring::kQ;
  return validate_couple(plus, minus, ring);
}

SeifertCouple tube_stabilize(const SeifertCouple& c, Side side, const RatMatrix& gamma, const Rational& delta) {
  const std::size_t n = c.dim();
  if (gamma.rows() != n || gamma.cols() != 1) {
    throw InvalidArgument("tube_stabilize: gamma must be " + std::to_string(n) + "x1");
  }
  auto border = [&](const RatMatrix& a, bool chosen) {
    RatMatrix r(n + 2, n + 2);
    r.set_block(0, 0, a);
    r.set_block(0, n, gamma);
    r.set_block(n, 0, gamma.transpose());
    r(n, n) = delta;
    if (chosen) {
      r(n, n + 1) = 1;
    } else {
      r(n + 1, n) = 1;
    }
    return r;
  };
  RatMatrix plus = border(c.a_plus, side == Side::kPlus);
  RatMatrix minus = border(c.a_minus, side == Side::kMinus);
  Ring ring = c.ring == Ring::kZ && gamma.is_integral() && is_integral(delta) ? Ring::kZ : Ring::kQ;
  return validate_couple(plus, minus, ring);
}

DirectedMatrix nonsingular_representative(const DirectedMatrix& a) {
  RatMatrix m = a.matrix();
  while (m.rows() > 0 && det(m) == 0) {
    const std::size_t n = m.rows();
    // v^T m = 0
    RatMatrix v = kernel_basis(m.transpose()).basis.column(0);
    RatMatrix mv = m * v;  // nonzero because m + m^T is nonsingular
    // Complement of v inside the B-orthogonal hyperplane {x : x^T m v = 0}.
    SubspaceBasis hyper = kernel_basis(mv.transpose());
    RatMatrix chosen = v;
    for (std::size_t j = 0; j < hyper.dim() && chosen.cols() < n - 1; ++j) {
      RatMatrix trial = hconcat(chosen, hyper.basis.column(j));
      if (rank(trial) == trial.cols()) chosen = std::move(trial);
    }
    RatMatrix w = chosen.block(0, 1, n, n - 2);
    m = w.transpose() * m * w;
  }
  return DirectedMatrix(std::move(m));
}

}  // namespace vconc
