#pragma once

// Dense exact matrices over Q.

#include <initializer_list>
#include <string>
#include <vector>

#include "vconc/exact.hpp"
#include "vconc/poly.hpp"

namespace vconc {

inline constexpr std::size_t kMaxDimension = 64;

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  explicit RatMatrix(const std::vector<std::vector<Rational>>& rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix diagonal(const std::vector<Rational>& d);
  /// Block sum of h copies of [[0,1],[-1,0]].
  static RatMatrix hyperbolic(std::size_t h);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatMatrix transpose() const;
  RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  RatMatrix column(std::size_t j) const { return block(0, j, rows_, 1); }
  void set_block(std::size_t r0, std::size_t c0, const RatMatrix& m);

  bool is_symmetric() const;
  bool is_skew_symmetric() const;
  bool is_integral() const;
  bool is_zero() const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rational& c);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rational& c) { return a *= c; }
  friend RatMatrix operator*(const Rational& c, RatMatrix a) { return a *= c; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  RatMatrix operator-() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Block-diagonal sum.
RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b);
/// [a | b]
RatMatrix hconcat(const RatMatrix& a, const RatMatrix& b);

/// Throws ComputationLimit when n exceeds kMaxDimension (or the given cap).
void check_dimension(std::size_t n, std::size_t cap = kMaxDimension);

/// Fraction-free (Bareiss) determinant.
Rational det(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
/// Throws SingularMatrix.
RatMatrix inverse(const RatMatrix& m);

/// Columns span the right null space; each column is a primitive integer vector.
struct SubspaceBasis {
  RatMatrix basis;  // ambient x dim

  std::size_t ambient() const { return basis.rows(); }
  std::size_t dim() const { return basis.cols(); }
};

SubspaceBasis kernel_basis(const RatMatrix& m);

struct Diagonalization {
  std::vector<Rational> diag;
  RatMatrix u;  // u * B * u^T == diag(diag)
};

Diagonalization congruent_diagonalize(const RatMatrix& b);
int signature(const RatMatrix& b);

/// det(S - tI), division-free (Berkowitz).
Poly char_poly(const RatMatrix& s);
/// det(m0 + t*m1) by evaluation and interpolation.
Poly det_pencil(const RatMatrix& m0, const RatMatrix& m1);

/// f(M) for square M.
RatMatrix evaluate(const Poly& f, const RatMatrix& m);

/// W^T M W.
RatMatrix restrict_form(const RatMatrix& m, const SubspaceBasis& w);
/// Matrix X with M W = W X. Throws NotInvariant when M W leaves span(W).
RatMatrix restrict_operator(const RatMatrix& m, const SubspaceBasis& w);

}  // namespace vconc
