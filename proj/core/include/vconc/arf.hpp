#pragma once

// Quadratic forms over F_2 from integral directed matrices, and the Arf invariant.

#include <cstdint>

#include "vconc/seifert.hpp"

namespace vconc {

/// q(x) = x^T A x mod 2 on F_2^dim, dim <= 64. Vectors are bit masks.
class F2QuadForm {
 public:
  F2QuadForm() = default;
  /// Throws InvalidArgument on non-integral or non-square input.
  explicit F2QuadForm(const RatMatrix& a);

  std::size_t dim() const noexcept { return dim_; }
  int value(std::uint64_t x) const;
  int polar(std::uint64_t x, std::uint64_t y) const;
  /// Rows of (A + A^T) mod 2.
  const std::vector<std::uint64_t>& polarization() const noexcept { return polar_; }
  RatMatrix polarization_matrix() const;

  /// Same function on every vector.
  bool same_function(const F2QuadForm& o) const;

 private:
  std::size_t dim_ = 0;
  std::uint64_t diag_ = 0;
  std::vector<std::uint64_t> polar_;
};

inline constexpr std::size_t kMajorityMaxDim = 24;

/// Form of one side of an integral couple; verifies that both sides agree.
F2QuadForm quad_form(const SeifertCouple& c, Side side);

bool is_regular(const F2QuadForm& q);

/// Majority count for dim <= 24, symplectic basis above. Throws InvalidArgument when irregular.
int arf(const F2QuadForm& q);
int arf_majority(const F2QuadForm& q);
int arf_symplectic(const F2QuadForm& q);

/// Orthogonal sum.
F2QuadForm orthogonal_sum(const F2QuadForm& a, const F2QuadForm& b);

}  // namespace vconc
