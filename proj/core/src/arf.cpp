#include "vconc/arf.hpp"

#include <bit>

#include "vconc/errors.hpp"

namespace vconc {
namespace {

int parity(std::uint64_t x) { return std::popcount(x) & 1; }

int mod2(const Rational& x) {
  Integer r = x.get_num() % 2;
  return r != 0 ? 1 : 0;
}

}  // namespace

F2QuadForm::F2QuadForm(const RatMatrix& a) {
  if (!a.is_square()) throw InvalidArgument("quadratic form: matrix is not square");
  if (!a.is_integral()) throw InvalidArgument("quadratic form: matrix has non-integral entries");
  check_dimension(a.rows());
  dim_ = a.rows();
  polar_.assign(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (mod2(a(i, i))) diag_ |= std::uint64_t{1} << i;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i != j && (mod2(a(i, j)) ^ mod2(a(j, i)))) polar_[i] |= std::uint64_t{1} << j;
    }
  }
}

int F2QuadForm::value(std::uint64_t x) const {
  // sum_i a_ii x_i + sum_{i<j} b_ij x_i x_j
  int v = parity(diag_ & x);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!((x >> i) & 1)) continue;
    std::uint64_t above = i + 1 < 64 ? (~std::uint64_t{0} << (i + 1)) : 0;
    v ^= parity(polar_[i] & x & above);
  }
  return v;
}

int F2QuadForm::polar(std::uint64_t x, std::uint64_t y) const {
  int v = 0;
  for (std::size_t i = 0; i < dim_; ++i)
    if ((x >> i) & 1) v ^= parity(polar_[i] & y);
  return v;
}

RatMatrix F2QuadForm::polarization_matrix() const {
  RatMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = static_cast<long>((polar_[i] >> j) & 1);
  return m;
}

bool F2QuadForm::same_function(const F2QuadForm& o) const {
  return dim_ == o.dim_ && diag_ == o.diag_ && polar_ == o.polar_;
}

F2QuadForm quad_form(const SeifertCouple& c, Side side) {
  F2QuadForm plus(c.a_plus), minus(c.a_minus);
  if (!plus.same_function(minus)) throw Error("quad_form: the two sides define different quadratic forms");
  return side == Side::kPlus ? plus : minus;
}

bool is_regular(const F2QuadForm& q) {
  // Gaussian elimination on the polarization rows.
  std::vector<std::uint64_t> rows = q.polarization();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < q.dim(); ++col) {
    std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t p = rank;
    while (p < rows.size() && !(rows[p] & bit)) ++p;
    if (p == rows.size()) return false;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && (rows[r] & bit)) rows[r] ^= rows[rank];
    ++rank;
  }
  return true;
}

int arf_majority(const F2QuadForm& q) {
  if (q.dim() > kMajorityMaxDim) throw ComputationLimit("arf_majority: dimension exceeds 24");
  if (!is_regular(q)) throw InvalidArgument("arf: form is not regular");
  const std::uint64_t total = std::uint64_t{1} << q.dim();
  std::uint64_t ones = 0;
  for (std::uint64_t x = 0; x < total; ++x) ones += static_cast<std::uint64_t>(q.value(x));
  return 2 * ones > total ? 1 : 0;
}

int arf_symplectic(const F2QuadForm& q) {
  if (!is_regular(q)) throw InvalidArgument("arf: form is not regular");
  std::vector<std::uint64_t> rest;
  for (std::size_t i = 0; i < q.dim(); ++i) rest.push_back(std::uint64_t{1} << i);
  int result = 0;
  while (!rest.empty()) {
    std::uint64_t a = rest.front();
    std::size_t partner = 0;
    for (std::size_t j = 1; j < rest.size(); ++j) {
      if (q.polar(a, rest[j])) {
        partner = j;
        break;
      }
    }
    if (partner == 0) throw Error("arf_symplectic: degenerate pairing");
    std::uint64_t b = rest[partner];
    result ^= q.value(a) & q.value(b);
    std::vector<std::uint64_t> next;
    for (std::size_t j = 1; j < rest.size(); ++j) {
      if (j == partner) continue;
      std::uint64_t c = rest[j];
      std::uint64_t adj = c;
      if (q.polar(c, b)) adj ^= a;
      if (q.polar(c, a)) adj ^= b;
      next.push_back(adj);
    }
    rest = std::move(next);
  }
  return result;
}

int arf(const F2QuadForm& q) { return q.dim() <= kMajorityMaxDim ? arf_majority(q) : arf_symplectic(q); }

F2QuadForm orthogonal_sum(const F2QuadForm& a, const F2QuadForm& b) {
  RatMatrix m(a.dim() + b.dim(), a.dim() + b.dim());
  auto fill = [&](const F2QuadForm& f, std::size_t off) {
    // Upper-triangular generator: diagonal from q(e_i), upper entries from the polarization.
    for (std::size_t i = 0; i < f.dim(); ++i) {
      m(off + i, off + i) = f.value(std::uint64_t{1} << i);
      for (std::size_t j = i + 1; j < f.dim(); ++j) m(off + i, off + j) = static_cast<long>((f.polarization()[i] >> j) & 1);
    }
  };
  fill(a, 0);
  fill(b, a.dim());
  return F2QuadForm(m);
}

}  // namespace vconc
