#include "vconc/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "vconc/errors.hpp"

namespace vconc {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
    for (const auto& x : r) data_.push_back(x);
  }
  for (auto& x : data_) x.canonicalize();
}

RatMatrix::RatMatrix(const std::vector<std::vector<Rational>>& rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.front().size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix rows");
    for (const auto& x : r) data_.push_back(x);
  }
  for (auto& x : data_) x.canonicalize();
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rational>& d) {
  RatMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RatMatrix RatMatrix::hyperbolic(std::size_t h) {
  RatMatrix m(2 * h, 2 * h);
  for (std::size_t k = 0; k < h; ++k) {
    m(2 * k, 2 * k + 1) = 1;
    m(2 * k + 1, 2 * k) = -1;
  }
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InvalidArgument("block out of range");
  RatMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void RatMatrix::set_block(std::size_t r0, std::size_t c0, const RatMatrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw InvalidArgument("block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RatMatrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

bool RatMatrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.get_den() == 1; });
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix product: shape mismatch");
  RatMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
    }
  return r;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix r = *this;
  for (auto& x : r.data_) x = -x;
  return r;
}

std::string RatMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << vconc::to_string((*this)(i, j));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), a.cols(), b);
  return r;
}

RatMatrix hconcat(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw InvalidArgument("hconcat: row mismatch");
  RatMatrix r(a.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

void check_dimension(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw ComputationLimit("dimension " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

namespace {

void require_square(const RatMatrix& m, const char* what) {
  if (!m.is_square()) throw InvalidArgument(std::string(what) + ": matrix is not square");
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<Rational> primitive_integer(std::vector<Rational> v) {
  Integer l = 1, g = 0;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  for (auto& x : v) {
    x *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

}  // namespace

Rational det(const RatMatrix& m) {
  require_square(m, "det");
  check_dimension(m.rows(), 2 * kMaxDimension);
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Scale rows to integers, then Bareiss.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Rational scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  Rational d(a[n - 1][n - 1] * sign);
  return d / scale;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix w = m;
  return rref(w).size();
}

RatMatrix inverse(const RatMatrix& m) {
  require_square(m, "inverse");
  check_dimension(m.rows(), 2 * kMaxDimension);
  const std::size_t n = m.rows();
  RatMatrix aug = hconcat(m, RatMatrix::identity(n));
  auto piv = rref(aug);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) throw SingularMatrix("matrix is singular");
  return aug.block(0, n, n, n);
}

SubspaceBasis kernel_basis(const RatMatrix& m) {
  RatMatrix w = m;
  auto piv = rref(w);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Rational>> vecs;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -w(r, f);
    vecs.push_back(primitive_integer(std::move(v)));
  }
  RatMatrix basis(m.cols(), vecs.size());
  for (std::size_t j = 0; j < vecs.size(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) basis(i, j) = vecs[j][i];
  return {basis};
}

Diagonalization congruent_diagonalize(const RatMatrix& b) {
  if (!b.is_symmetric()) throw InvalidArgument("congruent_diagonalize: matrix is not symmetric");
  check_dimension(b.rows(), 2 * kMaxDimension);
  const std::size_t n = b.rows();
  RatMatrix m = b;
  RatMatrix u = RatMatrix::identity(n);
  auto swap_rc = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(m(i, c), m(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(m(r, i), m(r, j));
    for (std::size_t c = 0; c < n; ++c) std::swap(u(i, c), u(j, c));
  };
  // row_i += f row_j and col_i += f col_j.
  auto add_rc = [&](std::size_t i, std::size_t j, const Rational& f) {
    for (std::size_t c = 0; c < n; ++c) m(i, c) += f * m(j, c);
    for (std::size_t r = 0; r < n; ++r) m(r, i) += f * m(r, j);
    for (std::size_t c = 0; c < n; ++c) u(i, c) += f * u(j, c);
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, p) == 0) ++p;
    if (p < n) {
      if (p != k) swap_rc(k, p);
    } else {
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (m(i, j) != 0) {
            if (i != k) swap_rc(k, i);
            add_rc(k, j, 1);
            found = true;
          }
      if (!found) break;
    }
    const Rational pivot = m(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k) == 0) continue;
      add_rc(r, k, -m(r, k) / pivot);
    }
  }
  Diagonalization out;
  out.diag.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.diag.push_back(m(i, i));
  out.u = std::move(u);
  return out;
}

int signature(const RatMatrix& b) {
  int s = 0;
  for (const auto& d : congruent_diagonalize(b).diag) s += sgn(d);
  return s;
}

Poly char_poly(const RatMatrix& s) {
  require_square(s, "char_poly");
  check_dimension(s.rows());
  const std::size_t n = s.rows();
  // Berkowitz: coefficients of det(tI - S), highest degree first.
  std::vector<Rational> p{Rational(1)};
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Rational> q(r + 2);
    q[0] = 1;
    q[1] = -s(r, r);
    // v = A_r^k C for k = 0..r-1
    std::vector<Rational> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = s(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Rational dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += s(r, i) * v[i];
      q[k + 2] = -dot;
      std::vector<Rational> next(r, Rational(0));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += s(i, j) * v[j];
      v = std::move(next);
    }
    std::vector<Rational> np(r + 2, Rational(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) np[i] += q[i - j] * p[j];
    p = std::move(np);
  }
  std::vector<Rational> low(p.rbegin(), p.rend());
  Poly f(std::move(low));
  return n % 2 == 0 ? f : -f;
}

Poly det_pencil(const RatMatrix& m0, const RatMatrix& m1) {
  require_square(m0, "det_pencil");
  if (m0.rows() != m1.rows() || m0.cols() != m1.cols()) throw InvalidArgument("det_pencil: shape mismatch");
  const std::size_t n = m0.rows();
  // Newton interpolation at t = 0..n.
  std::vector<Rational> xs, coef;
  for (std::size_t k = 0; k <= n; ++k) {
    xs.emplace_back(static_cast<long>(k));
    coef.push_back(det(m0 + m1 * xs.back()));
  }
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = n; i >= j; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  Poly result;
  for (std::size_t i = n + 1; i-- > 0;) {
    result = result * Poly{-xs[i], 1} + Poly::constant(coef[i]);
  }
  return result;
}

RatMatrix evaluate(const Poly& f, const RatMatrix& m) {
  require_square(m, "evaluate");
  RatMatrix acc(m.rows(), m.cols());
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += *it;
  }
  return acc;
}

RatMatrix restrict_form(const RatMatrix& m, const SubspaceBasis& w) {
  if (!m.is_square() || m.rows() != w.ambient()) throw InvalidArgument("restrict_form: shape mismatch");
  return w.basis.transpose() * m * w.basis;
}

RatMatrix restrict_operator(const RatMatrix& m, const SubspaceBasis& w) {
  if (!m.is_square() || m.rows() != w.ambient()) throw InvalidArgument("restrict_operator: shape mismatch");
  const std::size_t k = w.dim();
  RatMatrix aug = hconcat(w.basis, m * w.basis);
  auto piv = rref(aug);
  if (piv.size() != k || (k > 0 && piv[k - 1] != k - 1)) {
    throw NotInvariant("restrict_operator: subspace is not invariant or basis is dependent");
  }
  return aug.block(0, k, k, k);
}

}  // namespace vconc
