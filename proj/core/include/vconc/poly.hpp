#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vconc/exact.hpp"

namespace vconc {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t degree);
  /// The polynomial t - root.
  static Poly linear(const Rational& root);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coeff(std::size_t k) const;
  const Rational& leading() const;

  Rational operator()(const Rational& t) const;
  int sign_at(const Rational& t) const { return sgn((*this)(t)); }

  Poly monic() const;
  Poly derivative() const;
  /// f(-t)
  Poly reflect() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  /// Euclidean division; throws InvalidArgument on a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  Poly pow(unsigned exponent) const;

  friend bool operator==(const Poly&, const Poly&) = default;

  std::string to_string(char var = 't') const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Deterministic total order used to sort factor lists.
bool poly_less(const Poly& a, const Poly& b);

/// unit * prod factor_i^exponent_i with monic irreducible, pairwise distinct factors.
struct FactoredPoly {
  Rational unit;
  std::vector<std::pair<Poly, int>> factors;

  Poly expand() const;
  std::string to_string(char var = 't') const;
};

inline constexpr int kMaxPolyDegree = 64;

/// Complete factorization over Q. Throws ComputationLimit above degree 64.
FactoredPoly factor_q(const Poly& f);

/// Squarefree decomposition: monic s_i with f = lc * prod s_i^i.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

/// t^d f(1/t) with d minimal such that the constant term is nonzero.
Poly bar(const Poly& f);

/// Whether the irreducible f shares a factor with bar(f).
/// Throws InvalidArgument on reducible input.
bool is_symmetric_irreducible(const Poly& f);

/// Open rational interval (lo, hi); lo == hi marks an exact rational root.
struct Interval {
  Rational lo;
  Rational hi;

  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Disjoint isolating intervals for the real roots of a squarefree f,
/// ordered left to right. Throws InvalidArgument on non-squarefree input.
std::vector<Interval> sturm_isolate(const Poly& f);

/// Number of distinct real roots of squarefree f in the half-open (a, b].
int sturm_count(const Poly& f, const Rational& a, const Rational& b);

/// Halves an isolating interval of the squarefree f until its width is at most max_width.
Interval refine_root(const Poly& f, Interval iv, const Rational& max_width);

/// Trace polynomial g with f(t) = t^{deg f / 2} g(t + 1/t); f palindromic of even degree.
Poly trace_polynomial(const Poly& f);

/// Rational point (x, y) on the unit circle.
struct CirclePoint {
  Rational x;
  Rational y;

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
  std::string to_string() const;
};

/// Point at tan(theta/2) = s.
CirclePoint circle_point_from_slope(const Rational& s);

/// Unit-circle root e^{i theta}, theta in (0, 2 pi), located by u = 2 cos(theta).
struct CircleRoot {
  Poly trace_factor;  // irreducible g(u); the root at u = +-2 uses g = u +- 2
  Interval u;         // isolates the root of trace_factor
  bool upper;         // theta in (0, pi]
};

/// Roots of f on S^1 \ {1} in increasing angle, plus one rational sample per
/// open arc: samples[k] lies strictly between roots[k-1] and roots[k]
/// (with omega = 1 closing both ends), so samples.size() == roots.size() + 1.
struct CircleArcs {
  std::vector<CircleRoot> roots;
  std::vector<CirclePoint> samples;
};

CircleArcs circle_arcs(const Poly& f);

}  // namespace vconc
