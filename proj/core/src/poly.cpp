#include "vconc/poly.hpp"

#include <algorithm>
#include <sstream>

#include "vconc/errors.hpp"

namespace vconc {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const Rational& root) {
  return Poly(std::vector<Rational>{Rational(-root), Rational(1)});
}

Rational Poly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Poly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return *this * inv;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Poly(std::move(d));
}

Poly Poly::reflect() const {
  Poly r = *this;
  for (std::size_t k = 1; k < r.coeffs_.size(); k += 2) r.coeffs_[k] = -r.coeffs_[k];
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {Poly(), *this};
  std::vector<Rational> quo(static_cast<std::size_t>(degree() - dd + 1), Rational(0));
  const Rational inv = 1 / divisor.leading();
  for (int k = degree(); k >= dd; --k) {
    Rational c = rem[static_cast<std::size_t>(k)] * inv;
    quo[static_cast<std::size_t>(k - dd)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = Poly::constant(1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (k == 0 || !unit) {
      os << vconc::to_string(mag);
      if (k > 0) os << "*";
    }
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    const Rational ca = a.coeff(static_cast<std::size_t>(k));
    const Rational cb = b.coeff(static_cast<std::size_t>(k));
    if (ca != cb) return ca < cb;
  }
  return false;
}

Poly FactoredPoly::expand() const {
  Poly p = Poly::constant(unit);
  for (const auto& [f, e] : factors) p *= f.pow(static_cast<unsigned>(e));
  return p;
}

std::string FactoredPoly::to_string(char var) const {
  std::ostringstream os;
  bool wrote = false;
  if (unit != 1 || factors.empty()) {
    os << vconc::to_string(unit);
    wrote = true;
  }
  for (const auto& [f, e] : factors) {
    if (wrote) os << " * ";
    os << "(" << f.to_string(var) << ")";
    if (e > 1) os << "^" << e;
    wrote = true;
  }
  return os.str();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw InvalidArgument("squarefree decomposition of zero");
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() == 0) return out;
  // Yun's algorithm over a field of characteristic zero.
  Poly fm = f.monic();
  Poly d = fm.derivative();
  Poly a = gcd(fm, d);
  Poly b = fm / a;
  Poly c = d / a;
  Poly e = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly g = gcd(b, e);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = b / g;
    c = e / g;
    e = c - b.derivative();
    ++i;
  }
  return out;
}

Poly bar(const Poly& f) {
  if (f.is_zero()) throw InvalidArgument("bar: zero polynomial");
  std::vector<Rational> c = f.coefficients();
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  std::vector<Rational> r(c.rbegin(), c.rend() - static_cast<std::ptrdiff_t>(low));
  return Poly(std::move(r));
}

bool is_symmetric_irreducible(const Poly& f) {
  FactoredPoly fp = factor_q(f);
  if (fp.factors.size() != 1 || fp.factors[0].second != 1) {
    throw InvalidArgument("is_symmetric_irreducible: " + f.to_string() + " is reducible");
  }
  return gcd(f, bar(f)).degree() > 0;
}

}  // namespace vconc
