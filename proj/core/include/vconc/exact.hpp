#pragma once

// Exact scalars and the local number theory of Q: p-adic valuations,
// square classes, Legendre/Hilbert/Hasse symbols.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vconc {

using Integer = mpz_class;
using Rational = mpq_class;

/// A place of Q: a finite prime or the real place.
class Place {
 public:
  static Place infinity() { return Place(); }
  static Place prime(Integer p);
  static Place prime(long p) { return prime(Integer(p)); }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  /// Only meaningful for finite places.
  const Integer& p() const noexcept { return p_; }

  std::string to_string() const;

  friend bool operator==(const Place& a, const Place& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.p_ == b.p_);
  }

 private:
  Place() : infinite_(true) {}
  explicit Place(Integer p) : p_(std::move(p)), infinite_(false) {}

  Integer p_;
  bool infinite_;
};

/// Element of Q*/Q*^2, held by its squarefree integer representative.
class SquareClass {
 public:
  SquareClass() : rep_(1) {}
  /// Class of a nonzero rational; throws InvalidArgument on zero.
  explicit SquareClass(const Rational& x);

  const Integer& representative() const noexcept { return rep_; }

  SquareClass operator*(const SquareClass& o) const;
  bool is_trivial() const { return rep_ == 1; }

  friend bool operator==(const SquareClass&, const SquareClass&) = default;

  std::string to_string() const { return rep_.get_str(); }

 private:
  struct Squarefree {};
  SquareClass(Squarefree, Integer rep) : rep_(std::move(rep)) {}
  friend SquareClass squarefree_part(const Rational& x);

  Integer rep_;
};

SquareClass squarefree_part(const Rational& x);

// Construction and formatting helpers.

/// Parses "[-]digits[/digits]" (ASCII '-' or U+2212). Throws InvalidArgument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
inline std::string to_string(const Integer& z) { return z.get_str(); }

bool is_integral(const Rational& q);

// Integer number theory (primes.cpp).

/// Deterministic for n < 3.3e24; strong probable-prime beyond.
bool is_prime(const Integer& n);
/// Prime factorization of |n|, n != 0. Trial division up to 10^6, then
/// Miller-Rabin and Pollard rho.
std::map<Integer, int> factor_integer(const Integer& n);
/// Sorted distinct primes dividing |n| (n != 0).
std::vector<Integer> prime_divisors(const Integer& n);

// Local symbols.

/// Legendre symbol (a/p) for an odd prime p.
int legendre(const Integer& a, const Integer& p);

/// v with x = p^v * u and u a p-adic unit. Throws on x == 0.
long padic_val(const Rational& x, const Integer& p);

/// Squarefree integer s with x = s * (nonzero rational)^2.
SquareClass squarefree_part(const Rational& x);

/// Whether x is a square in the completion Q_p (or R for the infinite place).
bool is_square_qp(const Rational& x, const Place& place);

/// Hilbert symbol (a,b) at the given place, in {-1,+1}.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& place);

/// Hasse symbol prod_{i<j} (a_i,a_j) of a diagonal form.
int hasse_symbol(std::span<const Rational> diag, const Place& place);

}  // namespace vconc
