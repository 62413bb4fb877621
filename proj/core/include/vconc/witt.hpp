#pragma once

// Witt classes over Q and their images in W(R) and W(F_p).

#include <optional>

#include "vconc/linalg.hpp"

namespace vconc {

/// Diagonal representative <a_1, ..., a_m>, entries squarefree integers.
struct WittClassQ {
  std::vector<Rational> diag;

  std::string to_string() const;
  friend bool operator==(const WittClassQ&, const WittClassQ&) = default;
};

/// Class in W(F_p) by its complete invariants: e = rank mod 2 and d = 1
/// when the signed discriminant (-1)^{m(m-1)/2} prod a_i is a nonsquare
/// (always 0 for p = 2).
struct WittClassFp {
  Integer p;
  int e = 0;
  int d = 0;

  bool is_trivial() const { return e == 0 && d == 0; }
  /// Order in W(F_p): 1, 2 or 4.
  int order() const;
  std::string to_string() const;

  friend WittClassFp operator+(const WittClassFp& x, const WittClassFp& y);
  friend bool operator==(const WittClassFp&, const WittClassFp&) = default;
};

/// Throws InvalidArgument on a singular or non-symmetric form.
WittClassQ witt_class(const RatMatrix& b);
/// Throws InvalidArgument on a zero entry.
WittClassQ witt_class(const std::vector<Rational>& diag);

WittClassQ witt_sum(const WittClassQ& x, const WittClassQ& y);
WittClassQ witt_negate(const WittClassQ& x);

int boundary_infinity(const WittClassQ& w);
WittClassFp boundary_p(const WittClassQ& w, const Integer& p);

/// {2} together with every prime dividing an entry.
std::vector<Integer> witt_primes(const WittClassQ& w);

bool is_trivial_wittq(const WittClassQ& w);
/// Order in W(Q): nullopt when infinite (nonzero signature).
std::optional<int> witt_order(const WittClassQ& w);

}  // namespace vconc
