#pragma once

// Brute-force reference computations shared by unit and acceptance tests.
// None of these call into the library's number theory.

#include <set>
#include <utility>

#include "vconc/linalg.hpp"

namespace vconc::oracle {

// Square class of a nonzero integer in Q_p: valuation parity and the unit
// part modulo p (odd p, as a Legendre sign) or modulo 8.
inline std::pair<int, long> local_class(long n, long p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  long modulus = p == 2 ? 8 : p;
  long u = ((n % modulus) + modulus) % modulus;
  if (p != 2) {
    long r = 1;
    for (long e = 0; e < (p - 1) / 2; ++e) r = r * u % p;
    u = r == 1 ? 1 : -1;
  }
  return {v % 2, u};
}

// (a,b)_p = 1 iff b is a norm from Q_p(sqrt a); the norm group is sampled
// from x^2 - a y^2 over a box large enough to meet every square class.
inline int hilbert(long a, long b, long p) {
  std::set<std::pair<int, long>> norms;
  const long range = p == 2 ? 64 : 8 * p;
  for (long x = 0; x < range; ++x)
    for (long y = 0; y < range; ++y) {
      long n = x * x - a * y * y;
      if (n != 0) norms.insert(local_class(n, p));
    }
  return norms.count(local_class(b, p)) ? 1 : -1;
}

inline Rational cofactor_det(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    RatMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    Rational term = m(0, c) * cofactor_det(minor);
    total += (c % 2 ? -term : term);
  }
  return total;
}

}  // namespace vconc::oracle
