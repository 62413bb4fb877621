#pragma once

// The K(m,n) family and the embedded fixtures.

#include <string_view>

#include "vconc/seifert.hpp"

namespace vconc {

inline constexpr int kMaxShift = 16;

/// Base couple ([[m,0],[0,-n]], [[m,1],[-1,-n]]) shifted |i| times by
/// ambient_shift with h = 1 and P = [H ... H].
SeifertCouple kmn_couple(const Integer& m, const Integer& n, int i);

/// "6.85091", "5.2433", "kmn" (= kmn(3,7,0)) or "kmn(m,n,i)". Throws NotFound.
SeifertCouple fixture(std::string_view name);
std::vector<std::string> fixture_names();

enum class Criterion { kCertifiedOrder2, kInconclusive, kInapplicable };
std::string to_string(Criterion c);

/// Sufficient conditions at p for order 2 of the (-1)-shifted plus matrix.
Criterion order2_criteria(const Integer& m, const Integer& n, const Integer& p);

struct FamilyMember {
  long k;
  Integer m;
  bool prime;
};

/// m_k = 3 + 4 * 19^2 * k for k = 0..k_max (paired with n = 11).
std::vector<FamilyMember> dirichlet_family(long k_max);

}  // namespace vconc
