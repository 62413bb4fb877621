#include "vconc/witt.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "vconc/errors.hpp"

namespace vconc {

std::string WittClassQ::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (i) s += ", ";
    s += vconc::to_string(diag[i]);
  }
  return s + ">";
}

int WittClassFp::order() const {
  if (p == 2) return e ? 2 : 1;
  if (p % 4 == 1) return is_trivial() ? 1 : 2;
  if (e) return 4;
  return d ? 2 : 1;
}

std::string WittClassFp::to_string() const {
  return "W(F_" + p.get_str() + ")(e=" + std::to_string(e) + ", d=" + std::to_string(d) + ")";
}

WittClassFp operator+(const WittClassFp& x, const WittClassFp& y) {
  if (x.p != y.p) throw InvalidArgument("W(F_p) sum: prime mismatch");
  WittClassFp r{x.p, (x.e + y.e) % 2, 0};
  if (x.p != 2) {
    int minus_one_nonsquare = legendre(Integer(-1), x.p) == -1 ? 1 : 0;
    r.d = (x.d + y.d + minus_one_nonsquare * x.e * y.e) % 2;
  }
  return r;
}

WittClassQ witt_class(const std::vector<Rational>& diag) {
  WittClassQ w;
  for (const auto& a : diag) {
    if (a == 0) throw InvalidArgument("witt_class: zero diagonal entry");
    w.diag.emplace_back(squarefree_part(a).representative());
  }
  return w;
}

WittClassQ witt_class(const RatMatrix& b) {
  if (!b.is_symmetric()) throw InvalidArgument("witt_class: form is not symmetric");
  auto dz = congruent_diagonalize(b);
  if (std::any_of(dz.diag.begin(), dz.diag.end(), [](const Rational& x) { return x == 0; })) {
    throw InvalidArgument("witt_class: form is singular");
  }
  return witt_class(dz.diag);
}

WittClassQ witt_sum(const WittClassQ& x, const WittClassQ& y) {
  WittClassQ r = x;
  r.diag.insert(r.diag.end(), y.diag.begin(), y.diag.end());
  return r;
}

WittClassQ witt_negate(const WittClassQ& x) {
  WittClassQ r = x;
  for (auto& a : r.diag) a = -a;
  return r;
}

int boundary_infinity(const WittClassQ& w) {
  int s = 0;
  for (const auto& a : w.diag) s += sgn(a);
  return s;
}

WittClassFp boundary_p(const WittClassQ& w, const Integer& p) {
  if (!is_prime(p)) throw InvalidArgument("boundary_p: " + p.get_str() + " is not prime");
  WittClassFp r{p, 0, 0};
  long m = 0;
  Rational prod = 1;
  for (const auto& a : w.diag) {
    long v = padic_val(a, p);
    if (v % 2 == 0) continue;
    ++m;
    Rational unit = a;
    if (v > 0) {
      Integer pv;
      mpz_pow_ui(pv.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(v));
      unit /= pv;
    } else {
      Integer pv;
      mpz_pow_ui(pv.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(-v));
      unit *= pv;
    }
    prod *= unit;
  }
  r.e = static_cast<int>(m % 2);
  if (p != 2 && m > 0) {
    if ((m * (m - 1) / 2) % 2 != 0) prod = -prod;
    Integer num_den = prod.get_num() * prod.get_den();
    r.d = legendre(num_den, p) == -1 ? 1 : 0;
  }
  return r;
}

std::vector<Integer> witt_primes(const WittClassQ& w) {
  std::set<Integer> ps{Integer(2)};
  for (const auto& a : w.diag) {
    for (const auto& q : prime_divisors(a.get_num())) ps.insert(q);
    for (const auto& q : prime_divisors(a.get_den())) ps.insert(q);
  }
  return {ps.begin(), ps.end()};
}

bool is_trivial_wittq(const WittClassQ& w) {
  if (boundary_infinity(w) != 0) return false;
  for (const auto& p : witt_primes(w))
    if (!boundary_p(w, p).is_trivial()) return false;
  return true;
}

std::optional<int> witt_order(const WittClassQ& w) {
  if (boundary_infinity(w) != 0) return std::nullopt;
  int order = 1;
  for (const auto& p : witt_primes(w)) order = std::lcm(order, boundary_p(w, p).order());
  return order;
}

}  // namespace vconc
