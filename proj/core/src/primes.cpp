#include <algorithm>
#include <array>

#include "vconc/errors.hpp"
#include "vconc/exact.hpp"

namespace vconc {
namespace {

constexpr unsigned long kTrialLimit = 1000000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin_round(const Integer& n, const Integer& base, const Integer& d, unsigned long s) {
  Integer x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer n1 = n - 1;
  if (x == 1 || x == n1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n1) return true;
  }
  return false;
}

Integer pollard_brent(const Integer& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Integer y = seed % n;
  Integer c = (seed * 7 + 1) % n;
  if (c == 0) c = 1;
  const unsigned long m = 128;
  Integer g = 1, r = 1, q = 1, x, ys;
  auto f = [&](const Integer& v) -> Integer { return (v * v + c) % n; };
  while (g == 1) {
    x = y;
    for (Integer i = 0; i < r; ++i) y = f(y);
    Integer k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (Integer i = 0; i < m && i < r - k; ++i) {
        y = f(y);
        Integer diff = abs(x - y);
        q = (q * diff) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      Integer diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void factor_large(const Integer& n, std::map<Integer, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer sqrt_n;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(sqrt_n.get_mpz_t(), n.get_mpz_t());
    std::map<Integer, int> half;
    factor_large(sqrt_n, half);
    for (const auto& [p, e] : half) out[p] += 2 * e;
    return;
  }
  for (unsigned long seed = 2;; ++seed) {
    Integer d = pollard_brent(n, seed);
    if (d != n && d != 1) {
      factor_large(d, out);
      factor_large(n / d, out);
      return;
    }
  }
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul}) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Integer d = n - 1;
  unsigned long s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  // The first 13 prime bases are deterministic below 3.3e24.
  for (unsigned long b : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul}) {
    if (!miller_rabin_round(n, Integer(b), d, s)) return false;
  }
  static const Integer kDeterministicBound("3317044064679887385961981");
  if (n < kDeterministicBound) return true;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

std::map<Integer, int> factor_integer(const Integer& n) {
  if (n == 0) throw InvalidArgument("factor_integer: zero argument");
  Integer m = abs(n);
  std::map<Integer, int> out;
  for (unsigned long p : small_primes()) {
    if (Integer(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++out[Integer(p)];
    }
  }
  if (m > 1) {
    if (m <= Integer(kTrialLimit) * kTrialLimit) {
      ++out[m];
    } else {
      factor_large(m, out);
    }
  }
  return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  for (const auto& [p, e] : factor_integer(n)) out.push_back(p);
  return out;
}

}  // namespace vconc
