// Factorization over Q: squarefree decomposition, factorization modulo a
// small prime (distinct-degree + Cantor-Zassenhaus), multifactor Hensel
// lifting and subset recombination with the leading-coefficient trick.

#include <algorithm>
#include <cstdint>
#include <random>

#include "vconc/errors.hpp"
#include "vconc/poly.hpp"

namespace vconc {
namespace {

using u64 = std::uint64_t;
using FpPoly = std::vector<u64>;
using ZPoly = std::vector<Integer>;

// ---- arithmetic in F_p[x], p < 2^31 ----

struct Fp {
  u64 p;

  void trim(FpPoly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  u64 inv(u64 a) const {
    // Fermat; p prime.
    u64 r = 1, b = a % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  FpPoly add(FpPoly a, const FpPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
    trim(a);
    return a;
  }
  FpPoly sub(FpPoly a, const FpPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
  }
  FpPoly mul(const FpPoly& a, const FpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }
  // Returns (quotient, remainder).
  std::pair<FpPoly, FpPoly> divmod(FpPoly a, const FpPoly& b) const {
    if (a.size() < b.size()) return {{}, a};
    FpPoly q(a.size() - b.size() + 1, 0);
    u64 li = inv(b.back());
    for (std::size_t k = a.size(); k-- >= b.size();) {
      u64 c = a[k] * li % p;
      q[k - (b.size() - 1)] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::size_t idx = k - (b.size() - 1) + j;
        a[idx] = (a[idx] + p - c * b[j] % p) % p;
      }
      if (k == 0) break;
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
  }
  FpPoly mod(const FpPoly& a, const FpPoly& b) const { return divmod(a, b).second; }
  FpPoly monic(FpPoly a) const {
    if (a.empty()) return a;
    u64 li = inv(a.back());
    for (auto& c : a) c = c * li % p;
    return a;
  }
  FpPoly gcd(FpPoly a, FpPoly b) const {
    while (!b.empty()) {
      FpPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // s, t with s*a + t*b = gcd(a, b) (monic).
  void xgcd(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t) const {
    FpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      FpPoly s2 = sub(s0, mul(q, s1));
      FpPoly t2 = sub(t0, mul(q, t1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    u64 li = inv(r0.back());
    for (auto& c : s0) c = c * li % p;
    for (auto& c : t0) c = c * li % p;
    s = s0;
    t = t0;
  }
  FpPoly powmod(FpPoly base, Integer e, const FpPoly& m) const {
    FpPoly r{1};
    base = mod(base, m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = mod(mul(r, base), m);
      e >>= 1;
      if (e > 0) base = mod(mul(base, base), m);
    }
    return r;
  }
  FpPoly derivative(const FpPoly& a) const {
    if (a.size() <= 1) return {};
    FpPoly d(a.size() - 1);
    for (std::size_t k = 1; k < a.size(); ++k) d[k - 1] = a[k] * (k % p) % p;
    FpPoly r = d;
    trim(r);
    return r;
  }
};

FpPoly reduce(const ZPoly& f, u64 p) {
  FpPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer c = f[i] % Integer(p);
    if (c < 0) c += p;
    r[i] = c.get_ui();
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Equal-degree splitting of a squarefree monic g whose irreducible factors
// all have degree d.
void equal_degree(const Fp& F, const FpPoly& g, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  const int n = static_cast<int>(g.size()) - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  Integer exponent;
  mpz_ui_pow_ui(exponent.get_mpz_t(), F.p, static_cast<unsigned long>(d));
  exponent = (exponent - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, F.p - 1);
  for (;;) {
    FpPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = dist(rng);
    F.trim(a);
    if (a.size() <= 1) continue;
    FpPoly h = F.gcd(a, g);
    if (h.size() > 1 && h.size() < g.size()) {
      equal_degree(F, h, d, rng, out);
      equal_degree(F, F.divmod(g, h).first, d, rng, out);
      return;
    }
    FpPoly b = F.sub(F.powmod(a, exponent, g), FpPoly{1});
    h = F.gcd(b, g);
    if (h.size() > 1 && h.size() < g.size()) {
      equal_degree(F, h, d, rng, out);
      equal_degree(F, F.divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a squarefree monic f over F_p (p odd).
std::vector<FpPoly> factor_mod_p(const Fp& F, FpPoly f) {
  std::vector<FpPoly> out;
  std::mt19937_64 rng(0x5eed5eedULL + F.p);
  FpPoly x{0, 1};
  FpPoly h = x;
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = F.powmod(h, Integer(F.p), f);
    FpPoly g = F.gcd(F.sub(h, x), f);
    if (g.size() > 1) {
      equal_degree(F, g, d, rng, out);
      f = F.divmod(f, g).first;
      h = F.mod(h, f);
    }
  }
  if (f.size() > 1) out.push_back(F.monic(f));
  return out;
}

// ---- arithmetic in (Z/m)[x] ----

struct Zm {
  Integer m;

  Integer red(const Integer& c) const {
    Integer r = c % m;
    if (r < 0) r += m;
    return r;
  }
  void trim(ZPoly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  ZPoly norm(ZPoly a) const {
    for (auto& c : a) c = red(c);
    trim(a);
    return a;
  }
  ZPoly add(ZPoly a, const ZPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return norm(std::move(a));
  }
  ZPoly sub(ZPoly a, const ZPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return norm(std::move(a));
  }
  ZPoly mul(const ZPoly& a, const ZPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return norm(std::move(r));
  }
  // Division by a monic divisor.
  std::pair<ZPoly, ZPoly> divmod_monic(ZPoly a, const ZPoly& b) const {
    if (a.size() < b.size()) return {{}, a};
    ZPoly q(a.size() - b.size() + 1, Integer(0));
    for (std::size_t k = a.size(); k-- >= b.size();) {
      Integer c = red(a[k]);
      q[k - (b.size() - 1)] = c;
      if (c != 0) {
        for (std::size_t j = 0; j < b.size(); ++j) a[k - (b.size() - 1) + j] -= c * b[j];
      }
      if (k == 0) break;
    }
    a.resize(b.size() - 1);
    return {norm(std::move(q)), norm(std::move(a))};
  }
};

ZPoly lift_fp(const FpPoly& a) {
  ZPoly r;
  r.reserve(a.size());
  for (u64 c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

FpPoly product_mod_p(const Fp& F, const std::vector<FpPoly>& fs) {
  FpPoly r{1};
  for (const auto& f : fs) r = F.mul(r, f);
  return r;
}

// Lifts the monic factorization f = prod(factors) mod p to modulus
// p^(2^steps). f is monic modulo the target modulus.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<FpPoly>& factors, u64 p, int steps) {
  Integer target;
  mpz_ui_pow_ui(target.get_mpz_t(), p, 1ul << steps);
  if (factors.size() == 1) return {Zm{target}.norm(f)};
  const Fp F{p};
  const std::size_t half = factors.size() / 2;
  std::vector<FpPoly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<FpPoly> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
  FpPoly g0 = product_mod_p(F, left);
  FpPoly h0 = product_mod_p(F, right);
  FpPoly s0, t0;
  F.xgcd(g0, h0, s0, t0);
  ZPoly g = lift_fp(g0), h = lift_fp(h0), s = lift_fp(s0), t = lift_fp(t0);
  Integer m = p;
  for (int step = 0; step < steps; ++step) {
    Zm Z{m * m};
    ZPoly fm = Z.norm(f);
    ZPoly e = Z.sub(fm, Z.mul(g, h));
    auto [q, r] = Z.divmod_monic(Z.mul(s, e), h);
    ZPoly g1 = Z.add(Z.add(g, Z.mul(t, e)), Z.mul(q, g));
    ZPoly h1 = Z.add(h, r);
    ZPoly b = Z.sub(Z.add(Z.mul(s, g1), Z.mul(t, h1)), ZPoly{Integer(1)});
    auto [c, d] = Z.divmod_monic(Z.mul(s, b), h1);
    ZPoly s1 = Z.sub(s, d);
    ZPoly t1 = Z.sub(Z.sub(t, Z.mul(t, b)), Z.mul(c, g1));
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
    m = Z.m;
  }
  std::vector<ZPoly> out = hensel_lift(g, left, p, steps);
  std::vector<ZPoly> rest = hensel_lift(h, right, p, steps);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive(ZPoly f) {
  Integer g = content(f);
  if (g != 0 && g != 1) {
    for (auto& c : f) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  if (!f.empty() && f.back() < 0) {
    for (auto& c : f) c = -c;
  }
  return f;
}

ZPoly to_primitive_z(const Poly& f) {
  Integer l = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  for (const auto& c : f.coefficients()) z.push_back(c.get_num() * (l / c.get_den()));
  return primitive(std::move(z));
}

Poly to_monic_q(const ZPoly& f) {
  std::vector<Rational> c;
  for (const auto& x : f) c.emplace_back(x);
  return Poly(std::move(c)).monic();
}

// Exact division over Z; nullopt when b does not divide a.
std::optional<ZPoly> divide_exact(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) return std::nullopt;
  ZPoly q(a.size() - b.size() + 1, Integer(0));
  const Integer& lb = b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (!mpz_divisible_p(a[k].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer c = a[k] / lb;
    q[k - (b.size() - 1)] = c;
    if (c != 0) {
      for (std::size_t j = 0; j < b.size(); ++j) a[k - (b.size() - 1) + j] -= c * b[j];
    }
    if (k == 0) break;
  }
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    if (a[i] != 0) return std::nullopt;
  }
  return q;
}

ZPoly symmetric(ZPoly f, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : f) {
    c %= m;
    if (c < 0) c += m;
    if (c > half) c -= m;
  }
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

bool is_squarefree_mod(const ZPoly& f, u64 p) {
  Fp F{p};
  FpPoly fp = reduce(f, p);
  if (fp.size() != f.size()) return false;
  return F.gcd(fp, F.derivative(fp)).size() == 1;
}

// Irreducible primitive factors of a squarefree primitive f with deg >= 2.
std::vector<ZPoly> zassenhaus(ZPoly f) {
  const int n = static_cast<int>(f.size()) - 1;
  std::vector<ZPoly> out;
  if (f[0] == 0) {
    // f = t * rest; squarefree so t appears once.
    out.push_back(ZPoly{Integer(0), Integer(1)});
    f.erase(f.begin());
    if (f.size() <= 2) {
      if (f.size() == 2) out.push_back(primitive(f));
      return out;
    }
  }
  // Pick the good prime with the fewest modular factors among the first few.
  u64 best_p = 0;
  std::vector<FpPoly> best;
  int tried = 0;
  for (u64 p = 3; tried < 6 && p < (1ull << 30); p += 2) {
    if (!is_prime(Integer(static_cast<unsigned long>(p)))) continue;
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) continue;
    if (!is_squarefree_mod(f, p)) continue;
    Fp F{p};
    std::vector<FpPoly> fs = factor_mod_p(F, F.monic(reduce(f, p)));
    ++tried;
    if (best_p == 0 || fs.size() < best.size()) {
      best_p = p;
      best = std::move(fs);
    }
    if (best.size() == 1) break;
  }
  if (best.size() == 1) {
    out.push_back(primitive(f));
    return out;
  }
  // Coefficient bound for factors (Mignotte): 2^n * ||f||_2, times the
  // leading coefficient for the recombination trick, times 2 for symmetry.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer bound = (Integer(1) << static_cast<unsigned long>(n)) * root * abs(f.back()) * 2;
  int steps = 0;
  Integer modulus = best_p;
  while (modulus <= bound) {
    modulus *= modulus;
    ++steps;
  }
  Zm Z{modulus};
  Integer lc = f.back();
  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
  ZPoly fmonic = f;
  for (auto& c : fmonic) c = Z.red(c * lc_inv);
  std::vector<ZPoly> lifted = hensel_lift(fmonic, best, best_p, steps);

  // Recombination.
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZPoly g{f.back()};
      for (std::size_t i : idx) g = Z.mul(g, lifted[i]);
      g = primitive(symmetric(g, modulus));
      if (auto q = divide_exact(f, g)) {
        out.push_back(g);
        f = primitive(*q);
        std::vector<ZPoly> rest;
        for (std::size_t i = 0; i < lifted.size(); ++i) {
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(lifted[i]);
        }
        lifted = std::move(rest);
        found = true;
        break;
      }
      // Next combination.
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == lifted.size() - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (f.size() > 1) out.push_back(primitive(f));
  return out;
}

}  // namespace

FactoredPoly factor_q(const Poly& f) {
  if (f.is_zero()) throw InvalidArgument("factor_q: zero polynomial");
  if (f.degree() > kMaxPolyDegree) {
    throw ComputationLimit("factor_q: degree " + std::to_string(f.degree()) + " exceeds cap " +
                           std::to_string(kMaxPolyDegree));
  }
  FactoredPoly out;
  out.unit = f.leading();
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    ZPoly z = to_primitive_z(part);
    if (z.size() <= 2) {
      out.factors.emplace_back(to_monic_q(z), mult);
      continue;
    }
    for (const auto& g : zassenhaus(z)) out.factors.emplace_back(to_monic_q(g), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

}  // namespace vconc
