#include "vconc/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "vconc/errors.hpp"

namespace vconc {
namespace {

void add_primes(std::set<Integer>& ps, const Rational& x) {
  if (x == 0) return;
  for (const auto& q : prime_divisors(x.get_num())) ps.insert(q);
  for (const auto& q : prime_divisors(x.get_den())) ps.insert(q);
}

bool all_zero(const std::vector<ArcValue>& profile) {
  return std::all_of(profile.begin(), profile.end(), [](const ArcValue& v) { return v.value == 0; });
}

// Metabolic test on a matrix whose arc profile is already known to vanish.
bool metabolic_given_profile(const DirectedMatrix& a) {
  DirectedMatrix rep = nonsingular_representative(a);
  if (rep.dim() == 0) return true;
  for (const auto& piece : primary_decompose(from_directed(rep))) {
    switch (piece.symmetry) {
      case Symmetry::kNonSymmetric:
        break;
      case Symmetry::kTMinusOne:
        if (!is_trivial_wittq(witt_class(piece.b))) return false;
        break;
      case Symmetry::kSymmetric: {
        if (piece.exponent % 2 != 0) return false;
        auto inv = factor_invariants(piece, candidate_primes(piece));
        for (const auto& [p, m] : inv.mu)
          if (m != 1) return false;
        break;
      }
    }
  }
  return true;
}

}  // namespace

Rational discriminant(const Poly& f) {
  const int n = f.degree();
  if (n < 1) throw InvalidArgument("discriminant: degree must be positive");
  if (n == 1) return 1;
  Poly g = f.derivative();
  const int m = g.degree();
  // Sylvester matrix of f (degree n) and g (degree m).
  const std::size_t size = static_cast<std::size_t>(n + m);
  RatMatrix s(size, size);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s(static_cast<std::size_t>(i), static_cast<std::size_t>(i + k)) = f.coeff(static_cast<std::size_t>(n - k));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k)
      s(static_cast<std::size_t>(m + i), static_cast<std::size_t>(i + k)) = g.coeff(static_cast<std::size_t>(m - k));
  Rational res = det(s);
  Rational d = res / f.leading();
  if ((n * (n - 1) / 2) % 2 != 0) d = -d;
  return d;
}

int mu_symbol(const std::vector<Rational>& diag, const Place& p) {
  if (diag.size() % 2 != 0) throw InvalidArgument("mu: form must have even rank");
  const long r = static_cast<long>(diag.size() / 2);
  Rational d = 1;
  for (const auto& a : diag) d *= a;
  int mu = 1;
  if ((r * (r + 3) / 2) % 2 != 0) mu *= hilbert_symbol(-1, -1, p);
  if (r % 2 != 0) mu *= hilbert_symbol(d, -1, p);
  // Hasse symbol over i <= j: the i < j product times prod (a_i, a_i) = (det, -1).
  mu *= hasse_symbol(diag, p) * hilbert_symbol(d, -1, p);
  return mu;
}

std::vector<Integer> candidate_primes(const PrimaryPiece& piece) {
  std::set<Integer> ps{Integer(2)};
  for (const auto& a : congruent_diagonalize(piece.b).diag) add_primes(ps, a);
  add_primes(ps, piece.factor(1) * piece.factor(-1));
  if (piece.factor.degree() >= 2) add_primes(ps, discriminant(piece.factor));
  return {ps.begin(), ps.end()};
}

FactorInvariants factor_invariants(const PrimaryPiece& piece, const std::vector<Integer>& primes) {
  if (piece.symmetry == Symmetry::kNonSymmetric) {
    throw InvalidArgument("factor_invariants: " + piece.factor.to_string() + " is not symmetric");
  }
  const std::size_t n = piece.b.rows();
  if (n % 2 != 0) throw InvalidArgument("factor_invariants: restricted form has odd rank");
  auto dz = congruent_diagonalize(piece.b);
  FactorInvariants out;
  out.factor = piece.factor;
  out.exponent = piece.exponent;
  out.epsilon = piece.exponent % 2;
  Rational d = det(piece.b);
  if ((n / 2) % 2 != 0) d = -d;
  out.discriminant = squarefree_part(d);
  for (const auto& a : dz.diag) out.sigma += sgn(a);
  for (const auto& p : primes) out.mu.emplace_back(p, mu_symbol(dz.diag, Place::prime(p)));
  out.needs_review = piece.factor.degree() >= 4;
  return out;
}

int hermitian_signature(const DirectedMatrix& a, const CirclePoint& w) {
  const RatMatrix& m = a.matrix();
  const std::size_t n = m.rows();
  RatMatrix t = m.transpose();
  RatMatrix re = (m + t) * Rational(1 - w.x);
  RatMatrix im = (t - m) * w.y;
  RatMatrix big(2 * n, 2 * n);
  big.set_block(0, 0, re);
  big.set_block(0, n, -im);
  big.set_block(n, 0, im);
  big.set_block(n, n, re);
  auto dz = congruent_diagonalize(big);
  int s = 0;
  for (const auto& x : dz.diag) {
    if (x == 0) throw Error("hermitian_signature: sample point is a root of the Alexander polynomial");
    s += sgn(x);
  }
  return s / 2;
}

std::vector<ArcValue> signature_profile(const DirectedMatrix& a) {
  if (a.dim() == 0) return {{{Rational(-1), Rational(0)}, 0}};
  const RatMatrix& m = a.matrix();
  Poly delta = det_pencil(m, -m.transpose());
  std::vector<ArcValue> out;
  for (const auto& w : circle_arcs(delta).samples) out.push_back({w, hermitian_signature(a, w)});
  return out;
}

bool is_metabolic(const DirectedMatrix& a) {
  if (!all_zero(signature_profile(a))) return false;
  return metabolic_given_profile(a);
}

Order order(const DirectedMatrix& a) {
  if (!all_zero(signature_profile(a))) return Order::infinity();
  for (int k : {1, 2, 4}) {
    if (metabolic_given_profile(multiple(a, static_cast<unsigned>(k)))) return Order::finite(k);
  }
  throw Error("order: four-fold sum is not metabolic although the signature profile vanishes");
}

bool concordant(const DirectedMatrix& a, const DirectedMatrix& b) { return is_metabolic(block_sum(a, negate(b))); }

Poly alexander(const SeifertCouple& c, AlexanderSide side) {
  switch (side) {
    case AlexanderSide::kPlus:
      return det_pencil(c.a_plus, -c.a_plus.transpose());
    case AlexanderSide::kMinus:
      return det_pencil(c.a_minus, -c.a_minus.transpose());
    case AlexanderSide::kMixed:
      return det_pencil(-c.a_plus, c.a_minus);
  }
  return {};
}

std::optional<Order> order_via_quadratic_criterion(const DirectedMatrix& a) {
  DirectedMatrix rep = nonsingular_representative(a);
  if (rep.dim() == 0) return Order::finite(1);
  auto pieces = primary_decompose(from_directed(rep));
  for (const auto& piece : pieces) {
    if (piece.symmetry == Symmetry::kSymmetric && piece.factor.degree() != 2) return std::nullopt;
  }
  int k = 1;
  for (const auto& piece : pieces) {
    if (piece.symmetry == Symmetry::kNonSymmetric) continue;
    if (piece.symmetry == Symmetry::kTMinusOne) {
      auto wo = witt_order(witt_class(piece.b));
      if (!wo) return Order::infinity();
      k = std::lcm(k, *wo);
      continue;
    }
    const Rational ends = piece.factor(1) * piece.factor(-1);
    if (ends > 0 && signature(piece.b) != 0) return Order::infinity();
    if (piece.exponent % 2 != 0) {
      bool four = false;
      for (const auto& p : candidate_primes(piece)) {
        if (p % 4 == 3 && padic_val(ends, p) % 2 != 0) four = true;
      }
      k = std::lcm(k, four ? 4 : 2);
    } else {
      auto inv = factor_invariants(piece, candidate_primes(piece));
      bool bad = std::any_of(inv.mu.begin(), inv.mu.end(), [](const auto& pm) { return pm.second != 1; });
      k = std::lcm(k, bad ? 2 : 1);
    }
  }
  return Order::finite(k);
}

InvariantReport invariant_report(const DirectedMatrix& a, std::string descriptor) {
  InvariantReport r;
  r.descriptor = std::move(descriptor);
  r.input_dim = a.dim();
  r.profile = signature_profile(a);
  DirectedMatrix rep = nonsingular_representative(a);
  r.representative_dim = rep.dim();
  if (rep.dim() > 0) {
    IsometricStructure st = from_directed(rep);
    r.delta = factor_q(char_poly(st.s));
    for (const auto& piece : primary_decompose(st)) {
      if (piece.symmetry == Symmetry::kNonSymmetric) {
        r.skipped.push_back(piece.factor);
        continue;
      }
      r.factors.push_back(factor_invariants(piece, candidate_primes(piece)));
      if (piece.symmetry == Symmetry::kTMinusOne) r.t_minus_one_class = witt_class(piece.b);
    }
  } else {
    r.delta.unit = 1;
  }
  if (!all_zero(r.profile)) {
    r.metabolic = false;
    r.order = Order::infinity();
  } else {
    r.order = order(a);
    r.metabolic = r.order == Order::finite(1);
  }
  return r;
}

}  // namespace vconc
