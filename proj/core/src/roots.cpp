// Real root isolation (Sturm) and the arcs cut out of the unit circle by the
// roots of a polynomial.

#include <algorithm>

#include "vconc/errors.hpp"
#include "vconc/poly.hpp"

namespace vconc {
namespace {

std::vector<Poly> sturm_sequence(const Poly& f) {
  std::vector<Poly> seq{f, f.derivative()};
  while (!seq.back().is_zero()) {
    Poly r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

int variations(const std::vector<Poly>& seq, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& p : seq) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

void require_squarefree(const Poly& f) {
  if (f.is_zero()) throw InvalidArgument("root isolation: zero polynomial");
  if (gcd(f, f.derivative()).degree() > 0) throw InvalidArgument("root isolation: polynomial is not squarefree");
}

Rational cauchy_bound(const Poly& f) {
  Rational m = 0;
  const auto& c = f.coefficients();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, Rational(abs(c[i] / f.leading())));
  return m + 1;
}

void isolate(const std::vector<Poly>& seq, const Rational& lo, const Rational& hi, int count,
             std::vector<Interval>& out) {
  if (count == 0) return;
  const Poly& f = seq.front();
  if (count == 1) {
    if (f.sign_at(hi) == 0) {
      out.push_back({hi, hi});
    } else {
      out.push_back({lo, hi});
    }
    return;
  }
  Rational mid = (lo + hi) / 2;
  int left = variations(seq, lo) - variations(seq, mid);
  isolate(seq, lo, mid, left, out);
  isolate(seq, mid, hi, count - left, out);
}

// One bisection step on an open isolating interval.
Interval bisect(const Poly& f, const std::vector<Poly>& seq, const Interval& iv) {
  if (iv.is_point()) return iv;
  Rational mid = (iv.lo + iv.hi) / 2;
  if (f.sign_at(mid) == 0) return {mid, mid};
  if (variations(seq, iv.lo) - variations(seq, mid) == 1) return {iv.lo, mid};
  return {mid, iv.hi};
}

// Simplest rational in [lo, hi], 0 <= lo <= hi; hi may be absent (unbounded).
Rational simplest_between(const Rational& lo, const std::optional<Rational>& hi) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (!hi || Rational(fl + 1) <= *hi) return Rational(fl + 1);
  Rational inner = simplest_between(1 / (*hi - fl), Rational(1 / (lo - fl)));
  return Rational(fl) + 1 / inner;
}

// Simplest positive rational s with low < s^2 < high (high absent = unbounded).
Rational simplest_root_between(const Rational& low, const std::optional<Rational>& high) {
  for (unsigned k = 1;; ++k) {
    Integer scale = Integer(1) << k;
    Integer scale2 = scale * scale;
    Integer r;
    Integer fl = (low.get_num() * scale2) / low.get_den();
    mpz_sqrt(r.get_mpz_t(), fl.get_mpz_t());
    Rational lo_s(r + 1, scale);
    lo_s.canonicalize();
    if (!high) return simplest_between(lo_s, std::nullopt);
    Integer fh = (high->get_num() * scale2) / high->get_den();
    Integer r2;
    mpz_sqrt(r2.get_mpz_t(), fh.get_mpz_t());
    Rational hi_s(r2, scale);
    hi_s.canonicalize();
    if (hi_s * hi_s >= *high) hi_s -= Rational(1, scale);
    if (lo_s <= hi_s) return simplest_between(lo_s, hi_s);
  }
}

bool is_palindromic(const Poly& f) {
  const auto& c = f.coefficients();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

struct Located {
  Poly g;
  std::vector<Poly> seq;
  Interval iv;
};

// Closed-interval contact; distinct roots must be separated by a gap.
bool touches(const Interval& a, const Interval& b) { return a.lo <= b.hi && b.lo <= a.hi; }

}  // namespace

int sturm_count(const Poly& f, const Rational& a, const Rational& b) {
  require_squarefree(f);
  if (b <= a) return 0;
  auto seq = sturm_sequence(f);
  return variations(seq, a) - variations(seq, b);
}

std::vector<Interval> sturm_isolate(const Poly& f) {
  require_squarefree(f);
  std::vector<Interval> out;
  if (f.degree() < 1) return out;
  auto seq = sturm_sequence(f);
  Rational m = cauchy_bound(f);
  isolate(seq, -m, m, variations(seq, -m) - variations(seq, m), out);
  return out;
}

Interval refine_root(const Poly& f, Interval iv, const Rational& max_width) {
  require_squarefree(f);
  auto seq = sturm_sequence(f);
  while (!iv.is_point() && iv.width() > max_width) iv = bisect(f, seq, iv);
  return iv;
}

Poly trace_polynomial(const Poly& f) {
  if (f.degree() % 2 != 0 || !is_palindromic(f)) {
    throw InvalidArgument("trace_polynomial: input must be palindromic of even degree");
  }
  const int d = f.degree() / 2;
  Poly u{0, 1};
  Poly prev = Poly::constant(2), cur = u;
  Poly g = Poly::constant(f.coeff(static_cast<std::size_t>(d)));
  for (int k = 1; k <= d; ++k) {
    g += cur * f.coeff(static_cast<std::size_t>(d + k));
    Poly next = u * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return g;
}

std::string CirclePoint::to_string() const { return "(" + vconc::to_string(x) + ", " + vconc::to_string(y) + ")"; }

CirclePoint circle_point_from_slope(const Rational& s) {
  Rational d = 1 + s * s;
  return {(1 - s * s) / d, 2 * s / d};
}

CircleArcs circle_arcs(const Poly& f) {
  if (f.is_zero()) throw InvalidArgument("circle_arcs: zero polynomial");
  FactoredPoly fp = factor_q(f);
  bool minus_one = false;
  std::vector<Located> upper;
  const Rational two = 2;
  for (const auto& [lambda, mult] : fp.factors) {
    if (lambda.degree() == 1) {
      if (lambda == Poly::linear(-1)) minus_one = true;
      continue;
    }
    if (!is_palindromic(lambda) || lambda.degree() % 2 != 0) continue;
    Poly g = trace_polynomial(lambda);
    auto seq = sturm_sequence(g);
    for (Interval iv : sturm_isolate(g)) {
      while (!iv.is_point() && ((iv.lo < two && iv.hi >= two) || (iv.lo <= -two && iv.hi > -two))) {
        iv = bisect(g, seq, iv);
      }
      bool inside = iv.is_point() ? (iv.lo > -two && iv.lo < two) : (iv.lo > -two && iv.hi < two);
      if (inside) upper.push_back({g, seq, iv});
    }
  }
  // Separate the intervals so they can be ordered.
  for (std::size_t i = 0; i < upper.size(); ++i) {
    for (std::size_t j = i + 1; j < upper.size(); ++j) {
      while (touches(upper[i].iv, upper[j].iv)) {
        upper[i].iv = bisect(upper[i].g, upper[i].seq, upper[i].iv);
        upper[j].iv = bisect(upper[j].g, upper[j].seq, upper[j].iv);
      }
    }
  }
  // Increasing angle on the upper half means decreasing u.
  std::sort(upper.begin(), upper.end(), [](const Located& a, const Located& b) { return a.iv.lo > b.iv.hi; });

  CircleArcs out;
  for (const auto& r : upper) out.roots.push_back({r.g, r.iv, true});
  if (minus_one) out.roots.push_back({Poly{2, 1}, {-two, -two}, true});
  for (auto it = upper.rbegin(); it != upper.rend(); ++it) out.roots.push_back({it->g, it->iv, false});

  // Upper-half samples: arc k lies between root k-1 (or omega = 1) and root k.
  std::vector<CirclePoint> upper_samples;
  auto s2 = [](const Rational& u) { return Rational((2 - u) / (2 + u)); };
  const std::size_t n_up = upper.size();
  for (std::size_t k = 0; k < n_up; ++k) {
    Rational b = k == 0 ? two : upper[k - 1].iv.lo;
    Rational a = upper[k].iv.hi;
    upper_samples.push_back(circle_point_from_slope(simplest_root_between(s2(b), s2(a))));
  }
  if (minus_one) {
    Rational b = n_up == 0 ? two : upper[n_up - 1].iv.lo;
    upper_samples.push_back(circle_point_from_slope(simplest_root_between(s2(b), std::nullopt)));
  }
  out.samples = upper_samples;
  if (!minus_one) out.samples.push_back({Rational(-1), Rational(0)});
  for (auto it = upper_samples.rbegin(); it != upper_samples.rend(); ++it) out.samples.push_back({it->x, -it->y});
  return out;
}

}  // namespace vconc
