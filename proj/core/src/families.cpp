#include "vconc/families.hpp"

#include <charconv>

#include "vconc/errors.hpp"

namespace vconc {

SeifertCouple kmn_couple(const Integer& m, const Integer& n, int i) {
  if (i > kMaxShift || i < -kMaxShift) {
    throw ComputationLimit("kmn_couple: |i| = " + std::to_string(i < 0 ? -i : i) + " exceeds " +
                           std::to_string(kMaxShift));
  }
  RatMatrix plus{{Rational(m), 0}, {0, Rational(-n)}};
  RatMatrix minus{{Rational(m), 1}, {-1, Rational(-n)}};
  SeifertCouple c = validate_couple(plus, minus, Ring::kZ);
  const int direction = i < 0 ? -1 : 1;
  const RatMatrix h = RatMatrix::hyperbolic(1);
  for (int step = 0; step < (i < 0 ? -i : i); ++step) {
    RatMatrix p(2, c.dim());
    for (std::size_t b = 0; b < c.dim(); b += 2) p.set_block(0, b, h);
    c = ambient_shift(c, direction, 1, p);
  }
  return c;
}

namespace {

SeifertCouple knot_6_85091() {
  RatMatrix plus{{1, -1, -1, 0}, {-1, 0, 1, 0}, {1, -1, 0, 1}, {0, 0, 0, 1}};
  RatMatrix minus{{1, -2, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 1}};
  return validate_couple(plus, minus, Ring::kZ);
}

SeifertCouple knot_5_2433() {
  RatMatrix plus{{1, 0, -1, 0}, {0, 1, 0, -1}, {0, -1, 1, 0}, {0, 0, 0, 1}};
  RatMatrix minus{{1, 1, -1, -1}, {-1, 1, 0, -1}, {0, -1, 1, 1}, {1, 0, -1, 1}};
  return validate_couple(plus, minus, Ring::kZ);
}

// "kmn(m,n,i)"
std::optional<SeifertCouple> parse_kmn(std::string_view name) {
  if (name == "kmn") return kmn_couple(3, 7, 0);
  if (!name.starts_with("kmn(") || !name.ends_with(")")) return std::nullopt;
  std::string_view body = name.substr(4, name.size() - 5);
  long v[3];
  for (int k = 0; k < 3; ++k) {
    std::size_t comma = k < 2 ? body.find(',') : body.size();
    if (comma == std::string_view::npos) return std::nullopt;
    std::string_view part = body.substr(0, comma);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v[k]);
    if (ec != std::errc() || ptr != part.data() + part.size()) return std::nullopt;
    body = k < 2 ? body.substr(comma + 1) : std::string_view();
  }
  return kmn_couple(Integer(v[0]), Integer(v[1]), static_cast<int>(v[2]));
}

}  // namespace

SeifertCouple fixture(std::string_view name) {
  if (name == "6.85091") return knot_6_85091();
  if (name == "5.2433") return knot_5_2433();
  if (auto c = parse_kmn(name)) return *c;
  throw NotFound("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() { return {"6.85091", "5.2433", "kmn"}; }

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::kCertifiedOrder2:
      return "certified-order-2";
    case Criterion::kInconclusive:
      return "inconclusive";
    case Criterion::kInapplicable:
      return "inapplicable";
  }
  return "?";
}

Criterion order2_criteria(const Integer& m, const Integer& n, const Integer& p) {
  if (m == n || m == 2 || n == 2 || !is_prime(m) || !is_prime(n)) {
    throw InvalidArgument("order2_criteria: m and n must be distinct odd primes");
  }
  if (!is_prime(p)) throw InvalidArgument("order2_criteria: " + p.get_str() + " is not prime");
  const Integer mn = m * n;
  if (mn % 4 != 1) return Criterion::kInapplicable;
  const Place place = Place::prime(p);
  const Integer q = 4 * mn + 1;
  const bool sq_mn = is_square_qp(Rational(mn), place);
  const bool sq_q = is_square_qp(Rational(q), place);
  const bool sq_prod = is_square_qp(Rational(mn * q), place);
  if ((!sq_mn && !sq_q && !sq_prod) || (sq_prod && !sq_mn)) return Criterion::kCertifiedOrder2;
  return Criterion::kInconclusive;
}

std::vector<FamilyMember> dirichlet_family(long k_max) {
  if (k_max < 0) throw InvalidArgument("dirichlet_family: k_max must be non-negative");
  if (k_max > 10000) throw ComputationLimit("dirichlet_family: k_max exceeds 10^4");
  std::vector<FamilyMember> out;
  for (long k = 0; k <= k_max; ++k) {
    Integer m = 3 + Integer(4 * 19 * 19) * k;
    out.push_back({k, m, is_prime(m)});
  }
  return out;
}

}  // namespace vconc
